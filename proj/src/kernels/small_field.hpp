#pragma once

// Fixed-size F_{p^e} arithmetic shared by the scalar and vector kernels.

#include <array>
#include <cstdint>
#include <vector>

#include "newtonlab/kernels.hpp"

namespace newtonlab::kernels::detail {

inline constexpr int kMaxDegree = 32;

class SmallField {
 public:
  explicit SmallField(const CountProblem& problem);

  std::int32_t p() const { return p_; }
  int e() const { return e_; }
  std::int32_t neg_modulus(int i) const { return neg_mod_[static_cast<std::size_t>(i)]; }
  std::int32_t trace_basis(int i) const { return trace_[static_cast<std::size_t>(i)]; }

  void mul(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const;
  // False (and out untouched) when a is zero.
  bool inverse(const std::int32_t* a, std::int32_t* out) const;
  std::int32_t trace(const std::int32_t* a) const;
  // out = poly(x) for a polynomial with F_p coefficients (lowest first).
  void horner(const std::vector<std::int32_t>& poly, const std::int32_t* x, std::int32_t* out) const;
  bool is_zero(const std::int32_t* a) const;

 private:
  std::int32_t p_;
  int e_;
  std::array<std::int32_t, kMaxDegree + 1> modulus_{};  // monic, degree e
  std::array<std::int32_t, kMaxDegree> neg_mod_{};
  std::array<std::int32_t, kMaxDegree> trace_{};
  std::vector<std::int32_t> inv_;
};

// Little-endian base-p digit counter used to walk field elements in index
// order.
class Odometer {
 public:
  Odometer(std::int32_t p, int e, std::uint64_t start);
  const std::int32_t* digits() const { return digits_.data(); }
  void next();

 private:
  std::int32_t p_;
  int e_;
  std::array<std::int32_t, kMaxDegree> digits_{};
};

std::vector<std::int32_t> trimmed(std::span<const std::int32_t> poly, std::int32_t p);

}  // namespace newtonlab::kernels::detail
