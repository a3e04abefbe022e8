#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "newtonlab/fp_poly.hpp"

namespace newtonlab {

// Hard ceiling on extension degrees; the configurable guard sits below it.
inline constexpr int kMaxFieldDegree = 32;
inline constexpr int kDefaultFieldGuard = 16;

// Element of F_{p^e} as coefficients of 1, t, ..., t^{e-1} modulo the tower's
// modulus. Unused trailing slots are zero.
using FieldElement = std::array<std::int32_t, kMaxFieldDegree>;

// F_{p^e} = F_p[t] / (modulus) with the lexicographically least monic
// irreducible modulus (coefficients compared from t^{e-1} down to t^0).
class FieldTower {
 public:
  // DegreeTooLarge for e outside [1, guard]; InvalidCover for p not an odd
  // prime.
  static FieldTower build(std::int64_t p, int e, int guard = kDefaultFieldGuard);

  std::int64_t prime() const { return p_; }
  int degree() const { return e_; }
  const FpPoly& modulus() const { return modulus_; }
  std::uint64_t size() const { return size_; }
  // Tr(t^i) for i < e.
  const std::vector<std::int32_t>& trace_basis() const { return trace_basis_; }

  FieldElement zero() const { return FieldElement{}; }
  FieldElement one() const;
  FieldElement from_prime(std::int64_t c) const;
  // Element whose coefficients are the base-p digits of `index`.
  FieldElement from_index(std::uint64_t index) const;
  FieldElement generator() const;  // the class of t

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inverse(const FieldElement& a) const;  // DomainError on zero
  FieldElement pow(FieldElement a, std::uint64_t n) const;
  FieldElement frobenius(const FieldElement& a) const;  // a^p
  // Absolute trace to F_p from the precomputed basis traces.
  std::int64_t trace(const FieldElement& a) const;
  // sum_{i<e} a^{p^i}; must lie in F_p. Used to cross-check trace().
  FieldElement trace_by_frobenius(const FieldElement& a) const;
  bool is_zero(const FieldElement& a) const;

 private:
  FpPoly to_poly(const FieldElement& a) const;
  FieldElement from_poly(const FpPoly& f) const;

  std::int64_t p_ = 0;
  int e_ = 0;
  std::uint64_t size_ = 0;
  FpPoly modulus_{3};
  std::vector<std::int32_t> trace_basis_;
};

// The least monic irreducible of degree e over F_p in the order above.
FpPoly least_irreducible(std::int64_t p, int e);

}  // namespace newtonlab
