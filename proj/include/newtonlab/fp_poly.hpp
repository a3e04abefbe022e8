#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "newtonlab/error.hpp"

namespace newtonlab {

bool is_prime(std::int64_t n);
bool is_odd_prime(std::int64_t n);

// Residue arithmetic in F_p, representatives in [0, p).
std::int64_t mod_p(std::int64_t a, std::int64_t p);
std::int64_t inv_mod(std::int64_t a, std::int64_t p);

// Dense univariate polynomial over F_p, coefficients lowest degree first,
// no trailing zeros. The zero polynomial has degree -1.
class FpPoly {
 public:
  explicit FpPoly(std::int64_t p) : p_(p) {}
  FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs);

  static FpPoly constant(std::int64_t p, std::int64_t c);
  // c * x^n
  static FpPoly monomial(std::int64_t p, std::int64_t c, int n);
  // x - a
  static FpPoly linear_root(std::int64_t p, std::int64_t a);

  std::int64_t prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  std::int64_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
  }
  std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  std::int64_t eval(std::int64_t x) const;
  FpPoly monic() const;
  FpPoly scaled(std::int64_t c) const;

  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  FpPoly operator-() const;

  // Quotient and remainder; divisor must be nonzero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;

  friend bool operator==(const FpPoly&, const FpPoly&) = default;

  // e.g. "x^2 + 2*x + 1"
  std::string str() const;

 private:
  void trim();
  std::int64_t p_;
  std::vector<std::int64_t> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);  // monic, or zero
FpPoly pow_mod(const FpPoly& base, std::uint64_t e, const FpPoly& modulus);
// (base)^(p^k) mod modulus, by repeated p-th powering.
FpPoly frobenius_power_mod(const FpPoly& base, int k, const FpPoly& modulus);
bool is_irreducible(const FpPoly& f);

struct Factor {
  FpPoly poly;  // monic irreducible
  int multiplicity = 0;
};

// Factorization of a nonzero polynomial into monic irreducibles, sorted by
// (degree, coefficient sequence). The leading constant is dropped.
std::vector<Factor> factor(const FpPoly& f);

// Reduced fraction num/den over F_p with monic denominator.
class RationalFunction {
 public:
  explicit RationalFunction(std::int64_t p) : num_(p), den_(FpPoly::constant(p, 1)) {}
  RationalFunction(FpPoly num, FpPoly den);
  explicit RationalFunction(FpPoly poly);

  std::int64_t prime() const { return num_.prime(); }
  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction pow(int n) const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string str() const;

 private:
  void normalize();
  FpPoly num_;
  FpPoly den_;
};

// Parses expressions in x with + - * / ^ (nonnegative integer exponents),
// parentheses and integer constants; constants are reduced mod p.
// Example: "(x^2*(x-1) + 1)/(x*(x-1))".
RationalFunction parse_rational_function(std::string_view text, std::int64_t p);

}  // namespace newtonlab
