#include "newtonlab/field.hpp"

#include <algorithm>
#include <limits>

namespace newtonlab {

FpPoly least_irreducible(std::int64_t p, int e) {
  // Odometer over (c_{e-1}, ..., c_0) with c_{e-1} most significant.
  std::vector<std::int64_t> high_first(static_cast<std::size_t>(e), 0);
  while (true) {
    std::vector<std::int64_t> coeffs(high_first.rbegin(), high_first.rend());
    coeffs.push_back(1);
    FpPoly cand(p, std::move(coeffs));
    if (is_irreducible(cand)) return cand;
    int pos = e - 1;
    while (pos >= 0 && ++high_first[static_cast<std::size_t>(pos)] == p) {
      high_first[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) fail(ErrorCode::DomainError, "no irreducible polynomial found");
  }
}

FieldTower FieldTower::build(std::int64_t p, int e, int guard) {
  if (!is_odd_prime(p)) fail(ErrorCode::InvalidCover, "p=" + std::to_string(p) + " is not an odd prime");
  if (p > 46340) fail(ErrorCode::DomainError, "p too large for 32-bit field arithmetic");
  guard = std::min(guard, kMaxFieldDegree);
  if (e < 1 || e > guard) {
    fail(ErrorCode::DegreeTooLarge, "extension degree " + std::to_string(e) + " outside [1," + std::to_string(guard) + "]");
  }
  FieldTower f;
  f.p_ = p;
  f.e_ = e;
  std::uint64_t size = 1;
  for (int i = 0; i < e; ++i) {
    if (size > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p)) {
      fail(ErrorCode::DegreeTooLarge, "field size overflows 64 bits");
    }
    size *= static_cast<std::uint64_t>(p);
  }
  f.size_ = size;
  f.modulus_ = least_irreducible(p, e);
  f.trace_basis_.resize(static_cast<std::size_t>(e));
  FieldElement basis{};
  for (int i = 0; i < e; ++i) {
    basis = f.from_poly(FpPoly::monomial(p, 1, i));
    const FieldElement tr = f.trace_by_frobenius(basis);
    f.trace_basis_[static_cast<std::size_t>(i)] = tr[0];
  }
  return f;
}

FpPoly FieldTower::to_poly(const FieldElement& a) const {
  return FpPoly(p_, std::vector<std::int64_t>(a.begin(), a.begin() + e_));
}

FieldElement FieldTower::from_poly(const FpPoly& f) const {
  const FpPoly r = f.divmod(modulus_).second;
  FieldElement out{};
  for (int i = 0; i <= r.degree(); ++i) out[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(r.coeff(i));
  return out;
}

FieldElement FieldTower::one() const { return from_prime(1); }

FieldElement FieldTower::from_prime(std::int64_t c) const {
  FieldElement out{};
  out[0] = static_cast<std::int32_t>(mod_p(c, p_));
  return out;
}

FieldElement FieldTower::from_index(std::uint64_t index) const {
  FieldElement out{};
  for (int i = 0; i < e_; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(index % static_cast<std::uint64_t>(p_));
    index /= static_cast<std::uint64_t>(p_);
  }
  return out;
}

FieldElement FieldTower::generator() const { return from_poly(FpPoly::monomial(p_, 1, 1)); }

FieldElement FieldTower::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement out{};
  for (int i = 0; i < e_; ++i) {
    const auto s = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(s >= p_ ? s - p_ : s);
  }
  return out;
}

FieldElement FieldTower::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement out{};
  for (int i = 0; i < e_; ++i) {
    const auto s = a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(s < 0 ? s + p_ : s);
  }
  return out;
}

FieldElement FieldTower::mul(const FieldElement& a, const FieldElement& b) const {
  if (e_ == 1) return from_prime(static_cast<std::int64_t>(a[0]) * b[0]);
  return from_poly(to_poly(a) * to_poly(b));
}

FieldElement FieldTower::inverse(const FieldElement& a) const {
  if (is_zero(a)) fail(ErrorCode::DomainError, "inverse of zero field element");
  if (e_ == 1) return from_prime(inv_mod(a[0], p_));
  // Extended Euclid in F_p[t]: s*a + t*modulus = 1.
  FpPoly r0 = modulus_, r1 = to_poly(a);
  FpPoly s0(p_), s1 = FpPoly::constant(p_, 1);
  while (r1.degree() > 0) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  return from_poly(s1.scaled(inv_mod(r1.coeff(0), p_)));
}

FieldElement FieldTower::pow(FieldElement a, std::uint64_t n) const {
  FieldElement result = one();
  while (n > 0) {
    if (n & 1) result = mul(result, a);
    a = mul(a, a);
    n >>= 1;
  }
  return result;
}

FieldElement FieldTower::frobenius(const FieldElement& a) const {
  return pow(a, static_cast<std::uint64_t>(p_));
}

std::int64_t FieldTower::trace(const FieldElement& a) const {
  std::int64_t acc = 0;
  for (int i = 0; i < e_; ++i) acc += static_cast<std::int64_t>(a[static_cast<std::size_t>(i)]) * trace_basis_[static_cast<std::size_t>(i)];
  return acc % p_;
}

FieldElement FieldTower::trace_by_frobenius(const FieldElement& a) const {
  FieldElement acc = zero();
  FieldElement term = a;
  for (int i = 0; i < e_; ++i) {
    acc = add(acc, term);
    term = frobenius(term);
  }
  return acc;
}

bool FieldTower::is_zero(const FieldElement& a) const {
  for (int i = 0; i < e_; ++i) {
    if (a[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

}  // namespace newtonlab
