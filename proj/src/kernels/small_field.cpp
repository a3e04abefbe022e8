#include "small_field.hpp"

#include "newtonlab/error.hpp"

namespace newtonlab::kernels::detail {

SmallField::SmallField(const CountProblem& problem) : p_(problem.p), e_(problem.e) {
  if (e_ < 1 || e_ > kMaxDegree || static_cast<int>(problem.modulus.size()) != e_ ||
      static_cast<int>(problem.trace_basis.size()) != e_) {
    fail(ErrorCode::DomainError, "malformed count problem");
  }
  for (int i = 0; i < e_; ++i) {
    const auto m = problem.modulus[static_cast<std::size_t>(i)];
    modulus_[static_cast<std::size_t>(i)] = m;
    neg_mod_[static_cast<std::size_t>(i)] = (p_ - m) % p_;
    trace_[static_cast<std::size_t>(i)] = problem.trace_basis[static_cast<std::size_t>(i)];
  }
  modulus_[static_cast<std::size_t>(e_)] = 1;
  inv_.assign(static_cast<std::size_t>(p_), 0);
  for (std::int32_t a = 1; a < p_; ++a) {
    for (std::int32_t b = 1; b < p_; ++b) {
      if (static_cast<std::int64_t>(a) * b % p_ == 1) {
        inv_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
  }
}

void SmallField::mul(const std::int32_t* a, const std::int32_t* b, std::int32_t* out) const {
  std::array<std::int64_t, 2 * kMaxDegree> prod{};
  for (int i = 0; i < e_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < e_; ++j) prod[static_cast<std::size_t>(i + j)] += static_cast<std::int64_t>(a[i]) * b[j];
  }
  for (int k = 2 * e_ - 2; k >= e_; --k) {
    const std::int64_t h = prod[static_cast<std::size_t>(k)] % p_;
    if (h == 0) continue;
    for (int i = 0; i < e_; ++i) prod[static_cast<std::size_t>(k - e_ + i)] += h * neg_mod_[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < e_; ++i) out[i] = static_cast<std::int32_t>(prod[static_cast<std::size_t>(i)] % p_);
}

bool SmallField::is_zero(const std::int32_t* a) const {
  for (int i = 0; i < e_; ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

bool SmallField::inverse(const std::int32_t* a, std::int32_t* out) const {
  using Poly = std::array<std::int32_t, kMaxDegree + 1>;
  auto degree = [](const Poly& f) {
    for (int i = kMaxDegree; i >= 0; --i) {
      if (f[static_cast<std::size_t>(i)] != 0) return i;
    }
    return -1;
  };
  Poly r0 = modulus_, r1{}, s0{}, s1{};
  for (int i = 0; i < e_; ++i) r1[static_cast<std::size_t>(i)] = a[i];
  s1[0] = 1;
  int d1 = degree(r1);
  if (d1 < 0) return false;
  // Invariant: s_i * a == r_i mod modulus.
  while (d1 > 0) {
    int d0 = degree(r0);
    const std::int32_t lead_inv = inv_[static_cast<std::size_t>(r1[static_cast<std::size_t>(d1)])];
    while (d0 >= d1) {
      const int shift = d0 - d1;
      const std::int32_t c = static_cast<std::int32_t>(static_cast<std::int64_t>(r0[static_cast<std::size_t>(d0)]) * lead_inv % p_);
      for (int i = 0; i <= d1; ++i) {
        auto& slot = r0[static_cast<std::size_t>(i + shift)];
        slot = static_cast<std::int32_t>((slot + static_cast<std::int64_t>(p_ - c) * r1[static_cast<std::size_t>(i)]) % p_);
      }
      for (int i = 0; i + shift <= kMaxDegree; ++i) {
        if (s1[static_cast<std::size_t>(i)] == 0) continue;
        auto& slot = s0[static_cast<std::size_t>(i + shift)];
        slot = static_cast<std::int32_t>((slot + static_cast<std::int64_t>(p_ - c) * s1[static_cast<std::size_t>(i)]) % p_);
      }
      d0 = degree(r0);
    }
    std::swap(r0, r1);
    std::swap(s0, s1);
    d1 = degree(r1);
  }
  const std::int32_t c_inv = inv_[static_cast<std::size_t>(r1[0])];
  for (int i = 0; i < e_; ++i) out[i] = static_cast<std::int32_t>(static_cast<std::int64_t>(s1[static_cast<std::size_t>(i)]) * c_inv % p_);
  return true;
}

std::int32_t SmallField::trace(const std::int32_t* a) const {
  std::int64_t acc = 0;
  for (int i = 0; i < e_; ++i) acc += static_cast<std::int64_t>(a[i]) * trace_[static_cast<std::size_t>(i)];
  return static_cast<std::int32_t>(acc % p_);
}

void SmallField::horner(const std::vector<std::int32_t>& poly, const std::int32_t* x, std::int32_t* out) const {
  std::array<std::int32_t, kMaxDegree> acc{};
  if (!poly.empty()) acc[0] = poly.back();
  for (std::size_t k = poly.size(); k-- > 1;) {
    mul(acc.data(), x, acc.data());
    acc[0] = (acc[0] + poly[k - 1]) % p_;
  }
  for (int i = 0; i < e_; ++i) out[i] = acc[static_cast<std::size_t>(i)];
}

Odometer::Odometer(std::int32_t p, int e, std::uint64_t start) : p_(p), e_(e) {
  for (int i = 0; i < e_; ++i) {
    digits_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(start % static_cast<std::uint64_t>(p));
    start /= static_cast<std::uint64_t>(p);
  }
}

void Odometer::next() {
  for (int i = 0; i < e_; ++i) {
    if (++digits_[static_cast<std::size_t>(i)] < p_) return;
    digits_[static_cast<std::size_t>(i)] = 0;
  }
}

std::vector<std::int32_t> trimmed(std::span<const std::int32_t> poly, std::int32_t p) {
  std::vector<std::int32_t> out;
  for (auto c : poly) out.push_back(((c % p) + p) % p);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace newtonlab::kernels::detail
