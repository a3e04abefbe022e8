#include "newtonlab/zeta.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include "newtonlab/parallel.hpp"

namespace newtonlab {
namespace {

BigInt big_pow(std::int64_t base, std::int64_t e) {
  BigInt out = 1;
  for (std::int64_t i = 0; i < e; ++i) out *= base;
  return out;
}

std::vector<std::int32_t> as_int32(const FpPoly& f) {
  std::vector<std::int32_t> out;
  for (auto c : f.coeffs()) out.push_back(static_cast<std::int32_t>(c));
  return out;
}

}  // namespace

int field_guard_from_env() {
  const char* raw = std::getenv("NEWTONLAB_FIELD_GUARD");
  if (raw == nullptr) return kDefaultFieldGuard;
  int v = 0;
  auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), v);
  if (ec != std::errc() || *ptr != '\0' || v < 1 || v > kMaxFieldDegree) {
    fail(ErrorCode::UsageError, "NEWTONLAB_FIELD_GUARD must be an integer in [1," +
                                    std::to_string(kMaxFieldDegree) + "]");
  }
  return v;
}

CurveOverP1 CurveOverP1::make(RationalFunction f) {
  CurveOverP1 c(std::move(f));
  c.spec_.p = c.f_.prime();
  c.spec_.base_genus = 0;
  c.spec_.base_ordinary = true;
  c.spec_.branches = swan_conductors(c.f_);
  c.pole_at_infinity_ = !c.f_.is_zero() && c.f_.num().degree() > c.f_.den().degree();
  c.genus_ = rh_genus(c.spec_);
  return c;
}

std::uint64_t count_points(const CurveOverP1& curve, int k, const ZetaOptions& options) {
  const std::int64_t p = curve.prime();
  if (k < 1 || k > std::min(options.field_guard, kMaxFieldDegree)) {
    fail(ErrorCode::FieldGuard, "extension degree " + std::to_string(k) + " exceeds guard " +
                                    std::to_string(options.field_guard));
  }
  const FieldTower field = FieldTower::build(p, k, options.field_guard);
  const auto modulus = as_int32(field.modulus());
  const auto num = as_int32(curve.function().num());
  const auto den = as_int32(curve.function().den());
  kernels::CountProblem problem;
  problem.p = static_cast<std::int32_t>(p);
  problem.e = k;
  problem.modulus = std::span(modulus).first(static_cast<std::size_t>(k));
  problem.trace_basis = field.trace_basis();
  problem.num = num;
  problem.den = den;
  const kernels::Path path = options.kernel.value_or(kernels::select_path(problem));
  if (path == kernels::Path::Avx2 && !kernels::avx2_supported(problem)) {
    fail(ErrorCode::UsageError, "AVX2 kernel unavailable for this problem");
  }

  const std::uint64_t q = field.size();
  const unsigned chunks = std::max(1u, options.threads);
  std::vector<std::uint64_t> partial(chunks, 0);
  parallel_for(chunks, chunks, [&](std::size_t c) {
    const std::uint64_t lo = q / chunks * c + std::min<std::uint64_t>(c, q % chunks);
    const std::uint64_t hi = lo + q / chunks + (c < q % chunks ? 1 : 0);
    partial[c] = kernels::count_trace_zero(problem, lo, hi, path);
  });
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  total *= static_cast<std::uint64_t>(p);

  if (!curve.pole_at_infinity()) {
    const FpPoly& n = curve.function().num();
    const FpPoly& d = curve.function().den();
    const std::int64_t at_inf = n.degree() == d.degree() ? n.leading() * inv_mod(d.leading(), p) % p : 0;
    if (at_inf * k % p == 0) total += static_cast<std::uint64_t>(p);
  }
  for (const auto& br : curve.branches()) {
    if (k % br.degree == 0) total += static_cast<std::uint64_t>(br.degree);
  }
  return total;
}

std::uint64_t LPolynomial::predicted_count(int k) const {
  std::vector<BigInt> e(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 0; i <= k && i < static_cast<int>(coeffs.size()); ++i) {
    e[static_cast<std::size_t>(i)] = (i % 2 == 0) ? coeffs[static_cast<std::size_t>(i)] : BigInt(-coeffs[static_cast<std::size_t>(i)]);
  }
  std::vector<BigInt> s(static_cast<std::size_t>(k) + 1, 0);
  for (int n = 1; n <= k; ++n) {
    BigInt acc = 0;
    for (int i = 1; i < n; ++i) {
      const BigInt term = e[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(n - i)];
      acc += (i % 2 == 1) ? term : BigInt(-term);
    }
    const BigInt last = BigInt(n) * e[static_cast<std::size_t>(n)];
    acc += (n % 2 == 1) ? last : BigInt(-last);
    s[static_cast<std::size_t>(n)] = acc;
  }
  const BigInt n_k = big_pow(p, k) + 1 - s[static_cast<std::size_t>(k)];
  if (n_k < 0) fail(ErrorCode::RoundTripFailure, "negative implied point count");
  return static_cast<std::uint64_t>(n_k);
}

std::string LPolynomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += coeffs[i].str();
  }
  return out;
}

bool within_weil_bound(std::int64_t p, std::int64_t g, int k, std::uint64_t count) {
  const BigInt q = big_pow(p, k);
  const BigInt trace = q + 1 - BigInt(count);
  return trace * trace <= BigInt(4) * g * g * q;
}

LPolynomial make_l_polynomial(std::int64_t p, std::vector<BigInt> coeffs) {
  if (coeffs.empty() || coeffs.size() % 2 == 0 || coeffs[0] != 1) {
    fail(ErrorCode::DomainError, "L-polynomial needs 2g+1 coefficients with a_0 = 1");
  }
  LPolynomial l;
  l.p = p;
  l.g = static_cast<std::int64_t>(coeffs.size() / 2);
  for (std::int64_t i = 0; i <= l.g; ++i) {
    if (coeffs[static_cast<std::size_t>(2 * l.g - i)] != big_pow(p, l.g - i) * coeffs[static_cast<std::size_t>(i)]) {
      fail(ErrorCode::DomainError, "functional equation fails at a_" + std::to_string(i));
    }
  }
  l.coeffs = std::move(coeffs);
  return l;
}

LPolynomial l_polynomial(const CurveOverP1& curve, const ZetaOptions& options) {
  LPolynomial l;
  l.p = curve.prime();
  l.g = curve.genus();
  const std::int64_t p = l.p;
  const int g = static_cast<int>(l.g);
  const int guard = std::min(options.field_guard, kMaxFieldDegree);
  if (g > guard) {
    fail(ErrorCode::FieldGuard, "genus " + std::to_string(g) + " needs counts over F_{p^" + std::to_string(g) +
                                    "}, beyond guard " + std::to_string(guard));
  }
  for (int k = 1; k <= g; ++k) {
    const std::uint64_t n = count_points(curve, k, options);
    if (!within_weil_bound(p, g, k, n)) {
      fail(ErrorCode::RoundTripFailure, "N_" + std::to_string(k) + "=" + std::to_string(n) + " violates the Weil bound");
    }
    l.counts.push_back(n);
  }
  // Newton's identities: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} s_i.
  std::vector<BigInt> s(static_cast<std::size_t>(g) + 1, 0), e(static_cast<std::size_t>(g) + 1, 0);
  for (int k = 1; k <= g; ++k) s[static_cast<std::size_t>(k)] = big_pow(p, k) + 1 - BigInt(l.counts[static_cast<std::size_t>(k - 1)]);
  e[0] = 1;
  for (int k = 1; k <= g; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) {
      const BigInt term = e[static_cast<std::size_t>(k - i)] * s[static_cast<std::size_t>(i)];
      acc += (i % 2 == 1) ? term : BigInt(-term);
    }
    if (acc % k != 0) fail(ErrorCode::RoundTripFailure, "non-integral symmetric function e_" + std::to_string(k));
    e[static_cast<std::size_t>(k)] = acc / k;
  }
  l.coeffs.assign(static_cast<std::size_t>(2 * g) + 1, 0);
  for (int i = 0; i <= g; ++i) {
    l.coeffs[static_cast<std::size_t>(i)] = (i % 2 == 0) ? e[static_cast<std::size_t>(i)] : BigInt(-e[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < g; ++i) {
    l.coeffs[static_cast<std::size_t>(2 * g - i)] = big_pow(p, g - i) * l.coeffs[static_cast<std::size_t>(i)];
  }

  l.verified_through = g;
  for (int k = g + 1; k <= 2 * g; ++k) {
    if (k > guard || big_pow(p, k) > BigInt(options.roundtrip_budget)) {
      l.truncated = true;
      break;
    }
    const std::uint64_t n = count_points(curve, k, options);
    if (!within_weil_bound(p, g, k, n)) {
      fail(ErrorCode::RoundTripFailure, "N_" + std::to_string(k) + "=" + std::to_string(n) + " violates the Weil bound");
    }
    l.counts.push_back(n);
    if (n != l.predicted_count(k)) {
      fail(ErrorCode::RoundTripFailure, "N_" + std::to_string(k) + " measured " + std::to_string(n) +
                                            ", L-polynomial implies " + std::to_string(l.predicted_count(k)));
    }
    l.verified_through = k;
  }
  return l;
}

NewtonPolygon newton_polygon_of_L(const LPolynomial& l) {
  struct Pt {
    std::int64_t x;
    std::int64_t y;
  };
  std::vector<Pt> pts;
  for (std::size_t i = 0; i < l.coeffs.size(); ++i) {
    BigInt a = l.coeffs[i];
    if (a == 0) continue;
    if (a < 0) a = -a;
    std::int64_t v = 0;
    while (a % l.p == 0) {
      a /= l.p;
      ++v;
    }
    pts.push_back({static_cast<std::int64_t>(i), v});
  }
  std::vector<Pt> hull;
  for (const Pt& pt : pts) {
    while (hull.size() >= 2) {
      const Pt& o = hull[hull.size() - 2];
      const Pt& a = hull.back();
      const __int128 cross = static_cast<__int128>(a.x - o.x) * (pt.y - o.y) -
                             static_cast<__int128>(a.y - o.y) * (pt.x - o.x);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  std::vector<Rational> slopes;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const std::int64_t dx = hull[i].x - hull[i - 1].x;
    const Rational s(hull[i].y - hull[i - 1].y, dx);
    slopes.insert(slopes.end(), static_cast<std::size_t>(dx), s);
  }
  return NewtonPolygon::from_slopes(std::move(slopes));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Above: return "above";
    case Verdict::Equal: return "equal";
    case Verdict::Counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

VerificationReport verify_prediction(const RationalFunction& f, const ZetaOptions& options) {
  VerificationReport r;
  r.p = f.prime();
  r.input = f.str();
  r.reduced = reduce_artin_schreier(f);
  const CurveOverP1 curve = CurveOverP1::make(r.reduced);
  r.spec = curve.spec();
  r.genus = curve.genus();
  r.predicted = hodge_lower_bound(r.spec);
  r.exactness = exactness_class(r.spec);
  r.prank_predicted = ds_prank(r.spec);
  r.l = l_polynomial(curve, options);
  r.measured = newton_polygon_of_L(r.l);
  r.prank_measured = r.measured.multiplicity(Rational(0));

  kernels::CountProblem shape;
  shape.p = static_cast<std::int32_t>(r.p);
  shape.e = std::max<int>(1, static_cast<int>(std::min<std::int64_t>(r.genus, options.field_guard)));
  r.kernel = options.kernel.value_or(kernels::select_path(shape));

  r.lies_above_ok = lies_above(r.measured, r.predicted);
  r.equality_ok = r.exactness != Exactness::ExactSmallConductors || r.measured == r.predicted;
  r.prank_ok = r.prank_measured == r.prank_predicted;
  if (!r.lies_above_ok) r.failures += "measured polygon dips below the bound; ";
  if (!r.equality_ok) r.failures += "bound should be attained for conductors <= 2; ";
  if (!r.prank_ok) r.failures += "p-rank differs from Deuring-Shafarevich; ";
  if (!r.failures.empty()) {
    r.verdict = Verdict::Counterexample;
  } else {
    r.verdict = r.measured == r.predicted ? Verdict::Equal : Verdict::Above;
  }
  return r;
}

VerificationReport verify_prediction(const std::string& f_text, std::int64_t p, const ZetaOptions& options) {
  if (!is_odd_prime(p)) fail(ErrorCode::UsageError, "p=" + std::to_string(p) + " is not an odd prime");
  VerificationReport r = verify_prediction(parse_rational_function(f_text, p), options);
  r.input = f_text;
  return r;
}

}  // namespace newtonlab
