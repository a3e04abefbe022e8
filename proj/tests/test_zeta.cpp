#include <doctest.h>

#include <cstdlib>
#include <random>

#include "newtonlab/zeta.hpp"
#include "oracle.hpp"

using namespace newtonlab;

namespace {

CurveOverP1 curve(const char* text, std::int64_t p = 3) {
  return CurveOverP1::make(reduce_artin_schreier(parse_rational_function(text, p)));
}

std::int64_t naive_count(const CurveOverP1& c, int k) {
  return oracle::count_points(c.prime(), c.function().num().coeffs(), c.function().den().coeffs(), k);
}

// Random reduced f over F_p: a polynomial part plus principal parts at rational points.
RationalFunction random_function(std::mt19937& rng, std::int64_t p, int max_total) {
  std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
  std::uniform_int_distribution<int> order(1, 4);
  while (true) {
    RationalFunction f(p);
    int total = 0;  // sum of (d + 1) over poles
    const int inf = std::uniform_int_distribution<int>(0, 4)(rng);
    if (inf > 0 && inf % p != 0) {
      FpPoly poly(p, std::vector<std::int64_t>(static_cast<std::size_t>(inf + 1)));
      std::vector<std::int64_t> c(static_cast<std::size_t>(inf + 1));
      for (auto& x : c) x = coeff(rng);
      c.back() = 1 + coeff(rng) % (p - 1);
      f += RationalFunction(FpPoly(p, c));
      total += inf + 1;
    }
    for (std::int64_t a = 0; a < p; ++a) {
      if (rng() % 3 != 0) continue;
      const int d = order(rng);
      if (d % p == 0) continue;
      const RationalFunction lin(FpPoly::linear_root(p, a));
      f += RationalFunction(FpPoly::constant(p, 1 + coeff(rng) % (p - 1))) / lin.pow(d);
      total += d + 1;
    }
    if (total == 0 || f.is_zero()) continue;
    const std::int64_t genus = (p - 1) * (total - 2) / 2;
    if (genus < 1 || total > max_total) continue;
    return f;
  }
}

}  // namespace

TEST_CASE("point counts on small examples") {
  CHECK(count_points(curve("x^2"), 1) == 4);
  CHECK(count_points(curve("x^4"), 1) == 4);
  for (int k = 1; k <= 5; ++k) {
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) q *= 3;
    CHECK(count_points(curve("x"), k) == q + 1);
  }
}

TEST_CASE("point counts agree with the naive oracle") {
  const char* curves[] = {"x^2", "x^4", "x^2 + 1/x", "1/(x^2+1)", "x + 1/x^2", "(x^2+2)/(x^2+1)", "x/(x^2+1)^2 + x^5"};
  for (const char* text : curves) {
    const auto c = curve(text);
    for (int k = 1; k <= 5; ++k) {
      CAPTURE(text);
      CAPTURE(k);
      CHECK(static_cast<std::int64_t>(count_points(c, k)) == naive_count(c, k));
    }
  }
  const auto c5 = curve("x^3 + 2/(x-1)", 5);
  for (int k = 1; k <= 3; ++k) CHECK(static_cast<std::int64_t>(count_points(c5, k)) == naive_count(c5, k));
  const auto c7 = curve("x^2 + 1/(x^2+1)", 7);
  for (int k = 1; k <= 2; ++k) CHECK(static_cast<std::int64_t>(count_points(c7, k)) == naive_count(c7, k));
}

TEST_CASE("counts do not depend on threads or kernel") {
  const auto c = curve("x^2 + 1/x^2 + 1/(x-1) + 1/(x+1) + x/(x^2+1)");
  ZetaOptions one, many, scalar;
  many.threads = 5;
  scalar.kernel = kernels::Path::Scalar;
  for (int k = 1; k <= 8; ++k) {
    const auto n = count_points(c, k, one);
    CHECK(count_points(c, k, many) == n);
    CHECK(count_points(c, k, scalar) == n);
  }
}

TEST_CASE("field guard") {
  ZetaOptions opts;
  opts.field_guard = 4;
  CHECK_THROWS_AS(count_points(curve("x^2"), 5, opts), Error);
  CHECK_THROWS_AS(count_points(curve("x^2"), 0), Error);
  ::setenv("NEWTONLAB_FIELD_GUARD", "7", 1);
  CHECK(field_guard_from_env() == 7);
  ::setenv("NEWTONLAB_FIELD_GUARD", "seven", 1);
  CHECK_THROWS_AS(field_guard_from_env(), Error);
  ::unsetenv("NEWTONLAB_FIELD_GUARD");
  CHECK(field_guard_from_env() == kDefaultFieldGuard);
}

TEST_CASE("L-polynomials") {
  const auto e = l_polynomial(curve("x^2"));
  CHECK(e.str() == "1,0,3");
  CHECK(l_polynomial(curve("x")).str() == "1");
  CHECK(newton_polygon_of_L(l_polynomial(curve("x"))).empty());

  const auto c = curve("x^4");
  for (int k = 1; k <= 3; ++k) CHECK(static_cast<std::int64_t>(count_points(c, k)) == naive_count(c, k));
  const auto l = l_polynomial(c);
  CHECK(l.str() == "1,0,-3,0,-9,0,27");
  CHECK(l.verified_through == 6);
  CHECK_FALSE(l.truncated);
}

TEST_CASE("Newton polygon of an L-polynomial") {
  CHECK(newton_polygon_of_L(make_l_polynomial(3, {1, 0, 3})).str() == "1/2,1/2");
  CHECK(newton_polygon_of_L(make_l_polynomial(3, {1, -1, 3})).str() == "0,1");
  CHECK(newton_polygon_of_L(make_l_polynomial(3, {1, 0, 0, 0, 9})).str() == "1/2,1/2,1/2,1/2");
  CHECK_THROWS_AS(make_l_polynomial(3, {1, 1, 2}), Error);
}

TEST_CASE("Weil bound") {
  CHECK(within_weil_bound(3, 1, 1, 4));
  CHECK(within_weil_bound(3, 1, 1, 4 + 3));   // |a_1| = 3 <= 2 sqrt 3
  CHECK_FALSE(within_weil_bound(3, 1, 1, 4 + 4));
  CHECK_FALSE(within_weil_bound(3, 0, 1, 5));
}

TEST_CASE("verification examples") {
  const auto a = verify_prediction("x^2", 3);
  CHECK(a.verdict == Verdict::Equal);
  CHECK(a.measured.str() == "1/2,1/2");

  const auto b = verify_prediction("x^2 + 1/x + 1/(x-1)", 3);
  CHECK(b.genus == 5);
  CHECK(b.exactness == Exactness::ExactSmallConductors);
  CHECK(b.predicted.str() == "0,0,0,0,1/2,1/2,1,1,1,1");
  CHECK(b.measured == b.predicted);

  const auto c = verify_prediction("x^4", 3);
  CHECK(c.predicted.str() == "1/4,1/4,1/2,1/2,3/4,3/4");
  CHECK(c.verdict == Verdict::Above);
  CHECK(lies_above(c.measured, c.predicted));

  const auto d = verify_prediction("x^6 + x^2", 3);
  CHECK(d.reduced == parse_rational_function("2*x^2", 3));
}

TEST_CASE("isomorphic covers have the same counts") {
  std::mt19937 rng(31);
  for (std::int64_t p : {3, 5}) {
    std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
    for (int trial = 0; trial < 6; ++trial) {
      const RationalFunction f = random_function(rng, p, p == 3 ? 6 : 4);
      const FpPoly h(p, {coeff(rng), coeff(rng), coeff(rng), coeff(rng)});
      FpPoly hp = FpPoly::constant(p, 1);
      for (int i = 0; i < p; ++i) hp = hp * h;
      const auto c1 = CurveOverP1::make(reduce_artin_schreier(f));
      const auto c2 = CurveOverP1::make(reduce_artin_schreier(f + RationalFunction(hp - h)));
      for (int k = 1; k <= (p == 3 ? 4 : 2); ++k) CHECK(count_points(c1, k) == count_points(c2, k));
    }
  }
}

TEST_CASE("random covers respect the bound, Weil and Deuring-Shafarevich") {
  std::mt19937 rng(8);
  for (std::int64_t p : {3, 5}) {
    for (int trial = 0; trial < 6; ++trial) {
      const RationalFunction f = random_function(rng, p, p == 3 ? 6 : 4);
      CAPTURE(f.str());
      const auto r = verify_prediction(f);
      CHECK(r.verdict != Verdict::Counterexample);
      CHECK(r.prank_measured == r.prank_predicted);
      for (std::size_t i = 0; i < r.l.counts.size(); ++i) {
        CHECK(within_weil_bound(p, r.genus, static_cast<int>(i + 1), r.l.counts[i]));
      }
      CHECK(NewtonPolygon::parse(r.measured.str()) == r.measured);
    }
  }
}
