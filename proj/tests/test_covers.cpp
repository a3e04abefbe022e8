#include <doctest.h>

#include <random>

#include "newtonlab/covers.hpp"
#include "newtonlab/fp_poly.hpp"

using namespace newtonlab;

namespace {

RationalFunction rf(const char* text, std::int64_t p = 3) { return parse_rational_function(text, p); }

CoverSpec spec(std::int64_t p, std::int64_t gx, std::vector<BranchDatum> b, bool ordinary = true) {
  CoverSpec s;
  s.p = p;
  s.base_genus = gx;
  s.base_ordinary = ordinary;
  s.branches = std::move(b);
  return s;
}

std::vector<BranchDatum> deg1(std::initializer_list<std::int64_t> conductors) {
  std::vector<BranchDatum> out;
  for (auto d : conductors) out.push_back({d, 1});
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic over F_p") {
  const FpPoly a(5, {1, 2, 3});
  const FpPoly b(5, {4, 1});
  const auto [q, r] = (a * b + FpPoly::constant(5, 2)).divmod(b);
  CHECK(q == a);
  CHECK(r == FpPoly::constant(5, 2));
  CHECK(gcd(a * b, b * b) == b.monic());
  CHECK(is_irreducible(FpPoly(3, {1, 0, 1})));
  CHECK_FALSE(is_irreducible(FpPoly(3, {2, 0, 1})));
  CHECK(inv_mod(3, 7) == 5);
}

TEST_CASE("factorization multiplies back") {
  std::mt19937 rng(21);
  for (std::int64_t p : {3, 5, 7}) {
    std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::int64_t> c(6);
      for (auto& x : c) x = coeff(rng);
      c.back() = 1;
      const FpPoly f(p, c);
      FpPoly prod = FpPoly::constant(p, 1);
      for (const auto& fac : factor(f)) {
        CHECK(is_irreducible(fac.poly));
        for (int i = 0; i < fac.multiplicity; ++i) prod = prod * fac.poly;
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("rational function parsing and normalization") {
  CHECK(rf("x^2") == RationalFunction(FpPoly(3, {0, 0, 1})));
  CHECK(rf("(x^2 - 1)/(x - 1)") == rf("x + 1"));
  CHECK(rf("1/x + 1/x") == rf("2/x"));
  CHECK(rf("4*x", 3) == rf("x", 3));
  CHECK_THROWS_AS(rf("x +"), Error);
  CHECK_THROWS_AS(rf("1/(x-x)"), Error);
}

TEST_CASE("Artin-Schreier reduction") {
  CHECK(reduce_artin_schreier(rf("x^3")) == rf("x"));
  CHECK(reduce_artin_schreier(rf("x^2")) == rf("x^2"));
  // x^6 -> x^2, which merges with the existing x^2.
  CHECK(reduce_artin_schreier(rf("x^6 + x^2")) == rf("2*x^2"));
  CHECK(reduce_artin_schreier(rf("1/x^3 + x")) == rf("1/x + x"));
  CHECK(reduce_artin_schreier(rf("x^3 - x")).is_zero());
  CHECK_THROWS_AS(reduce_artin_schreier(rf("1/(x^2+1)^3")), Error);
}

TEST_CASE("reduction is idempotent and invariant under h^p - h") {
  std::mt19937 rng(17);
  for (std::int64_t p : {3, 5}) {
    std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const std::int64_t a = coeff(rng);
      const FpPoly poly(p, {coeff(rng), coeff(rng), coeff(rng), 1});
      const RationalFunction f =
          RationalFunction(poly) + RationalFunction(FpPoly::constant(p, 1), FpPoly::linear_root(p, a).scaled(1));
      const RationalFunction r = reduce_artin_schreier(f);
      CHECK(reduce_artin_schreier(r) == r);
      const FpPoly h(p, {coeff(rng), coeff(rng), coeff(rng), coeff(rng)});
      FpPoly hp = FpPoly::constant(p, 1);
      for (int i = 0; i < p; ++i) hp = hp * h;
      const RationalFunction shifted = f + RationalFunction(hp - h);
      CHECK(swan_conductors(reduce_artin_schreier(shifted)) == swan_conductors(r));
    }
  }
}

TEST_CASE("local Swan conductor") {
  CHECK(local_swan_conductor({{{-2, 1}}}, 3) == 2);
  CHECK(local_swan_conductor({{{-3, 1}, {-1, 2}}}, 3) == 0);  // t^-3 ~ t^-1, which cancels
  CHECK(local_swan_conductor({{{-9, 1}, {-2, 1}}}, 3) == 2);
  CHECK(local_swan_conductor({{{1, 1}}}, 3) == 0);
}

TEST_CASE("Swan conductors read off pole orders") {
  CHECK(swan_conductors(rf("x^2")) == deg1({2}));
  CHECK(swan_conductors(rf("x")) == deg1({1}));
  const auto b = swan_conductors(rf("x^2 + 1/x^2 + 1/(x-1) + 1/(x+1) + x/(x^2+1)"));
  std::vector<std::int64_t> conductors, degrees;
  for (const auto& d : b) conductors.push_back(d.conductor), degrees.push_back(d.degree);
  std::sort(conductors.begin(), conductors.end());
  CHECK(conductors == std::vector<std::int64_t>{1, 1, 1, 2, 2});
  CHECK(std::count(degrees.begin(), degrees.end(), 2) == 1);
  CHECK(b.front() == BranchDatum{2, 1});  // infinity first
  CHECK_THROWS_AS(swan_conductors(rf("x^3")), Error);
}

TEST_CASE("Riemann-Hurwitz and Deuring-Shafarevich") {
  CHECK(rh_genus(spec(3, 0, deg1({2}))) == 1);
  CHECK(rh_genus(spec(3, 0, deg1({1}))) == 0);
  CHECK(rh_genus(spec(3, 0, deg1({1, 1, 1, 1, 2, 2}))) == 12);
  CHECK(ds_prank(spec(3, 0, deg1({2}))) == 0);
  CHECK(ds_prank(spec(3, 0, deg1({1, 1, 1, 1, 1, 1}))) == 10);
  CHECK(ds_prank(spec(3, 1, {})) == 1);  // etale over an ordinary elliptic curve
  CHECK_THROWS_AS(ds_prank(spec(3, 1, {}, false)), Error);
  CHECK_THROWS_AS(rh_genus(spec(3, 0, {})), Error);
  CHECK(rh_genus(spec(5, 0, {{3, 2}})) == 2 * ((3 + 1) * 2 - 2));
}

TEST_CASE("Hodge lower bound") {
  CHECK(hodge_lower_bound(spec(3, 0, deg1({2}))).str() == "1/2,1/2");
  CHECK(hodge_lower_bound(spec(3, 0, deg1({4}))).str() == "1/4,1/4,1/2,1/2,3/4,3/4");
  CHECK(hodge_lower_bound(spec(3, 0, deg1({1, 1, 1, 1, 2, 2}))).str() ==
        "0,0,0,0,0,0,0,0,0,0,1/2,1/2,1/2,1/2,1,1,1,1,1,1,1,1,1,1");
  CHECK(hodge_lower_bound(spec(3, 1, {})).str() == "0,1");
}

TEST_CASE("height and p-rank consistency on random specs") {
  std::mt19937 rng(99);
  for (std::int64_t p : {3, 5, 7, 11}) {
    std::uniform_int_distribution<int> nb(0, 5), cond(1, 12), deg(1, 3), gx(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
      CoverSpec s = spec(p, gx(rng), {});
      const int n = nb(rng);
      for (int i = 0; i < n; ++i) {
        std::int64_t d = cond(rng);
        if (d % p == 0) ++d;
        s.branches.push_back({d, deg(rng)});
      }
      if (s.base_genus == 0 && s.branches.empty()) continue;
      std::int64_t genus = 0;
      try {
        genus = rh_genus(s);
      } catch (const Error&) {
        continue;  // too little ramification over P^1
      }
      const auto bound = hodge_lower_bound(s);
      CHECK(bound.height() == 2 * genus);
      CHECK(bound.multiplicity(0) == ds_prank(s));
    }
  }
}

TEST_CASE("exactness classes") {
  CHECK(exactness_class(spec(3, 0, deg1({2, 2}))) == Exactness::ExactSmallConductors);
  CHECK(exactness_class(spec(7, 0, deg1({3, 3}))) == Exactness::ExactBooherPries);
  CHECK(exactness_class(spec(3, 0, deg1({4}))) == Exactness::LowerBoundOnly);
  CHECK(exactness_class(spec(3, 0, deg1({2}), false)) == Exactness::LowerBoundOnly);
  CHECK(to_string(Exactness::ExactBooherPries) == "booher-pries");
}

TEST_CASE("cover spec text form") {
  const auto s = CoverSpec::parse("p=3 gX=0 ordinary=true branches=2:1,1:2");
  CHECK(s.branches == std::vector<BranchDatum>{{2, 1}, {1, 2}});
  CHECK(s.str() == "p=3 gX=0 ordinary=true branches=2:1,1:2");
  CHECK(CoverSpec::parse(s.str()) == s);
  CHECK_THROWS_AS(CoverSpec::parse("p=3 colour=red"), Error);
  CHECK_THROWS_AS(spec(3, 0, deg1({3})).validate(), Error);
}
