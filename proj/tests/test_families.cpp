#include <doctest.h>

#include <random>

#include "newtonlab/families.hpp"
#include "oracle.hpp"

using namespace newtonlab;

namespace {

// {0,1}^{s0} plus {1/d, ..., (d-1)/d}^{copies}, written out directly.
std::string closed_form(std::int64_t s0, std::int64_t d, std::int64_t copies) {
  std::vector<oracle::SlopeRun> runs{{0, 1, s0}};
  for (std::int64_t a = 1; a < d; ++a) runs.push_back({a, d, copies});
  runs.push_back({1, 1, s0});
  // Sort runs by slope value so the string is canonical.
  std::sort(runs.begin(), runs.end(), [](const auto& x, const auto& y) { return x.num * y.den < y.num * x.den; });
  std::vector<oracle::SlopeRun> merged;
  for (const auto& r : runs) {
    if (!merged.empty() && merged.back().num * r.den == r.num * merged.back().den) {
      merged.back().copies += r.copies;
    } else {
      merged.push_back(r);
    }
  }
  return oracle::canonical(merged);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::UsageError;
}

}  // namespace

TEST_CASE("many-branch-point construction") {
  const auto m = construct_theorem4(3, 2, 12, 1);
  CHECK(m.delta == 2);
  CHECK(m.i == 0);
  CHECK(m.j == 4);
  CHECK(m.predicted.str() == closed_form(10, 2, 4));
  CHECK(m.exactness == Exactness::ExactSmallConductors);
  CHECK(rh_genus(m.spec) == 12);
  CHECK(m.str() ==
        "source=T4 p=3 d=2 g=12 k=1 delta=2 i=0 j=4 "
        "slopes=0,0,0,0,0,0,0,0,0,0,1/2,1/2,1/2,1/2,1,1,1,1,1,1,1,1,1,1 exact=small-conductors");

  CHECK(code_of([] { construct_theorem4(3, 2, 12, 2); }) == ErrorCode::Inadmissible);
  CHECK(code_of([] { construct_theorem4(3, 3, 12, 1); }) == ErrorCode::ConductorDivisibleByP);

  const auto b = construct_theorem4(7, 3, 54, 1);
  CHECK(b.delta == 1);
  CHECK(b.j == 8);
  CHECK(b.predicted.str() == closed_form(48, 3, 6));
  CHECK(b.exactness == Exactness::ExactBooherPries);
}

TEST_CASE("admissible members match the closed form") {
  std::int64_t members = 0;
  for (std::int64_t p : {3, 5, 7, 11}) {
    for (std::int64_t d = 2; d <= 9; ++d) {
      if (d % p == 0) continue;
      const std::int64_t delta = d % 2 == 0 ? 2 : 1;
      for (std::int64_t g = 1; g <= 200; ++g) {
        const auto kmax = theorem4_max_k(p, d, g);
        if (!kmax) continue;
        for (std::int64_t k = 0; k <= *kmax; ++k) {
          const auto m = construct_theorem4(p, d, g, k);
          CHECK(rh_genus(m.spec) == g);
          CHECK(m.predicted.height() == 2 * g);
          CHECK(m.predicted.multiplicity(0) == ds_prank(m.spec));
          CHECK(m.predicted.str() == closed_form(g - k * delta * (p - 1) * (d - 1) / 2, d, k * delta * (p - 1)));
          ++members;
        }
        CHECK_THROWS_AS(construct_theorem4(p, d, g, *kmax + 1), Error);
      }
    }
  }
  CHECK(members > 1000);
}

TEST_CASE("one-branch-point construction") {
  const auto a = construct_theorem5(3, 7);
  CHECK(a.u == 1);
  CHECK(a.v == 1);
  CHECK(a.k == 7);
  CHECK(a.d == 5);
  CHECK_FALSE(a.split_pole);
  CHECK(a.predicted.str() == closed_form(3, 5, 2));

  const auto b = construct_theorem5(3, 5);
  CHECK(b.d == 3);
  CHECK(b.split_pole);
  CHECK(b.spec.branches == std::vector<BranchDatum>{{1, 1}, {1, 1}});
  CHECK(b.predicted.str() == closed_form(5, 1, 0));
  CHECK(rh_genus(b.spec) == 5);

  CHECK(code_of([] { construct_theorem5(5, 1); }) == ErrorCode::GenusTooSmall);

  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    for (std::int64_t g = 1; g <= 300; ++g) {
      try {
        const auto m = construct_theorem5(p, g);
        CHECK(rh_genus(m.spec) == g);
        CHECK(m.predicted.height() == 2 * g);
        // the (u, v) pair solves p*u - (p-1) = i + m*v
        CHECK(p * m.u - (p - 1) == m.i + (p - 1) / 2 * m.v);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GenusTooSmall);
      }
    }
  }
}

TEST_CASE("Oort witnesses") {
  const auto w = oort_witness(3, 2, {12, 1}, {12, 1});
  CHECK(w.holds);
  CHECK(w.amalgam.str() == closed_form(20, 2, 8));
  CHECK(oort_witness(3, 2, {12, 1}, {18, 1}).amalgam.str() == closed_form(26, 2, 8));
  CHECK(oort_witness(3, 2, {12, 0}, {12, 0}).combined.predicted.str() == closed_form(24, 2, 0));
  CHECK(code_of([] { oort_witness(3, 2, {12, 2}, {12, 1}); }) == ErrorCode::Inadmissible);
}

TEST_CASE("frequency report") {
  std::vector<FamilyMember> members;
  for (std::int64_t g = 30; g <= 120; ++g) members.push_back(construct_theorem4(3, 2, g, *theorem4_max_k(3, 2, g)));
  const auto rep = frequency_report(members, {0, Rational(1, 2), 1});
  REQUIRE(rep.rows.size() == members.size());
  // each slope appears 2g/3 + O(1) times; the O(1) here stays below 8
  CHECK(rep.epsilon < Rational(8));
  for (const auto& row : rep.rows) {
    Rational total;
    for (const auto& [s, e] : row.deviations) total += e;
    CHECK(total == Rational(0));
  }

  std::vector<FamilyMember> ordinary;
  for (std::int64_t g = 6; g <= 20; ++g) ordinary.push_back(construct_theorem4(3, 2, g, 0));
  CHECK(frequency_report(ordinary, {0, 1}).epsilon == Rational(0));
  CHECK(code_of([&] { frequency_report(members, {0, 1}); }) == ErrorCode::SlopeSetMismatch);
}
