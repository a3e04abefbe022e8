#include <doctest.h>

#include "newtonlab/families.hpp"
#include "newtonlab/strata.hpp"

using namespace newtonlab;

TEST_CASE("moduli dimensions") {
  CHECK(moduli_dims(2).codim_torelli == 0);
  CHECK(moduli_dims(4).dim_ag == 10);
  CHECK(moduli_dims(4).dim_torelli == 9);
  CHECK(moduli_dims(12).codim_torelli == 45);
  for (std::int64_t g = 2; g < 200; ++g) {
    const auto m = moduli_dims(g);
    CHECK(m.codim_torelli + 3 * g - 3 == g * (g + 1) / 2);
  }
  CHECK_THROWS_AS(moduli_dims(1), Error);
}

TEST_CASE("unlikely verdicts") {
  std::string ordinary;
  for (int i = 0; i < 10; ++i) ordinary += i ? ",0" : "0";
  for (int i = 0; i < 10; ++i) ordinary += ",1";
  const auto o = is_unlikely_polygon(NewtonPolygon::parse(ordinary));
  CHECK(o.omega.count == 0);
  CHECK_FALSE(o.is_unlikely);

  const auto big = is_unlikely_polygon(construct_theorem4(3, 2, 114, 18).predicted);
  CHECK(big.omega.count == 342);
  CHECK(big.is_unlikely);
  CHECK(big.omega.count + big.codim_torelli > big.ambient_dim);

  const auto small = is_unlikely_polygon(construct_theorem4(3, 2, 12, 2 - 1).predicted);
  CHECK_FALSE(small.is_unlikely);
}

TEST_CASE("unlikely report over an ordinary family") {
  std::vector<FamilyMemberPolygon> members;
  for (std::int64_t g = 6; g <= 12; ++g) members.push_back({g, construct_theorem4(3, 2, g, 0).predicted});
  const auto rep = unlikely_family_report(members, BasicGraph::parabola(), 3);
  REQUIRE(rep.rows.size() == members.size());
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    CHECK(rep.rows[i].g == members[i].g);
    CHECK_FALSE(rep.rows[i].verdict.is_unlikely);
    CHECK(rep.rows[i].min_gap == Rational(-1, 4));
  }
  CHECK_FALSE(rep.threshold.has_value());
  CHECK_THROWS_AS(unlikely_family_report({}, BasicGraph::parabola()), Error);
}

TEST_CASE("unlikely report finds the first unlikely member") {
  std::vector<FamilyMemberPolygon> members;
  for (std::int64_t g = 12; g <= 140; ++g) {
    if (auto k = theorem4_max_k(3, 2, g)) members.push_back({g, construct_theorem4(3, 2, g, *k).predicted});
  }
  const auto serial = unlikely_family_report(members, BasicGraph::parabola(), 1);
  const auto threaded = unlikely_family_report(members, BasicGraph::parabola(), 4);
  REQUIRE(serial.threshold.has_value());
  CHECK(serial.threshold == threaded.threshold);
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].verdict.omega.count == threaded.rows[i].verdict.omega.count);
    CHECK(serial.rows[i].min_gap == threaded.rows[i].min_gap);
    if (serial.rows[i].g >= *serial.threshold) CHECK(serial.rows[i].verdict.is_unlikely);
  }
}
