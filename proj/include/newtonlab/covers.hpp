#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "newtonlab/fp_poly.hpp"
#include "newtonlab/polygon.hpp"

namespace newtonlab {

// One closed branch point of a Z/pZ-cover: its Swan conductor and the degree
// of the point over the base field.
struct BranchDatum {
  std::int64_t conductor = 1;
  std::int64_t degree = 1;
  friend bool operator==(const BranchDatum&, const BranchDatum&) = default;
};

struct CoverSpec {
  std::int64_t p = 3;
  std::int64_t base_genus = 0;
  bool base_ordinary = true;
  std::vector<BranchDatum> branches;

  // Geometric branch point count (sum of degrees).
  std::int64_t geometric_branch_points() const;

  // InvalidCover unless p is an odd prime, base_genus >= 0 and every
  // conductor and degree is positive with gcd(conductor, p) = 1.
  void validate() const;

  // "p=3 gX=0 ordinary=true branches=2:1,1:2"
  std::string str() const;
  static CoverSpec parse(std::string_view text);

  friend bool operator==(const CoverSpec&, const CoverSpec&) = default;
};

// "2:1,1:2" <-> branch list. A bare conductor means degree 1.
std::string format_branches(const std::vector<BranchDatum>& branches);
std::vector<BranchDatum> parse_branches(std::string_view text);

enum class Exactness { ExactSmallConductors, ExactBooherPries, LowerBoundOnly };

// "small-conductors", "booher-pries", "lower-bound"
std::string_view to_string(Exactness e);

// Local expansion g = sum a_n t^n around one point: (exponent, coefficient in
// F_p) pairs.
struct LocalASData {
  std::vector<std::pair<std::int64_t, std::int64_t>> terms;
};

// Pole order after stripping leading terms of p-divisible order; 0 when the
// local equation is unramified.
std::int64_t local_swan_conductor(const LocalASData& data, std::int64_t p);

// Replaces f by an Artin-Schreier equivalent function whose poles all have
// order prime to p. IrreduciblePoleUnsupported for a p-divisible pole at a
// non-rational point.
RationalFunction reduce_artin_schreier(RationalFunction f);

// One datum per pole, infinity first, then finite poles ordered by
// (degree, coefficients) of their irreducible factor. NotReduced if a pole
// order is divisible by p.
std::vector<BranchDatum> swan_conductors(const RationalFunction& f);

// NegativeGenus when the data describe no connected cover.
std::int64_t rh_genus(const CoverSpec& spec);
// BaseNotOrdinary unless base_ordinary.
std::int64_t ds_prank(const CoverSpec& spec);
NewtonPolygon hodge_lower_bound(const CoverSpec& spec);
Exactness exactness_class(const CoverSpec& spec);

}  // namespace newtonlab
