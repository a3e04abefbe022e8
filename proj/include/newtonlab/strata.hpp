#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "newtonlab/polygon.hpp"

namespace newtonlab {

// Dimension ledger of the Torelli locus inside the moduli of principally
// polarized abelian varieties of dimension g.
struct ModuliDims {
  std::int64_t g = 0;
  std::int64_t dim_ag = 0;
  std::int64_t dim_torelli = 0;
  std::int64_t codim_torelli = 0;
};

// GenusTooSmall for g < 2.
ModuliDims moduli_dims(std::int64_t g);

struct UnlikelyReport {
  NewtonPolygon polygon;
  LatticeCount omega;
  std::int64_t codim_torelli = 0;
  std::int64_t ambient_dim = 0;
  // omega + codim_torelli > ambient_dim. Since omega only bounds the stratum
  // codimension from below, `true` is always sound.
  bool is_unlikely = false;
  // Either omega + codim_torelli == ambient_dim, or the count is only a lower
  // bound and the verdict is negative (a larger true codimension could flip it).
  bool marginal = false;
};

UnlikelyReport is_unlikely_polygon(const NewtonPolygon& p);

struct FamilyRow {
  std::int64_t g = 0;
  UnlikelyReport verdict;
  Rational min_gap;
  // omega / g^2.
  Rational growth;
};

struct UnlikelyFamilyReport {
  std::vector<FamilyRow> rows;
  // Least g0 such that every member with g >= g0 is unlikely.
  std::optional<std::int64_t> threshold;
};

struct FamilyMemberPolygon {
  std::int64_t g = 0;
  NewtonPolygon polygon;
};

// Rows come back in input order; members are evaluated independently (in
// parallel when `threads` > 1). EmptyInput on an empty list.
UnlikelyFamilyReport unlikely_family_report(std::vector<FamilyMemberPolygon> members,
                                            const BasicGraph& reference, unsigned threads = 1);

}  // namespace newtonlab
