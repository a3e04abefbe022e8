#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "newtonlab/covers.hpp"
#include "newtonlab/polygon.hpp"

namespace newtonlab {

enum class FamilySource { ManyBranchPoints, OneBranchPoint };

// A resolved member C_g of one of the two constructions, with its cover data
// and predicted Newton polygon.
struct FamilyMember {
  FamilySource source = FamilySource::ManyBranchPoints;
  std::int64_t p = 0;
  std::int64_t d = 0;
  std::int64_t g = 0;
  std::int64_t k = 0;
  // Many-branch-point construction.
  std::int64_t delta = 0;
  std::int64_t i = 0;  // residue of g; also the base genus there
  std::int64_t j = 0;  // conductor-1 branch points
  std::int64_t a = 0;  // j * (p - 1)
  // One-branch-point construction.
  std::int64_t u = 0;  // base genus
  std::int64_t v = 0;
  // p | d there: poles of orders (d - 2, 1) were used instead of a single one.
  bool split_pole = false;

  CoverSpec spec;
  NewtonPolygon predicted;
  Exactness exactness = Exactness::LowerBoundOnly;

  // Canonical single-line serialization.
  std::string str() const;
};

// Exact check of 2g/(d+1) - 2p(p-1)/(d+1) >= k*delta*(p-1); returns the slack
// (left side minus right side).
Rational theorem4_slack(std::int64_t p, std::int64_t d, std::int64_t g, std::int64_t k);
// Largest admissible k, or nullopt when even k = 0 is inadmissible.
std::optional<std::int64_t> theorem4_max_k(std::int64_t p, std::int64_t d, std::int64_t g);

// Many branch points of fixed conductor d over an ordinary base of genus
// g mod (p-1). Inadmissible / ConductorDivisibleByP / InvalidCover.
FamilyMember construct_theorem4(std::int64_t p, std::int64_t d, std::int64_t g, std::int64_t k);

// One branch point of growing conductor. GenusTooSmall when no valid
// conductor exists for this g.
FamilyMember construct_theorem5(std::int64_t p, std::int64_t g);

struct OortWitness {
  FamilyMember first;
  FamilyMember second;
  FamilyMember combined;
  NewtonPolygon amalgam;
  bool holds = false;
};

struct GenusIndex {
  std::int64_t g = 0;
  std::int64_t k = 0;
};

// Builds C_{g,k}, C_{g',k'} and C_{g+g',k+k'} and compares the combined
// prediction with the amalgam. CounterexampleFound if they differ.
OortWitness oort_witness(std::int64_t p, std::int64_t d, GenusIndex first, GenusIndex second);

struct FrequencyRow {
  std::int64_t g = 0;
  // Deviation of each distinct slope value from its expected count, per
  // occurrence in the slope set.
  std::vector<std::pair<Rational, Rational>> deviations;
  Rational running_sup;
};

struct FrequencyReport {
  std::vector<Rational> distinct_slopes;
  std::vector<FrequencyRow> rows;
  // sup |e_i(g)| over all members.
  Rational epsilon;
};

// Writes each NP(C_g) as a union of {m_i}^(2g/n + e_i(g)) over the n-element
// slope set. EmptyInput, NotSymmetric (slope set), SlopeSetMismatch.
FrequencyReport frequency_report(const std::vector<FamilyMember>& members,
                                 const std::vector<Rational>& slope_set);

}  // namespace newtonlab
