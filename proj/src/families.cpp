#include "newtonlab/families.hpp"

#include <algorithm>
#include <map>

namespace newtonlab {
namespace {

void check_prime(std::int64_t p) {
  if (!is_odd_prime(p)) fail(ErrorCode::InvalidCover, "p=" + std::to_string(p) + " is not an odd prime");
}

std::int64_t delta_for(std::int64_t d) { return d % 2 == 0 ? 2 : 1; }

void finish(FamilyMember& m) {
  m.predicted = hodge_lower_bound(m.spec);
  m.exactness = exactness_class(m.spec);
  if (rh_genus(m.spec) != m.g) {
    fail(ErrorCode::HeightMismatch, "constructed cover " + m.spec.str() + " has genus " +
                                        std::to_string(rh_genus(m.spec)) + ", expected " +
                                        std::to_string(m.g));
  }
}

}  // namespace

std::string FamilyMember::str() const {
  std::string out;
  if (source == FamilySource::ManyBranchPoints) {
    out = "source=T4 p=" + std::to_string(p) + " d=" + std::to_string(d) + " g=" + std::to_string(g) +
          " k=" + std::to_string(k) + " delta=" + std::to_string(delta) + " i=" + std::to_string(i) +
          " j=" + std::to_string(j);
  } else {
    out = "source=T5 p=" + std::to_string(p) + " g=" + std::to_string(g) + " k=" + std::to_string(k) +
          " d=" + std::to_string(d) + " i=" + std::to_string(i) + " u=" + std::to_string(u) +
          " v=" + std::to_string(v) + " branches=" + format_branches(spec.branches) +
          " split=" + (split_pole ? "d-2,1" : "none");
  }
  out += " slopes=" + predicted.str() + " exact=" + std::string(to_string(exactness));
  return out;
}

Rational theorem4_slack(std::int64_t p, std::int64_t d, std::int64_t g, std::int64_t k) {
  const Rational lhs = Rational(2 * g - 2 * p * (p - 1), d + 1);
  return lhs - Rational(k * delta_for(d) * (p - 1));
}

std::optional<std::int64_t> theorem4_max_k(std::int64_t p, std::int64_t d, std::int64_t g) {
  const std::int64_t num = 2 * g - 2 * p * (p - 1);
  if (num < 0) return std::nullopt;
  return num / ((d + 1) * delta_for(d) * (p - 1));
}

FamilyMember construct_theorem4(std::int64_t p, std::int64_t d, std::int64_t g, std::int64_t k) {
  check_prime(p);
  if (d < 2) fail(ErrorCode::InvalidCover, "d=" + std::to_string(d) + " (need d >= 2)");
  if (d % p == 0) fail(ErrorCode::ConductorDivisibleByP, "p=" + std::to_string(p) + " divides d=" + std::to_string(d));
  if (g < 1 || k < 0) fail(ErrorCode::InvalidCover, "need g >= 1 and k >= 0");
  const Rational slack = theorem4_slack(p, d, g, k);
  if (slack < Rational(0)) {
    fail(ErrorCode::Inadmissible, "p=" + std::to_string(p) + " d=" + std::to_string(d) +
                                      " g=" + std::to_string(g) + " k=" + std::to_string(k) +
                                      " misses the bound by " + (-slack).str());
  }
  FamilyMember m;
  m.source = FamilySource::ManyBranchPoints;
  m.p = p;
  m.d = d;
  m.g = g;
  m.k = k;
  m.delta = delta_for(d);
  m.i = g % (p - 1);
  // delta * (d + 1) is even, so the last term is a multiple of p - 1.
  m.a = g - m.i * p + (p - 1) - k * m.delta * (p - 1) * (d + 1) / 2;
  if (m.a < 0 || m.a % (p - 1) != 0) {
    fail(ErrorCode::NonIntegralA, "A=" + std::to_string(m.a) + " for g=" + std::to_string(g));
  }
  m.j = m.a / (p - 1);
  m.spec.p = p;
  m.spec.base_genus = m.i;
  m.spec.base_ordinary = true;
  m.spec.branches.assign(static_cast<std::size_t>(m.j), BranchDatum{1, 1});
  m.spec.branches.insert(m.spec.branches.end(), static_cast<std::size_t>(m.delta * k), BranchDatum{d, 1});
  finish(m);
  return m;
}

FamilyMember construct_theorem5(std::int64_t p, std::int64_t g) {
  check_prime(p);
  if (g < 0) fail(ErrorCode::GenusTooSmall, "g=" + std::to_string(g));
  FamilyMember m;
  m.source = FamilySource::OneBranchPoint;
  m.p = p;
  m.g = g;
  const std::int64_t half = (p - 1) / 2;
  m.i = g % half;
  // Least nonnegative solution of p*u - (p-1) = i + half*v.
  if (m.i >= 1) {
    m.u = m.i;
    m.v = 2 * (m.i - 1);
  } else {
    m.u = half;
    m.v = p - 2;
  }
  m.k = (g - m.i) / half;
  m.d = m.k - 1 - m.v;
  if (m.d < 1) fail(ErrorCode::GenusTooSmall, "g=" + std::to_string(g) + " gives conductor " + std::to_string(m.d));
  m.spec.p = p;
  m.spec.base_genus = m.u;
  m.spec.base_ordinary = true;
  if (m.d % p != 0) {
    m.spec.branches = {BranchDatum{m.d, 1}};
  } else {
    if (m.d - 2 < 1) fail(ErrorCode::GenusTooSmall, "g=" + std::to_string(g) + " leaves no valid split pole");
    m.split_pole = true;
    m.spec.branches = {BranchDatum{m.d - 2, 1}, BranchDatum{1, 1}};
  }
  finish(m);
  return m;
}

OortWitness oort_witness(std::int64_t p, std::int64_t d, GenusIndex first, GenusIndex second) {
  OortWitness w{construct_theorem4(p, d, first.g, first.k), construct_theorem4(p, d, second.g, second.k),
                construct_theorem4(p, d, first.g + second.g, first.k + second.k), {}, false};
  w.amalgam = amalgamate(w.first.predicted, w.second.predicted);
  w.holds = w.amalgam == w.combined.predicted;
  if (!w.holds) {
    fail(ErrorCode::CounterexampleFound, "amalgam " + w.amalgam.str() + " != prediction " + w.combined.predicted.str());
  }
  return w;
}

FrequencyReport frequency_report(const std::vector<FamilyMember>& members,
                                 const std::vector<Rational>& slope_set) {
  if (members.empty() || slope_set.empty()) fail(ErrorCode::EmptyInput, "frequency report needs members and slopes");
  std::map<Rational, std::int64_t> weight;
  for (const Rational& s : slope_set) {
    if (s < Rational(0) || s > Rational(1)) fail(ErrorCode::SlopeOutOfRange, "slope " + s.str());
    ++weight[s];
  }
  for (const auto& [s, c] : weight) {
    auto it = weight.find(Rational(1) - s);
    if (it == weight.end() || it->second != c) fail(ErrorCode::NotSymmetric, "slope set is not symmetric at " + s.str());
  }
  const Rational n(static_cast<std::int64_t>(slope_set.size()));
  FrequencyReport report;
  for (const auto& [s, c] : weight) report.distinct_slopes.push_back(s);
  Rational sup;
  for (const FamilyMember& m : members) {
    FrequencyRow row;
    row.g = m.g;
    const Rational expected = Rational(2 * m.g) / n;
    std::int64_t covered = 0;
    for (const auto& [s, c] : weight) {
      const std::int64_t count = m.predicted.multiplicity(s);
      covered += count;
      const Rational e = Rational(count, c) - expected;
      row.deviations.emplace_back(s, e);
      sup = std::max(sup, abs(e));
    }
    if (covered != m.predicted.height()) {
      fail(ErrorCode::SlopeSetMismatch, "g=" + std::to_string(m.g) + " polygon has slopes outside the set");
    }
    row.running_sup = sup;
    report.rows.push_back(std::move(row));
  }
  report.epsilon = sup;
  return report;
}

}  // namespace newtonlab
