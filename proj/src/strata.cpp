#include "newtonlab/strata.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

#include "newtonlab/parallel.hpp"

namespace newtonlab {

ModuliDims moduli_dims(std::int64_t g) {
  if (g < 2) fail(ErrorCode::GenusTooSmall, "g=" + std::to_string(g) + " (need g >= 2)");
  ModuliDims d;
  d.g = g;
  d.dim_ag = g * (g + 1) / 2;
  d.dim_torelli = 3 * g - 3;
  d.codim_torelli = d.dim_ag - d.dim_torelli;
  return d;
}

UnlikelyReport is_unlikely_polygon(const NewtonPolygon& p) {
  const ModuliDims dims = moduli_dims(p.genus());
  UnlikelyReport r;
  r.polygon = p;
  r.omega = lattice_points_below(p);
  r.codim_torelli = dims.codim_torelli;
  r.ambient_dim = dims.dim_ag;
  const std::int64_t total = r.omega.count + r.codim_torelli;
  r.is_unlikely = total > r.ambient_dim;
  r.marginal = total == r.ambient_dim || (!r.is_unlikely && !r.omega.exact_codimension);
  return r;
}

UnlikelyFamilyReport unlikely_family_report(std::vector<FamilyMemberPolygon> members,
                                            const BasicGraph& reference, unsigned threads) {
  if (members.empty()) fail(ErrorCode::EmptyInput, "no family members");
  UnlikelyFamilyReport report;
  report.rows.resize(members.size());
  std::exception_ptr error;
  std::mutex error_mutex;
  parallel_for(members.size(), threads, [&](std::size_t i) {
    try {
      const auto& m = members[i];
      if (m.polygon.genus() != m.g) {
        fail(ErrorCode::DomainMismatch, "member polygon height does not match g=" +
                                            std::to_string(m.g));
      }
      FamilyRow row;
      row.g = m.g;
      row.verdict = is_unlikely_polygon(m.polygon);
      row.min_gap = min_gap(scaled(m.polygon), reference);
      row.growth = Rational(row.verdict.omega.count) / Rational(m.g * m.g);
      report.rows[i] = std::move(row);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  });
  if (error) std::rethrow_exception(error);

  // Scan from the largest genus down for the longest all-unlikely tail.
  std::vector<std::size_t> order(report.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return report.rows[a].g < report.rows[b].g;
  });
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (!report.rows[*it].verdict.is_unlikely) break;
    report.threshold = report.rows[*it].g;
  }
  return report;
}

}  // namespace newtonlab
