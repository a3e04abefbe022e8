#include <array>

#include "newtonlab/error.hpp"
#include "small_field.hpp"

namespace newtonlab::kernels {

std::uint64_t count_trace_zero_scalar(const CountProblem& problem, std::uint64_t begin,
                                      std::uint64_t end) {
  const detail::SmallField field(problem);
  const auto num = detail::trimmed(problem.num, problem.p);
  const auto den = detail::trimmed(problem.den, problem.p);
  if (den.empty()) fail(ErrorCode::DomainError, "zero denominator");
  detail::Odometer x(problem.p, problem.e, begin);
  std::array<std::int32_t, detail::kMaxDegree> n{}, d{}, d_inv{}, f{};
  std::uint64_t count = 0;
  for (std::uint64_t idx = begin; idx < end; ++idx, x.next()) {
    field.horner(den, x.digits(), d.data());
    if (!field.inverse(d.data(), d_inv.data())) continue;  // pole
    field.horner(num, x.digits(), n.data());
    field.mul(n.data(), d_inv.data(), f.data());
    if (field.trace(f.data()) == 0) ++count;
  }
  return count;
}

}  // namespace newtonlab::kernels
