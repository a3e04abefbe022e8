#include "newtonlab/error.hpp"
#include "newtonlab/kernels.hpp"

namespace newtonlab::kernels {

std::string_view to_string(Path path) {
  return path == Path::Avx2 ? "avx2" : "scalar";
}

bool cpu_has_avx2() {
#if defined(NEWTONLAB_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool avx2_supported(const CountProblem& problem) {
  if (!cpu_has_avx2()) return false;
  // Unreduced sums reach 2 e (p-1)^2 and must stay exact in a float.
  const std::int64_t p = problem.p;
  return problem.e >= 1 && 2 * problem.e * (p - 1) * (p - 1) < (std::int64_t{1} << 24);
}

Path select_path(const CountProblem& problem) {
  return avx2_supported(problem) ? Path::Avx2 : Path::Scalar;
}

std::uint64_t count_trace_zero(const CountProblem& problem, std::uint64_t begin, std::uint64_t end,
                               Path path) {
  if (path == Path::Avx2) {
#if defined(NEWTONLAB_HAVE_AVX2)
    return count_trace_zero_avx2(problem, begin, end);
#else
    fail(ErrorCode::DomainError, "AVX2 kernel not built");
#endif
  }
  return count_trace_zero_scalar(problem, begin, end);
}

}  // namespace newtonlab::kernels
