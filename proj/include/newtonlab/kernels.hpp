#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace newtonlab::kernels {

// One affine point-count pass: over all x in F_{p^e} with index in
// [begin, end), count those with den(x) != 0 and Tr(num(x) / den(x)) == 0.
// Field elements are indexed by their base-p coefficient digits. num and den
// have coefficients in F_p (lowest degree first, den nonzero).
struct CountProblem {
  std::int32_t p = 0;
  int e = 0;
  // c_0 .. c_{e-1} of the monic modulus.
  std::span<const std::int32_t> modulus;
  // Tr(t^i), i < e.
  std::span<const std::int32_t> trace_basis;
  std::span<const std::int32_t> num;
  std::span<const std::int32_t> den;
};

enum class Path { Scalar, Avx2 };

std::string_view to_string(Path path);

// Reference implementation: one element at a time, per-element inversion.
std::uint64_t count_trace_zero_scalar(const CountProblem& problem, std::uint64_t begin,
                                      std::uint64_t end);

// Eight lanes per vector, batched inversion. Only callable when
// avx2_supported(problem) holds.
std::uint64_t count_trace_zero_avx2(const CountProblem& problem, std::uint64_t begin,
                                    std::uint64_t end);

// CPU has AVX2 and this build compiled the AVX2 kernel.
bool cpu_has_avx2();
// Additionally the problem fits the kernel's exact float-based reduction.
bool avx2_supported(const CountProblem& problem);

// Fastest path available for this problem.
Path select_path(const CountProblem& problem);

std::uint64_t count_trace_zero(const CountProblem& problem, std::uint64_t begin, std::uint64_t end,
                               Path path);

}  // namespace newtonlab::kernels
