#include <doctest.h>

#include <random>

#include "newtonlab/field.hpp"
#include "newtonlab/kernels.hpp"

using namespace newtonlab;

namespace {

struct Problem {
  FieldTower field;
  std::vector<std::int32_t> modulus, num, den;
  kernels::CountProblem view() const {
    kernels::CountProblem c;
    c.p = static_cast<std::int32_t>(field.prime());
    c.e = field.degree();
    c.modulus = modulus;
    c.trace_basis = field.trace_basis();
    c.num = num;
    c.den = den;
    return c;
  }
};

Problem random_problem(std::mt19937& rng, std::int64_t p, int e) {
  Problem pr{FieldTower::build(p, e, 32), {}, {}, {}};
  for (int i = 0; i < e; ++i) pr.modulus.push_back(static_cast<std::int32_t>(pr.field.modulus().coeff(i)));
  std::uniform_int_distribution<std::int32_t> c(0, static_cast<std::int32_t>(p - 1));
  std::uniform_int_distribution<int> deg(0, 6);
  pr.num.resize(static_cast<std::size_t>(deg(rng) + 1));
  pr.den.resize(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : pr.num) x = c(rng);
  for (auto& x : pr.den) x = c(rng);
  pr.num.back() = 1;
  pr.den.back() = 1;
  return pr;
}

FieldElement horner(const FieldTower& f, const std::vector<std::int32_t>& coeffs, const FieldElement& x) {
  FieldElement acc = f.zero();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = f.add(f.mul(acc, x), f.from_prime(*it));
  return acc;
}

// Element-by-element count through the FieldTower API.
std::uint64_t tower_count(const Problem& pr, std::uint64_t begin, std::uint64_t end) {
  std::uint64_t hits = 0;
  for (std::uint64_t i = begin; i < end; ++i) {
    const auto x = pr.field.from_index(i);
    const auto d = horner(pr.field, pr.den, x);
    if (pr.field.is_zero(d)) continue;
    const auto v = pr.field.mul(horner(pr.field, pr.num, x), pr.field.inverse(d));
    if (pr.field.trace(v) == 0) ++hits;
  }
  return hits;
}

}  // namespace

TEST_CASE("scalar kernel matches the field-tower count") {
  std::mt19937 rng(2024);
  for (auto [p, e] : {std::pair{3, 1}, std::pair{3, 4}, std::pair{5, 3}, std::pair{7, 2}, std::pair{13, 2}, std::pair{3, 7}}) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto pr = random_problem(rng, p, e);
      const std::uint64_t q = pr.field.size();
      CHECK(kernels::count_trace_zero_scalar(pr.view(), 0, q) == tower_count(pr, 0, q));
      CHECK(kernels::count_trace_zero_scalar(pr.view(), q / 3, q / 2) == tower_count(pr, q / 3, q / 2));
    }
  }
}

TEST_CASE("AVX2 kernel matches the scalar kernel") {
  if (!kernels::cpu_has_avx2()) {
    MESSAGE("AVX2 not available on this machine; equivalence test skipped");
    return;
  }
  std::mt19937 rng(77);
  const std::vector<std::pair<int, int>> shapes{{3, 1}, {3, 2}, {3, 5}, {3, 8}, {3, 11}, {5, 4},
                                                {7, 3}, {11, 2}, {13, 3}, {101, 2}, {251, 2}, {3, 16}};
  for (auto [p, e] : shapes) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto pr = random_problem(rng, p, e);
      const auto view = pr.view();
      REQUIRE(kernels::avx2_supported(view));
      const std::uint64_t q = pr.field.size();
      const std::uint64_t hi = std::min<std::uint64_t>(q, 200000);
      std::uniform_int_distribution<std::uint64_t> cut(0, hi);
      std::uint64_t a = cut(rng), b = cut(rng);
      if (a > b) std::swap(a, b);
      CHECK(kernels::count_trace_zero_avx2(view, 0, hi) == kernels::count_trace_zero_scalar(view, 0, hi));
      CHECK(kernels::count_trace_zero_avx2(view, a, b) == kernels::count_trace_zero_scalar(view, a, b));
      CHECK(kernels::count_trace_zero_avx2(view, a, a) == 0);
    }
  }
}

TEST_CASE("AVX2 handles dense poles and odd tails") {
  if (!kernels::cpu_has_avx2()) return;
  std::mt19937 rng(5);
  for (int e = 1; e <= 4; ++e) {
    auto pr = random_problem(rng, 3, e);
    // den = x^3 - x vanishes on all of F_3
    pr.den = {0, 2, 0, 1};
    const auto view = pr.view();
    for (std::uint64_t end = 0; end <= pr.field.size(); ++end) {
      CHECK(kernels::count_trace_zero_avx2(view, 0, end) == kernels::count_trace_zero_scalar(view, 0, end));
    }
  }
}

TEST_CASE("dispatch") {
  std::mt19937 rng(9);
  const auto pr = random_problem(rng, 3, 3);
  const auto view = pr.view();
  CHECK(kernels::to_string(kernels::Path::Scalar) == "scalar");
  CHECK(kernels::select_path(view) == (kernels::cpu_has_avx2() ? kernels::Path::Avx2 : kernels::Path::Scalar));
  CHECK(kernels::count_trace_zero(view, 0, 27, kernels::select_path(view)) ==
        kernels::count_trace_zero(view, 0, 27, kernels::Path::Scalar));
}
