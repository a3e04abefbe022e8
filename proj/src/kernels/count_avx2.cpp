// Compiled with -mavx2; only reached through the runtime dispatcher.

#include <immintrin.h>

#include <array>
#include <vector>

#include "newtonlab/error.hpp"
#include "small_field.hpp"

namespace newtonlab::kernels {
namespace {

constexpr int kLanes = 8;
constexpr int kBatches = 64;  // vectors per batched inversion

using detail::kMaxDegree;

class VecField {
 public:
  explicit VecField(const detail::SmallField& f)
      : e_(f.e()),
        p_(_mm256_set1_epi32(f.p())),
        p_minus_1_(_mm256_set1_epi32(f.p() - 1)),
        inv_p_(_mm256_set1_ps(1.0f / static_cast<float>(f.p()))) {
    for (int i = 0; i < e_; ++i) {
      neg_mod_[static_cast<std::size_t>(i)] = _mm256_set1_epi32(f.neg_modulus(i));
      trace_[static_cast<std::size_t>(i)] = _mm256_set1_epi32(f.trace_basis(i));
    }
  }

  // v mod p for 0 <= v < 2^24. The float quotient is off by at most one.
  __m256i reduce(__m256i v) const {
    const __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(v), inv_p_));
    __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, p_));
    r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), r), p_));
    r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, p_minus_1_), p_));
    return r;
  }

  // out may alias a or b.
  void mul(const __m256i* a, const __m256i* b, __m256i* out) const {
    std::array<__m256i, 2 * kMaxDegree> prod;
    for (int k = 0; k < 2 * e_ - 1; ++k) prod[static_cast<std::size_t>(k)] = _mm256_setzero_si256();
    for (int i = 0; i < e_; ++i) {
      for (int j = 0; j < e_; ++j) {
        auto& slot = prod[static_cast<std::size_t>(i + j)];
        slot = _mm256_add_epi32(slot, _mm256_mullo_epi32(a[i], b[j]));
      }
    }
    for (int k = 2 * e_ - 2; k >= e_; --k) {
      const __m256i h = reduce(prod[static_cast<std::size_t>(k)]);
      for (int i = 0; i < e_; ++i) {
        auto& slot = prod[static_cast<std::size_t>(k - e_ + i)];
        slot = _mm256_add_epi32(slot, _mm256_mullo_epi32(h, neg_mod_[static_cast<std::size_t>(i)]));
      }
    }
    for (int i = 0; i < e_; ++i) out[i] = reduce(prod[static_cast<std::size_t>(i)]);
  }

  void horner(const std::vector<std::int32_t>& poly, const __m256i* x, __m256i* out) const {
    for (int i = 0; i < e_; ++i) out[i] = _mm256_setzero_si256();
    if (poly.empty()) return;
    out[0] = _mm256_set1_epi32(poly.back());
    for (std::size_t k = poly.size(); k-- > 1;) {
      mul(out, x, out);
      __m256i c0 = _mm256_add_epi32(out[0], _mm256_set1_epi32(poly[k - 1]));
      out[0] = _mm256_sub_epi32(c0, _mm256_and_si256(_mm256_cmpgt_epi32(c0, p_minus_1_), p_));
    }
  }

  __m256i trace(const __m256i* a) const {
    __m256i acc = _mm256_setzero_si256();
    for (int i = 0; i < e_; ++i) acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(a[i], trace_[static_cast<std::size_t>(i)]));
    return reduce(acc);
  }

  // All-ones lanes where every coefficient is zero.
  __m256i zero_mask(const __m256i* a) const {
    __m256i any = _mm256_setzero_si256();
    for (int i = 0; i < e_; ++i) any = _mm256_or_si256(any, a[i]);
    return _mm256_cmpeq_epi32(any, _mm256_setzero_si256());
  }

 private:
  int e_;
  __m256i p_;
  __m256i p_minus_1_;
  __m256 inv_p_;
  std::array<__m256i, kMaxDegree> neg_mod_{};
  std::array<__m256i, kMaxDegree> trace_{};
};

}  // namespace

std::uint64_t count_trace_zero_avx2(const CountProblem& problem, std::uint64_t begin,
                                    std::uint64_t end) {
  if (!avx2_supported(problem)) fail(ErrorCode::DomainError, "AVX2 kernel not applicable");
  const detail::SmallField field(problem);
  const VecField vf(field);
  const int e = problem.e;
  const auto num = detail::trimmed(problem.num, problem.p);
  const auto den = detail::trimmed(problem.den, problem.p);
  if (den.empty()) fail(ErrorCode::DomainError, "zero denominator");

  const std::size_t stride = static_cast<std::size_t>(e);
  std::vector<__m256i> n_vals(kBatches * stride), d_vals(kBatches * stride), prefix(kBatches * stride);
  std::array<__m256i, kBatches> skip{};  // lanes that are poles or past `end`
  std::array<__m256i, kMaxDegree> x{}, acc{}, d_inv{}, f{};
  alignas(32) std::array<std::int32_t, kMaxDegree * kLanes> lanes{};
  const __m256i one0 = _mm256_set1_epi32(1);

  detail::Odometer odo(problem.p, e, begin);
  std::uint64_t idx = begin;
  std::uint64_t count = 0;
  while (idx < end) {
    int batches = 0;
    for (; batches < kBatches && idx < end; ++batches) {
      alignas(32) std::array<std::int32_t, kLanes> valid{};
      for (int l = 0; l < kLanes; ++l) {
        if (idx < end) {
          for (int i = 0; i < e; ++i) lanes[static_cast<std::size_t>(i * kLanes + l)] = odo.digits()[i];
          valid[static_cast<std::size_t>(l)] = -1;
          ++idx;
          odo.next();
        } else {
          for (int i = 0; i < e; ++i) lanes[static_cast<std::size_t>(i * kLanes + l)] = 0;
        }
      }
      for (int i = 0; i < e; ++i) {
        x[static_cast<std::size_t>(i)] = _mm256_load_si256(reinterpret_cast<const __m256i*>(&lanes[static_cast<std::size_t>(i * kLanes)]));
      }
      __m256i* n_b = &n_vals[static_cast<std::size_t>(batches) * stride];
      __m256i* d_b = &d_vals[static_cast<std::size_t>(batches) * stride];
      vf.horner(num, x.data(), n_b);
      vf.horner(den, x.data(), d_b);
      const __m256i invalid = _mm256_cmpeq_epi32(_mm256_load_si256(reinterpret_cast<const __m256i*>(valid.data())), _mm256_setzero_si256());
      const __m256i s = _mm256_or_si256(vf.zero_mask(d_b), invalid);
      skip[static_cast<std::size_t>(batches)] = s;
      // Skipped lanes take D = 1 so the running product stays invertible.
      d_b[0] = _mm256_blendv_epi8(d_b[0], one0, s);
      for (int i = 1; i < e; ++i) d_b[i] = _mm256_andnot_si256(s, d_b[i]);
      __m256i* pre = &prefix[static_cast<std::size_t>(batches) * stride];
      if (batches == 0) {
        for (int i = 0; i < e; ++i) pre[i] = d_b[i];
      } else {
        vf.mul(pre - stride, d_b, pre);
      }
    }

    // Invert the full product lane by lane.
    const __m256i* last = &prefix[static_cast<std::size_t>(batches - 1) * stride];
    for (int i = 0; i < e; ++i) _mm256_store_si256(reinterpret_cast<__m256i*>(&lanes[static_cast<std::size_t>(i * kLanes)]), last[i]);
    for (int l = 0; l < kLanes; ++l) {
      std::array<std::int32_t, kMaxDegree> a{}, inv{};
      for (int i = 0; i < e; ++i) a[static_cast<std::size_t>(i)] = lanes[static_cast<std::size_t>(i * kLanes + l)];
      field.inverse(a.data(), inv.data());
      for (int i = 0; i < e; ++i) lanes[static_cast<std::size_t>(i * kLanes + l)] = inv[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < e; ++i) acc[static_cast<std::size_t>(i)] = _mm256_load_si256(reinterpret_cast<const __m256i*>(&lanes[static_cast<std::size_t>(i * kLanes)]));

    for (int b = batches - 1; b >= 0; --b) {
      const __m256i* d_b = &d_vals[static_cast<std::size_t>(b) * stride];
      if (b > 0) {
        vf.mul(acc.data(), &prefix[static_cast<std::size_t>(b - 1) * stride], d_inv.data());
        vf.mul(acc.data(), d_b, acc.data());
      } else {
        for (int i = 0; i < e; ++i) d_inv[static_cast<std::size_t>(i)] = acc[static_cast<std::size_t>(i)];
      }
      vf.mul(&n_vals[static_cast<std::size_t>(b) * stride], d_inv.data(), f.data());
      const __m256i hit = _mm256_andnot_si256(skip[static_cast<std::size_t>(b)],
                                              _mm256_cmpeq_epi32(vf.trace(f.data()), _mm256_setzero_si256()));
      count += static_cast<std::uint64_t>(__builtin_popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(hit)))));
    }
  }
  return count;
}

}  // namespace newtonlab::kernels
