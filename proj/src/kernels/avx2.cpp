#include "superjac/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define SUPERJAC_HAVE_AVX2_TU 1
#endif

namespace superjac::kernels::avx2 {

#ifdef SUPERJAC_HAVE_AVX2_TU

namespace {

// x in [0, 2^24): exact in float; the quotient estimate is off by at most one.
__attribute__((target("avx2,fma"))) inline __m256i reduce(__m256i x, __m256 inv_p, __m256i vp) {
  __m256 q = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(x), inv_p));
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(_mm256_cvtps_epi32(q), vp));
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, vp));
  __m256i big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(vp, _mm256_set1_epi32(1)));
  return _mm256_sub_epi32(r, _mm256_and_si256(big, vp));
}

}  // namespace

__attribute__((target("avx2,fma"))) void linear_forms_mod_p(
    const std::uint32_t* digits, std::size_t dim, std::size_t count, const std::uint32_t* forms,
    std::size_t nforms, std::uint32_t p, std::uint32_t* out) {
  const std::uint64_t pm1 = p - 1;
  const std::uint64_t limit = (1u << 24) - p;
  // how many products fit before a partial reduction is required
  std::size_t block = pm1 == 0 ? dim : static_cast<std::size_t>(limit / (pm1 * pm1));
  if (block == 0 || p >= (1u << 12)) {
    scalar::linear_forms_mod_p(digits, dim, count, forms, nforms, p, out);
    return;
  }
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const std::size_t vec_end = count - count % 8;
  for (std::size_t f = 0; f < nforms; ++f) {
    const std::uint32_t* row = forms + f * dim;
    std::uint32_t* dst = out + f * count;
    for (std::size_t e = 0; e < vec_end; e += 8) {
      __m256i acc = _mm256_setzero_si256();
      std::size_t since = 0;
      for (std::size_t d = 0; d < dim; ++d) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(digits + d * count + e));
        acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(v, _mm256_set1_epi32(static_cast<int>(row[d]))));
        if (++since == block) {
          acc = reduce(acc, inv_p, vp);
          since = 1;  // a reduced value < p counts like one more product
        }
      }
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + e), reduce(acc, inv_p, vp));
    }
    for (std::size_t e = vec_end; e < count; ++e) {
      std::uint64_t acc = 0;
      for (std::size_t d = 0; d < dim; ++d) acc += std::uint64_t(row[d]) * digits[d * count + e];
      dst[e] = static_cast<std::uint32_t>(acc % p);
    }
  }
}

#else

void linear_forms_mod_p(const std::uint32_t* digits, std::size_t dim, std::size_t count,
                        const std::uint32_t* forms, std::size_t nforms, std::uint32_t p,
                        std::uint32_t* out) {
  scalar::linear_forms_mod_p(digits, dim, count, forms, nforms, p, out);
}

#endif

}  // namespace superjac::kernels::avx2
