#include "superjac/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#define SUPERJAC_HAVE_NEON_TU 1
#endif

namespace superjac::kernels::neon {

#ifdef SUPERJAC_HAVE_NEON_TU

void linear_forms_mod_p(const std::uint32_t* digits, std::size_t dim, std::size_t count,
                        const std::uint32_t* forms, std::size_t nforms, std::uint32_t p,
                        std::uint32_t* out) {
  // 64-bit lane accumulators: no intermediate reductions needed for dim < 2^32
  const std::size_t vec_end = count - count % 4;
  for (std::size_t f = 0; f < nforms; ++f) {
    const std::uint32_t* row = forms + f * dim;
    std::uint32_t* dst = out + f * count;
    for (std::size_t e = 0; e < vec_end; e += 4) {
      uint64x2_t lo = vdupq_n_u64(0), hi = vdupq_n_u64(0);
      for (std::size_t d = 0; d < dim; ++d) {
        uint32x4_t v = vld1q_u32(digits + d * count + e);
        uint32x2_t w = vdup_n_u32(row[d]);
        lo = vmlal_u32(lo, vget_low_u32(v), w);
        hi = vmlal_u32(hi, vget_high_u32(v), w);
      }
      dst[e + 0] = static_cast<std::uint32_t>(vgetq_lane_u64(lo, 0) % p);
      dst[e + 1] = static_cast<std::uint32_t>(vgetq_lane_u64(lo, 1) % p);
      dst[e + 2] = static_cast<std::uint32_t>(vgetq_lane_u64(hi, 0) % p);
      dst[e + 3] = static_cast<std::uint32_t>(vgetq_lane_u64(hi, 1) % p);
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

}  // namespace superjac::kernels::neon
