#include "superjac/kernels.hpp"

namespace superjac::kernels::scalar {

void linear_forms_mod_p(const std::uint32_t* digits, std::size_t dim, std::size_t count,
                        const std::uint32_t* forms, std::size_t nforms, std::uint32_t p,
                        std::uint32_t* out) {
  for (std::size_t f = 0; f < nforms; ++f) {
    const std::uint32_t* row = forms + f * dim;
    std::uint32_t* dst = out + f * count;
    for (std::size_t e = 0; e < count; ++e) {
      std::uint64_t acc = 0;
      for (std::size_t d = 0; d < dim; ++d) acc += std::uint64_t(row[d]) * digits[d * count + e];
      dst[e] = static_cast<std::uint32_t>(acc % p);
    }
  }
}

}  // namespace superjac::kernels::scalar
