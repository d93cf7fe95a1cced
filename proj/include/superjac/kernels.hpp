#pragma once
// Batched F_p-linear forms over element coordinate vectors.
//
// Layout: digits is dim x count, column `e` holds the coordinates of element e
// (digits[d * count + e]). forms is nforms x dim. The result
// out[f * count + e] = sum_d forms[f * dim + d] * digits[d * count + e] mod p.
// All inputs must already be reduced mod p.

#include <cstddef>
#include <cstdint>

namespace superjac::kernels {

enum class Isa { scalar, avx2, neon };

const char* isa_name(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();
// Pins the dispatcher (tests, reproducibility runs). Throws if unavailable.
void force_isa(Isa isa);
void reset_isa();

void linear_forms_mod_p(const std::uint32_t* digits, std::size_t dim, std::size_t count,
                        const std::uint32_t* forms, std::size_t nforms, std::uint32_t p,
                        std::uint32_t* out);

namespace scalar {
void linear_forms_mod_p(const std::uint32_t* digits, std::size_t dim, std::size_t count,
                        const std::uint32_t* forms, std::size_t nforms, std::uint32_t p,
                        std::uint32_t* out);
}
namespace avx2 {
void linear_forms_mod_p(const std::uint32_t* digits, std::size_t dim, std::size_t count,
                        const std::uint32_t* forms, std::size_t nforms, std::uint32_t p,
                        std::uint32_t* out);
}
namespace neon {
void linear_forms_mod_p(const std::uint32_t* digits, std::size_t dim, std::size_t count,
                        const std::uint32_t* forms, std::size_t nforms, std::uint32_t p,
                        std::uint32_t* out);
}

}  // namespace superjac::kernels
