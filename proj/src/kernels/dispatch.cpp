#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "superjac/kernels.hpp"

namespace superjac::kernels {

namespace {

Isa detect() {
  if (const char* env = std::getenv("SUPERJAC_ISA")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
  }
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::avx2;
#elif defined(__aarch64__) && defined(__ARM_NEON)
  return Isa::neon;
#endif
  return Isa::scalar;
}

std::atomic<int> forced{-1};

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "?";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__) && defined(__ARM_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa detected = detect();
  int f = forced.load(std::memory_order_relaxed);
  return f >= 0 ? static_cast<Isa>(f) : detected;
}

void force_isa(Isa isa) {
  if (!isa_available(isa)) throw std::runtime_error(std::string("ISA not available: ") + isa_name(isa));
  forced.store(static_cast<int>(isa));
}

void reset_isa() { forced.store(-1); }

void linear_forms_mod_p(const std::uint32_t* digits, std::size_t dim, std::size_t count,
                        const std::uint32_t* forms, std::size_t nforms, std::uint32_t p,
                        std::uint32_t* out) {
  switch (active_isa()) {
    case Isa::avx2: return avx2::linear_forms_mod_p(digits, dim, count, forms, nforms, p, out);
    case Isa::neon: return neon::linear_forms_mod_p(digits, dim, count, forms, nforms, p, out);
    case Isa::scalar: break;
  }
  scalar::linear_forms_mod_p(digits, dim, count, forms, nforms, p, out);
}

}  // namespace superjac::kernels
