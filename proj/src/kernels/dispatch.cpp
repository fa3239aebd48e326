#include <atomic>
#include <cstdlib>
#include <cstring>

#include "gext/kernels/modrow.hpp"

namespace gext::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(GEXT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  // GEXT_KERNELS=scalar pins the reference path for the whole process.
  if (const char* env = std::getenv("GEXT_KERNELS"); env && std::strcmp(env, "scalar") == 0) {
    return Isa::Scalar;
  }
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

inline bool use_vector(Residue m) {
  return m < kVectorModulusLimit && active().load(std::memory_order_relaxed) == Isa::Avx2;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "?";
}

bool isa_available(Isa isa) { return isa == Isa::Scalar || cpu_has_avx2(); }

Isa detected_isa() { return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() { return active().load(); }

Isa set_active_isa(Isa isa) {
  const Isa chosen = isa_available(isa) ? isa : Isa::Scalar;
  active().store(chosen);
  return chosen;
}

#if defined(GEXT_HAVE_AVX2)
#define GEXT_DISPATCH(call_vector, call_scalar) \
  if (use_vector(modulus)) {                    \
    call_vector;                                \
  } else {                                      \
    call_scalar;                                \
  }
#else
#define GEXT_DISPATCH(call_vector, call_scalar) call_scalar;
#endif

void axpy_mod(std::span<Residue> dst, std::span<const Residue> src, Residue factor,
              Residue modulus) {
  GEXT_DISPATCH(avx2::axpy_mod(dst.data(), src.data(), dst.size(), factor, modulus),
                scalar::axpy_mod(dst.data(), src.data(), dst.size(), factor, modulus))
}

void scale_mod(std::span<Residue> row, Residue factor, Residue modulus) {
  GEXT_DISPATCH(avx2::scale_mod(row.data(), row.size(), factor, modulus),
                scalar::scale_mod(row.data(), row.size(), factor, modulus))
}

void combine_mod(std::span<Residue> x, std::span<Residue> y, Residue a, Residue b, Residue c,
                 Residue d, Residue modulus) {
  GEXT_DISPATCH(avx2::combine_mod(x.data(), y.data(), x.size(), a, b, c, d, modulus),
                scalar::combine_mod(x.data(), y.data(), x.size(), a, b, c, d, modulus))
}

Residue dot_mod(std::span<const Residue> x, std::span<const Residue> y, Residue modulus) {
#if defined(GEXT_HAVE_AVX2)
  if (use_vector(modulus)) return avx2::dot_mod(x.data(), y.data(), x.size(), modulus);
#endif
  return scalar::dot_mod(x.data(), y.data(), x.size(), modulus);
}

#undef GEXT_DISPATCH

}  // namespace gext::kernels
