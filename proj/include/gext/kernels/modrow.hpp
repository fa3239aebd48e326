#pragma once

// Row kernels for dense elimination over Z/n with word-size residues.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The variant is picked once at startup from the running CPU and
// can be pinned for testing. All variants produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace gext::kernels {

using Residue = std::uint32_t;

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Moduli below this bound let products of two residues fit in 32 bits, which
/// the vector variants rely on. Larger moduli always take the scalar path.
inline constexpr std::uint32_t kVectorModulusLimit = 1u << 16;

/// dst[i] = dst[i] + factor * src[i]  (mod m)
void axpy_mod(std::span<Residue> dst, std::span<const Residue> src, Residue factor,
              Residue modulus);

/// row[i] = factor * row[i]  (mod m)
void scale_mod(std::span<Residue> row, Residue factor, Residue modulus);

/// (x, y) <- (a*x + b*y, c*x + d*y)  (mod m), elementwise.
void combine_mod(std::span<Residue> x, std::span<Residue> y, Residue a, Residue b, Residue c,
                 Residue d, Residue modulus);

/// sum_i x[i] * y[i]  (mod m)
Residue dot_mod(std::span<const Residue> x, std::span<const Residue> y, Residue modulus);

/// Best variant supported by this CPU and build.
Isa detected_isa();
/// Variant currently used by the dispatching entry points above.
Isa active_isa();
/// Pin a variant; falls back to Scalar if the requested one is unavailable.
/// Returns the variant actually selected.
Isa set_active_isa(Isa isa);
bool isa_available(Isa isa);

// Direct access to each variant, for equivalence tests and benchmarks.
namespace scalar {
void axpy_mod(Residue* dst, const Residue* src, std::size_t n, Residue factor, Residue m);
void scale_mod(Residue* row, std::size_t n, Residue factor, Residue m);
void combine_mod(Residue* x, Residue* y, std::size_t n, Residue a, Residue b, Residue c,
                 Residue d, Residue m);
Residue dot_mod(const Residue* x, const Residue* y, std::size_t n, Residue m);
}  // namespace scalar

namespace avx2 {
// Preconditions: m < kVectorModulusLimit and inputs reduced mod m.
void axpy_mod(Residue* dst, const Residue* src, std::size_t n, Residue factor, Residue m);
void scale_mod(Residue* row, std::size_t n, Residue factor, Residue m);
void combine_mod(Residue* x, Residue* y, std::size_t n, Residue a, Residue b, Residue c,
                 Residue d, Residue m);
Residue dot_mod(const Residue* x, const Residue* y, std::size_t n, Residue m);
}  // namespace avx2

}  // namespace gext::kernels
