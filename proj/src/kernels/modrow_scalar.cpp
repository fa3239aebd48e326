#include "gext/kernels/modrow.hpp"

namespace gext::kernels::scalar {

namespace {
inline Residue mulmod(Residue a, Residue b, Residue m) {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % m);
}
inline Residue addmod(Residue a, Residue b, Residue m) {
  const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<Residue>(s >= m ? s - m : s);
}
}  // namespace

void axpy_mod(Residue* dst, const Residue* src, std::size_t n, Residue factor, Residue m) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < n; ++i) dst[i] = addmod(dst[i], mulmod(factor, src[i], m), m);
}

void scale_mod(Residue* row, std::size_t n, Residue factor, Residue m) {
  for (std::size_t i = 0; i < n; ++i) row[i] = mulmod(factor, row[i], m);
}

void combine_mod(Residue* x, Residue* y, std::size_t n, Residue a, Residue b, Residue c,
                 Residue d, Residue m) {
  for (std::size_t i = 0; i < n; ++i) {
    const Residue xi = x[i];
    const Residue yi = y[i];
    x[i] = addmod(mulmod(a, xi, m), mulmod(b, yi, m), m);
    y[i] = addmod(mulmod(c, xi, m), mulmod(d, yi, m), m);
  }
}

Residue dot_mod(const Residue* x, const Residue* y, std::size_t n, Residue m) {
  Residue acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc = addmod(acc, mulmod(x[i], y[i], m), m);
  return acc;
}

}  // namespace gext::kernels::scalar
