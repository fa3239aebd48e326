#include <immintrin.h>

#include "gext/kernels/modrow.hpp"

namespace gext::kernels::avx2 {

namespace {

// Barrett constant for 32-bit products: mu = floor(2^32 / m). With products
// below 2^32 the estimated quotient is short by at most one, so a single
// conditional subtraction finishes the reduction.
struct Barrett {
  __m256i m;
  __m256i mu;
  explicit Barrett(Residue modulus)
      : m(_mm256_set1_epi32(static_cast<int>(modulus))),
        mu(_mm256_set1_epi32(static_cast<int>((std::uint64_t{1} << 32) / modulus))) {}
};

inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_blend_epi32(even, odd, 0xAA);
}

// x in [0, 2m) -> [0, m); unsigned min picks x - m when it did not wrap.
inline __m256i reduce_once(__m256i x, __m256i m) {
  return _mm256_min_epu32(x, _mm256_sub_epi32(x, m));
}

inline __m256i mulmod(__m256i a, __m256i b, const Barrett& br) {
  const __m256i prod = _mm256_mullo_epi32(a, b);
  const __m256i q = mulhi_epu32(prod, br.mu);
  const __m256i r = _mm256_sub_epi32(prod, _mm256_mullo_epi32(q, br.m));
  return reduce_once(r, br.m);
}

inline __m256i addmod(__m256i a, __m256i b, const Barrett& br) {
  return reduce_once(_mm256_add_epi32(a, b), br.m);
}

inline __m256i load(const Residue* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(Residue* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

}  // namespace

void axpy_mod(Residue* dst, const Residue* src, std::size_t n, Residue factor, Residue m) {
  if (factor == 0) return;
  const Barrett br(m);
  const __m256i f = _mm256_set1_epi32(static_cast<int>(factor));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    store(dst + i, addmod(load(dst + i), mulmod(f, load(src + i), br), br));
  }
  scalar::axpy_mod(dst + i, src + i, n - i, factor, m);
}

void scale_mod(Residue* row, std::size_t n, Residue factor, Residue m) {
  const Barrett br(m);
  const __m256i f = _mm256_set1_epi32(static_cast<int>(factor));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) store(row + i, mulmod(f, load(row + i), br));
  scalar::scale_mod(row + i, n - i, factor, m);
}

void combine_mod(Residue* x, Residue* y, std::size_t n, Residue a, Residue b, Residue c,
                 Residue d, Residue m) {
  const Barrett br(m);
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vb = _mm256_set1_epi32(static_cast<int>(b));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vd = _mm256_set1_epi32(static_cast<int>(d));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i xi = load(x + i);
    const __m256i yi = load(y + i);
    store(x + i, addmod(mulmod(va, xi, br), mulmod(vb, yi, br), br));
    store(y + i, addmod(mulmod(vc, xi, br), mulmod(vd, yi, br), br));
  }
  scalar::combine_mod(x + i, y + i, n - i, a, b, c, d, m);
}

Residue dot_mod(const Residue* x, const Residue* y, std::size_t n, Residue m) {
  const Barrett br(m);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) acc = addmod(acc, mulmod(load(x + i), load(y + i), br), br);
  alignas(32) Residue lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = scalar::dot_mod(x + i, y + i, n - i, m);
  for (Residue lane : lanes) total += lane;
  return static_cast<Residue>(total % m);
}

}  // namespace gext::kernels::avx2
