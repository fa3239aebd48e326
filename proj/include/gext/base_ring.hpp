#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gext {

/// Elements of every base ring are stored as GMP integers in canonical form:
/// arbitrary integers over Z, residues in [0, n) over Z/n and F_p.
using Scalar = mpz_class;
using Vector = std::vector<Scalar>;

enum class RingKind { Integers, IntegersMod, PrimeField };

/// Largest modulus accepted for Z/n and F_p. Residues must fit the 32-bit row
/// kernels used by the modular elimination routines.
inline constexpr std::uint32_t kMaxModulus = 0x7fffffffu;

/// Result of the extended Euclidean algorithm: g = s*a + t*b.
struct Bezout {
  Scalar g;
  Scalar s;
  Scalar t;
};

class BaseRing {
 public:
  BaseRing() = default;

  static BaseRing integers();
  /// Throws InvalidArgument unless 2 <= n <= kMaxModulus.
  static BaseRing integers_mod(std::uint64_t n);
  /// Throws InvalidArgument unless p is a prime <= kMaxModulus.
  static BaseRing prime_field(std::uint64_t p);

  RingKind kind() const { return kind_; }
  /// 0 over Z.
  std::uint32_t modulus() const { return modulus_; }
  bool is_integers() const { return kind_ == RingKind::Integers; }
  bool is_finite() const { return kind_ != RingKind::Integers; }
  /// True for F_p and for Z/n with n prime.
  bool is_field() const;

  Scalar reduce(const Scalar& x) const;
  Scalar from_int(long x) const { return reduce(Scalar(x)); }
  bool is_canonical(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }

  bool is_unit(const Scalar& x) const;
  /// Multiplicative inverse of a unit; nullopt otherwise.
  std::optional<Scalar> inverse(const Scalar& x) const;
  /// Some q with a*q == b, if one exists.
  std::optional<Scalar> divide(const Scalar& b, const Scalar& a) const;
  /// Canonical generator of the ideal (x): |x| over Z, gcd(x, n) mod n over Z/n.
  Scalar ideal_generator(const Scalar& x) const;
  /// A unit u with u*x == ideal_generator(x).
  Scalar normalizing_unit(const Scalar& x) const;

  /// Human-readable name: "Z", "Z/4", "F_2".
  std::string name() const;

  friend bool operator==(const BaseRing&, const BaseRing&) = default;

 private:
  BaseRing(RingKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_ = RingKind::Integers;
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// Extended gcd over Z with g >= 0.
Bezout extended_gcd(const Scalar& a, const Scalar& b);

/// Canonical vector helpers.
Vector zero_vector(const BaseRing& ring, std::size_t n);
Vector unit_vector(const BaseRing& ring, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector reduce(const BaseRing& ring, Vector v);

}  // namespace gext
