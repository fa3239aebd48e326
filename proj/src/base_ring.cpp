#include "gext/base_ring.hpp"

#include "gext/errors.hpp"

namespace gext {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

BaseRing BaseRing::integers() { return BaseRing(RingKind::Integers, 0); }

BaseRing BaseRing::integers_mod(std::uint64_t n) {
  if (n < 2 || n > kMaxModulus) {
    throw InvalidArgument("Z/n requires 2 <= n <= " + std::to_string(kMaxModulus) +
                          ", got " + std::to_string(n));
  }
  return BaseRing(RingKind::IntegersMod, static_cast<std::uint32_t>(n));
}

BaseRing BaseRing::prime_field(std::uint64_t p) {
  if (p > kMaxModulus || !is_prime(p)) {
    throw InvalidArgument("F_p requires a prime p <= " + std::to_string(kMaxModulus) +
                          ", got " + std::to_string(p));
  }
  return BaseRing(RingKind::PrimeField, static_cast<std::uint32_t>(p));
}

bool BaseRing::is_field() const {
  return kind_ == RingKind::PrimeField || (kind_ == RingKind::IntegersMod && is_prime(modulus_));
}

Scalar BaseRing::reduce(const Scalar& x) const {
  if (kind_ == RingKind::Integers) return x;
  Scalar r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), modulus_);
  return r;
}

bool BaseRing::is_canonical(const Scalar& x) const {
  if (kind_ == RingKind::Integers) return true;
  return x >= 0 && x < modulus_;
}

bool BaseRing::is_unit(const Scalar& x) const {
  if (kind_ == RingKind::Integers) return x == 1 || x == -1;
  Scalar g;
  Scalar r = reduce(x);
  mpz_gcd_ui(g.get_mpz_t(), r.get_mpz_t(), modulus_);
  return g == 1;
}

std::optional<Scalar> BaseRing::inverse(const Scalar& x) const {
  if (!is_unit(x)) return std::nullopt;
  if (kind_ == RingKind::Integers) return x;
  Scalar inv;
  Scalar n(modulus_);
  Scalar r = reduce(x);
  mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
  return reduce(inv);
}

std::optional<Scalar> BaseRing::divide(const Scalar& b, const Scalar& a) const {
  if (kind_ == RingKind::Integers) {
    if (a == 0) {
      if (b == 0) return Scalar(0);
      return std::nullopt;
    }
    if (!mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) return std::nullopt;
    return Scalar(b / a);
  }
  const Scalar n(modulus_);
  const Scalar ar = reduce(a);
  const Scalar br = reduce(b);
  Scalar g;
  mpz_gcd(g.get_mpz_t(), ar.get_mpz_t(), n.get_mpz_t());  // gcd(0, n) = n
  if (!mpz_divisible_p(br.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
  const Scalar reduced_n = n / g;
  if (reduced_n == 1) return Scalar(0);
  Scalar a_red = ar / g;
  Scalar inv;
  mpz_invert(inv.get_mpz_t(), a_red.get_mpz_t(), reduced_n.get_mpz_t());
  Scalar q = (br / g) * inv;
  mpz_fdiv_r(q.get_mpz_t(), q.get_mpz_t(), reduced_n.get_mpz_t());
  return q;
}

Scalar BaseRing::ideal_generator(const Scalar& x) const {
  if (kind_ == RingKind::Integers) return abs(x);
  Scalar g;
  Scalar r = reduce(x);
  mpz_gcd_ui(g.get_mpz_t(), r.get_mpz_t(), modulus_);
  return reduce(g);
}

Scalar BaseRing::normalizing_unit(const Scalar& x) const {
  if (kind_ == RingKind::Integers) return x < 0 ? Scalar(-1) : Scalar(1);
  const Scalar r = reduce(x);
  if (r == 0) return Scalar(1);
  const Scalar n(modulus_);
  Scalar g;
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
  // r = g * r', gcd(r', n/g) = 1. Invert r' modulo n/g, then lift to a unit mod n.
  const Scalar m = n / g;
  const Scalar r_prime = r / g;
  Scalar u0(1);
  if (m > 1) mpz_invert(u0.get_mpz_t(), r_prime.get_mpz_t(), m.get_mpz_t());
  for (Scalar u = u0; u < n; u += m) {
    Scalar gu;
    mpz_gcd(gu.get_mpz_t(), u.get_mpz_t(), n.get_mpz_t());
    if (gu == 1) return u;
  }
  throw InternalInconsistency("no normalizing unit found for " + r.get_str() + " mod " +
                              n.get_str());
}

std::string BaseRing::name() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::IntegersMod:
      return "Z/" + std::to_string(modulus_);
    case RingKind::PrimeField:
      return "F_" + std::to_string(modulus_);
  }
  return "?";
}

Bezout extended_gcd(const Scalar& a, const Scalar& b) {
  Bezout out;
  mpz_gcdext(out.g.get_mpz_t(), out.s.get_mpz_t(), out.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return out;
}

Vector zero_vector(const BaseRing&, std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(const BaseRing& ring, std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v.at(i) = ring.from_int(1);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vector reduce(const BaseRing& ring, Vector v) {
  for (auto& x : v) x = ring.reduce(x);
  return v;
}

}  // namespace gext
