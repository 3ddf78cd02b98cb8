#pragma once

#include <cstdint>
#include <string>

namespace sl2bar {

/// Polynomial over GF(2) stored as a coefficient bit-mask: bit i is the
/// coefficient of x^i. Degrees up to 63 are representable; products that
/// would overflow throw.
class Gf2Poly {
 public:
  constexpr Gf2Poly() = default;
  constexpr explicit Gf2Poly(std::uint64_t bits) : bits_(bits) {}

  static constexpr Gf2Poly zero() { return Gf2Poly(0); }
  static constexpr Gf2Poly one() { return Gf2Poly(1); }
  static constexpr Gf2Poly x() { return Gf2Poly(2); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }
  constexpr bool coeff(int i) const { return ((bits_ >> i) & 1U) != 0; }

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const;

  friend constexpr Gf2Poly operator+(Gf2Poly a, Gf2Poly b) { return Gf2Poly(a.bits_ ^ b.bits_); }
  friend Gf2Poly operator*(Gf2Poly a, Gf2Poly b);
  friend Gf2Poly operator%(Gf2Poly a, Gf2Poly m);
  friend constexpr bool operator==(Gf2Poly a, Gf2Poly b) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct Gf2DivMod {
  Gf2Poly quotient;
  Gf2Poly remainder;
};

Gf2DivMod divmod(Gf2Poly a, Gf2Poly m);
Gf2Poly mulmod(Gf2Poly a, Gf2Poly b, Gf2Poly m);
Gf2Poly powmod(Gf2Poly base, std::uint64_t exponent, Gf2Poly m);
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

/// p(h) mod m, by Horner's rule.
Gf2Poly compose_mod(Gf2Poly p, Gf2Poly h, Gf2Poly m);

/// Rabin's test. Requires degree <= 32.
bool is_irreducible(Gf2Poly f);

/// Irreducible and x has multiplicative order 2^deg - 1 modulo f.
bool is_primitive(Gf2Poly f);

/// Human-readable form, e.g. "x^2+x+1".
std::string to_string(Gf2Poly p);

}  // namespace sl2bar
