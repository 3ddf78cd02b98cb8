#include "sl2bar/gf2_poly.hpp"

#include <bit>

#include "sl2bar/error.hpp"
#include "sl2bar/numtheory.hpp"

namespace sl2bar {

int Gf2Poly::degree() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

Gf2Poly operator*(Gf2Poly a, Gf2Poly b) {
  if (a.is_zero() || b.is_zero()) return Gf2Poly::zero();
  if (a.degree() + b.degree() > 63) {
    throw Error(ErrorCode::kBoundExceeded, "GF(2) polynomial product exceeds degree 63");
  }
  std::uint64_t acc = 0;
  std::uint64_t shifted = a.bits_;
  for (std::uint64_t rest = b.bits_; rest != 0; rest >>= 1, shifted <<= 1) {
    if (rest & 1U) acc ^= shifted;
  }
  return Gf2Poly(acc);
}

Gf2DivMod divmod(Gf2Poly a, Gf2Poly m) {
  if (m.is_zero()) throw Error(ErrorCode::kDivisionByZero, "GF(2) polynomial division by zero");
  const int dm = m.degree();
  std::uint64_t rem = a.bits();
  std::uint64_t quo = 0;
  for (int d = a.degree(); d >= dm; --d) {
    if ((rem >> d) & 1U) {
      rem ^= m.bits() << (d - dm);
      quo |= std::uint64_t{1} << (d - dm);
    }
  }
  return {Gf2Poly(quo), Gf2Poly(rem)};
}

Gf2Poly operator%(Gf2Poly a, Gf2Poly m) { return divmod(a, m).remainder; }

Gf2Poly mulmod(Gf2Poly a, Gf2Poly b, Gf2Poly m) { return ((a % m) * (b % m)) % m; }

Gf2Poly powmod(Gf2Poly base, std::uint64_t exponent, Gf2Poly m) {
  Gf2Poly result = Gf2Poly::one() % m;
  Gf2Poly sq = base % m;
  for (; exponent != 0; exponent >>= 1) {
    if (exponent & 1U) result = mulmod(result, sq, m);
    sq = mulmod(sq, sq, m);
  }
  return result;
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Gf2Poly compose_mod(Gf2Poly p, Gf2Poly h, Gf2Poly m) {
  Gf2Poly acc = Gf2Poly::zero();
  for (int i = p.degree(); i >= 0; --i) {
    acc = mulmod(acc, h, m);
    if (p.coeff(i)) acc = (acc + Gf2Poly::one()) % m;
  }
  return acc;
}

namespace {

// x^(2^k) mod f by repeated squaring.
Gf2Poly frobenius_power_of_x(int k, Gf2Poly f) {
  Gf2Poly r = Gf2Poly::x() % f;
  for (int i = 0; i < k; ++i) r = mulmod(r, r, f);
  return r;
}

}  // namespace

bool is_irreducible(Gf2Poly f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n > 32) throw Error(ErrorCode::kBoundExceeded, "irreducibility test supports degree <= 32");
  if (n == 1) return true;
  if (!f.coeff(0)) return false;
  if (frobenius_power_of_x(n, f) != Gf2Poly::x()) return false;
  for (const auto& [q, e] : factorize(static_cast<std::uint64_t>(n))) {
    Gf2Poly t = frobenius_power_of_x(n / static_cast<int>(q), f) + Gf2Poly::x();
    if (gcd(f, t).degree() != 0) return false;
  }
  return true;
}

bool is_primitive(Gf2Poly f) {
  if (!is_irreducible(f)) return false;
  const int n = f.degree();
  if (n == 1) return f == Gf2Poly(0x3);
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  for (const auto& [p, e] : mersenne_factors(n)) {
    if (powmod(Gf2Poly::x(), order / p, f) == Gf2Poly::one()) return false;
  }
  return true;
}

std::string to_string(Gf2Poly p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    if (!p.coeff(i)) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace sl2bar
