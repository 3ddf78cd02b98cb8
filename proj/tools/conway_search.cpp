#include "conway_search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "sl2bar/error.hpp"
#include "sl2bar/numtheory.hpp"

namespace sl2bar::tools {
namespace {

std::uint64_t mersenne(int n) { return (std::uint64_t{1} << n) - 1; }

std::vector<int> maximal_proper_divisors(int n) {
  std::vector<int> out;
  for (const auto& [q, e] : factorize(static_cast<std::uint64_t>(n))) out.push_back(n / static_cast<int>(q));
  return out;
}

bool compatible_with_all(Gf2Poly f, int n, const LowerConway& lower) {
  for (int m : maximal_proper_divisors(n)) {
    if (m == n) continue;
    if (!norm_compatible(f, lower.at(m))) return false;
  }
  return true;
}

Gf2Poly first_primitive(int n) {
  for (std::uint64_t low = 1; low < (std::uint64_t{1} << n); low += 2) {
    Gf2Poly f((std::uint64_t{1} << n) | low);
    if (is_primitive(f)) return f;
  }
  throw Error(ErrorCode::kSearchFailed, "no primitive polynomial of degree " + std::to_string(n));
}

// Minimal polynomial over GF(2) of alpha in GF(2)[x]/modulus.
Gf2Poly minimal_polynomial(Gf2Poly alpha, Gf2Poly modulus) {
  std::vector<Gf2Poly> roots{alpha};
  for (Gf2Poly r = mulmod(alpha, alpha, modulus); r != alpha; r = mulmod(r, r, modulus)) roots.push_back(r);
  // coeffs[i] is the coefficient of X^i, an element of the reference field.
  std::vector<Gf2Poly> coeffs{Gf2Poly::one()};
  for (Gf2Poly r : roots) {
    std::vector<Gf2Poly> next(coeffs.size() + 1, Gf2Poly::zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = next[i + 1] + coeffs[i];
      next[i] = next[i] + mulmod(coeffs[i], r, modulus);
    }
    coeffs = std::move(next);
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == Gf2Poly::one()) {
      bits |= std::uint64_t{1} << i;
    } else if (!coeffs[i].is_zero()) {
      throw Error(ErrorCode::kSearchFailed, "minimal polynomial has a coefficient outside GF(2)");
    }
  }
  return Gf2Poly(bits);
}

}  // namespace

Gf2Poly conway_polynomial_by_scan(int n, const LowerConway& lower) {
  for (std::uint64_t low = 0; low < (std::uint64_t{1} << n); ++low) {
    Gf2Poly f((std::uint64_t{1} << n) | low);
    if (is_primitive(f) && compatible_with_all(f, n, lower)) return f;
  }
  throw Error(ErrorCode::kSearchFailed, "no Conway polynomial of degree " + std::to_string(n));
}

Gf2Poly conway_polynomial(int n, const LowerConway& lower) {
  const auto maximal = maximal_proper_divisors(n);
  if (n == 1 || (maximal.size() == 1 && maximal[0] == 1)) return conway_polynomial_by_scan(n, lower);

  const Gf2Poly modulus = first_primitive(n);
  const std::uint64_t order = mersenne(n);

  // For each maximal divisor m, the exponents k (mod 2^m-1) such that
  // (x^k)^((2^n-1)/(2^m-1)) is a root of the level-m polynomial.
  struct Constraint {
    std::uint64_t modulus;
    std::set<std::uint64_t> residues;
  };
  std::vector<Constraint> constraints;
  for (int m : maximal) {
    const std::uint64_t mm = mersenne(m);
    const Gf2Poly step = powmod(Gf2Poly::x(), order / mm, modulus);
    Gf2Poly cur = Gf2Poly::one();
    std::uint64_t base = 0;
    for (std::uint64_t j = 1; j <= mm; ++j) {
      cur = mulmod(cur, step, modulus);
      if (compose_mod(lower.at(m), cur, modulus).is_zero()) {
        base = j;
        break;
      }
    }
    if (base == 0) throw Error(ErrorCode::kSearchFailed, "level " + std::to_string(m) + " root not found");
    Constraint c{mm, {}};
    std::uint64_t r = base % mm;
    for (int i = 0; i < m; ++i, r = (r * 2) % mm) c.residues.insert(r);
    constraints.push_back(std::move(c));
  }
  std::sort(constraints.begin(), constraints.end(),
            [](const Constraint& a, const Constraint& b) { return a.modulus > b.modulus; });

  const Constraint& widest = constraints.front();
  Gf2Poly best(~std::uint64_t{0});
  std::set<std::uint64_t> seen_cosets;
  for (std::uint64_t s : widest.residues) {
    for (std::uint64_t k = s; k < order; k += widest.modulus) {
      if (k == 0 || std::gcd(k, order) != 1) continue;
      bool ok = true;
      for (std::size_t i = 1; i < constraints.size() && ok; ++i) {
        ok = constraints[i].residues.count(k % constraints[i].modulus) != 0;
      }
      if (!ok) continue;
      std::uint64_t rep = k;
      for (std::uint64_t c = (k * 2) % order; c != k; c = (c * 2) % order) rep = std::min(rep, c);
      if (!seen_cosets.insert(rep).second) continue;
      Gf2Poly f = minimal_polynomial(powmod(Gf2Poly::x(), rep, modulus), modulus);
      if (f.bits() < best.bits()) best = f;
    }
  }
  if (best.degree() != n) throw Error(ErrorCode::kSearchFailed, "no Conway polynomial of degree " + std::to_string(n));
  return best;
}

}  // namespace sl2bar::tools
