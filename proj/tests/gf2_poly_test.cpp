#include "sl2bar/gf2_poly.hpp"

#include <gtest/gtest.h>

#include "sl2bar/error.hpp"
#include "sl2bar/numtheory.hpp"

namespace sl2bar {
namespace {

// Trial division by every polynomial of degree 1..deg/2.
bool irreducible_by_trial_division(Gf2Poly f) {
  const int n = f.degree();
  if (n < 1) return false;
  for (std::uint64_t d = 2; Gf2Poly(d).degree() <= n / 2; ++d) {
    if ((f % Gf2Poly(d)).is_zero()) return false;
  }
  return true;
}

// Order of x modulo f by stepping through powers.
std::uint64_t order_of_x(Gf2Poly f) {
  const Gf2Poly start = Gf2Poly::x() % f;
  if (start.is_zero()) return 0;
  Gf2Poly cur = start;
  for (std::uint64_t k = 1;; ++k) {
    if (cur == Gf2Poly::one()) return k;
    cur = mulmod(cur, Gf2Poly::x(), f);
  }
}

TEST(Gf2PolyTest, DegreeAndFormatting) {
  EXPECT_EQ(Gf2Poly::zero().degree(), -1);
  EXPECT_EQ(Gf2Poly::one().degree(), 0);
  EXPECT_EQ(Gf2Poly(0x7).degree(), 2);
  EXPECT_EQ(to_string(Gf2Poly(0x7)), "x^2+x+1");
  EXPECT_EQ(to_string(Gf2Poly(0x2)), "x");
  EXPECT_EQ(to_string(Gf2Poly::zero()), "0");
}

TEST(Gf2PolyTest, ProductAndDivision) {
  // (x+1)^2 = x^2+1 in characteristic 2.
  EXPECT_EQ(Gf2Poly(0x3) * Gf2Poly(0x3), Gf2Poly(0x5));
  const auto [q, r] = divmod(Gf2Poly(0x5), Gf2Poly(0x3));
  EXPECT_EQ(q, Gf2Poly(0x3));
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(divmod(Gf2Poly(0x5), Gf2Poly::zero()), Error);
  EXPECT_THROW(Gf2Poly(std::uint64_t{1} << 40) * Gf2Poly(std::uint64_t{1} << 30), Error);
}

TEST(Gf2PolyTest, IrreducibilityMatchesTrialDivision) {
  for (std::uint64_t bits = 2; bits < (1U << 11); ++bits) {
    const Gf2Poly f(bits);
    EXPECT_EQ(is_irreducible(f), irreducible_by_trial_division(f)) << to_string(f);
  }
}

TEST(Gf2PolyTest, IrreducibleAndPrimitiveCounts) {
  // Necklace counts of monic irreducibles, and phi(2^n-1)/n primitive ones.
  const int irreducible[] = {0, 2, 1, 2, 3, 6, 9, 18, 30, 56, 99};
  for (int n = 1; n <= 10; ++n) {
    int irr = 0;
    int prim = 0;
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << n); ++low) {
      const Gf2Poly f((std::uint64_t{1} << n) | low);
      irr += is_irreducible(f) ? 1 : 0;
      prim += is_primitive(f) ? 1 : 0;
    }
    EXPECT_EQ(irr, irreducible[n]) << "n=" << n;
    EXPECT_EQ(static_cast<std::uint64_t>(prim), euler_totient((std::uint64_t{1} << n) - 1) / n) << "n=" << n;
  }
}

TEST(Gf2PolyTest, PrimitivityMatchesOrderOfX) {
  for (std::uint64_t bits = 4; bits < (1U << 10); ++bits) {
    const Gf2Poly f(bits);
    if (!irreducible_by_trial_division(f)) continue;
    const std::uint64_t full = (std::uint64_t{1} << f.degree()) - 1;
    EXPECT_EQ(is_primitive(f), order_of_x(f) == full) << to_string(f);
  }
  EXPECT_TRUE(is_primitive(Gf2Poly(0x3)));
  EXPECT_FALSE(is_primitive(Gf2Poly(0x2)));
}

TEST(Gf2PolyTest, PowmodAndCompose) {
  const Gf2Poly f(0x13);  // x^4+x+1, primitive
  EXPECT_EQ(powmod(Gf2Poly::x(), 15, f), Gf2Poly::one());
  EXPECT_NE(powmod(Gf2Poly::x(), 5, f), Gf2Poly::one());
  // x^5 has order 3, so it is a root of x^2+x+1.
  EXPECT_TRUE(compose_mod(Gf2Poly(0x7), powmod(Gf2Poly::x(), 5, f), f).is_zero());
  EXPECT_EQ(gcd(Gf2Poly(0x5), Gf2Poly(0x3)), Gf2Poly(0x3));
}

TEST(NumTheoryTest, FactorizationAndTotient) {
  const std::vector<PrimePower> expected{{3, 2}, {7, 1}, {11, 1}, {31, 1}, {151, 1}, {331, 1}};
  EXPECT_EQ(mersenne_factors(30), expected);
  EXPECT_EQ(euler_totient(15), 8U);
  EXPECT_EQ(euler_totient(1), 1U);
  EXPECT_EQ(euler_totient(3), 2U);
  EXPECT_EQ(divisors(12), (std::vector<int>{1, 2, 3, 4, 6, 12}));
  EXPECT_THROW(mersenne_factors(0), Error);
}

}  // namespace
}  // namespace sl2bar
