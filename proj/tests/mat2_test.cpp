#include "sl2bar/mat2.hpp"

#include <gtest/gtest.h>

#include "sl2bar/error.hpp"
#include "test_support.hpp"

namespace sl2bar {
namespace {

using testing::random_closure;
using testing::random_closure_nonzero;
using testing::random_sl2;

ClosureElt cl(std::uint32_t mask, int n) { return ClosureElt::from(FieldElt::make(Level(n), mask)); }
const ClosureElt kZero = ClosureElt::zero();
const ClosureElt kOne = ClosureElt::one();
const ClosureElt kG = cl(0x2, 2);
const ClosureElt kG1 = cl(0x3, 2);  // g + 1 = g^2 = g^-1

Mat2 mat(const ClosureElt& a, const ClosureElt& b, const ClosureElt& c, const ClosureElt& d) { return {a, b, c, d}; }

Mat2 mpow(const Mat2& m, std::uint64_t e) {
  Mat2 r;
  for (std::uint64_t i = 0; i < e; ++i) r = r * m;
  return r;
}

std::uint64_t order_by_iteration(const Mat2& m) {
  Mat2 cur = m;
  std::uint64_t k = 1;
  while (cur != Mat2::identity()) {
    cur = cur * m;
    ++k;
  }
  return k;
}

// Random SL2 conjugator (s, t, u, v) with sv + tu = 1.
Mat2 random_conjugator() { return random_sl2(testing::random_level(1, 4)); }

TEST(Mat2Test, BasicExamples) {
  const Mat2 m = random_sl2(3);
  EXPECT_EQ(minv(m), mat(m.d, m.b, m.c, m.a));
  EXPECT_EQ(minv(Mat2::identity()), Mat2::identity());
  EXPECT_EQ(mdet(mat(kG, kZero, kZero, kG1)), kOne);
  EXPECT_THROW(minv(mat(kOne, kOne, kOne, kOne)), Error);
  EXPECT_EQ(mtrace(Mat2::upper_unipotent(kOne)), kZero);
}

TEST(Mat2Test, RingLaws) {
  for (int i = 0; i < 300; ++i) {
    const int n = testing::random_level(1, 6);
    const Mat2 x{random_closure(n), random_closure(n), random_closure(n), random_closure(n)};
    const Mat2 y{random_closure(n), random_closure(n), random_closure(n), random_closure(n)};
    const Mat2 z = random_sl2(n);
    EXPECT_EQ(mdet(x * y), mdet(x) * mdet(y));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(mtrace(conjugate(z, x)), mtrace(x));
    EXPECT_EQ(transpose(transpose(x)), x);
    if (!mdet(x).is_zero()) {
      EXPECT_EQ(minv(x) * x, Mat2::identity());
    }
  }
}

TEST(Mat2Test, InverseTransposeExamples) {
  const Mat2 m = random_sl2(4);
  EXPECT_EQ(inv_transpose(m), mat(m.d, m.c, m.b, m.a));
  EXPECT_EQ(inv_transpose(inv_transpose(m)), m);
  EXPECT_EQ(inv_transpose(Mat2::upper_unipotent(kOne)), Mat2::lower_unipotent(kOne));
  EXPECT_EQ(inv_transpose(m), conjugate(Mat2::swap(), m));
  EXPECT_EQ(inv_transpose(m), transpose(minv(m)));
  EXPECT_THROW(inv_transpose(mat(kG, kZero, kZero, kG)), Error);
}

TEST(Mat2Test, NormalizeExamples) {
  const Mat2 m = random_sl2(3);
  EXPECT_EQ(normalize_to_sl2(m), m);
  EXPECT_EQ(normalize_to_sl2(mat(kG, kZero, kZero, kG)), Mat2::identity());
  EXPECT_THROW(normalize_to_sl2(mat(kOne, kOne, kOne, kOne)), Error);
  int checked = 0;
  while (checked < 500) {
    const int n = testing::random_level(1, 4);
    const Mat2 x{random_closure(n), random_closure(n), random_closure(n), random_closure(n)};
    if (mdet(x).is_zero()) continue;
    const Mat2 y = normalize_to_sl2(x);
    const Mat2 g = random_sl2(testing::random_level(1, 4));
    ASSERT_EQ(mdet(y), kOne);
    ASSERT_EQ(conjugate(y, g), x * g * minv(x));
    ++checked;
  }
}

TEST(Mat2Test, OrderExamples) {
  EXPECT_EQ(morder(Mat2::upper_unipotent(kOne)), 2U);
  EXPECT_EQ(morder(mat(kG, kZero, kZero, kG1)), 3U);
  EXPECT_EQ(morder(Mat2::identity()), 1U);
  for (int i = 0; i < 200; ++i) {
    const Mat2 m = random_sl2(testing::random_level(1, 6));
    const std::uint64_t ord = morder(m);
    ASSERT_EQ(ord, order_by_iteration(m));
    ASSERT_TRUE(ord == 2 || ord % 2 == 1);
    ASSERT_EQ(ord == 2, m != Mat2::identity() && mtrace(m).is_zero());
  }
  // Larger levels: M^ord = I and no proper divisor from a prime works.
  for (int i = 0; i < 20; ++i) {
    const Mat2 m = random_sl2(testing::random_level(10, 15));
    const std::uint64_t ord = morder(m);
    Mat2 p = Mat2::identity();
    Mat2 base = m;
    for (std::uint64_t e = ord; e != 0; e >>= 1) {
      if (e & 1) p = p * base;
      base = base * base;
    }
    EXPECT_EQ(p, Mat2::identity());
  }
}

TEST(Mat2Test, JordanExamples) {
  EXPECT_EQ(classify_jordan(Mat2::identity()), JordanClass::identity());
  EXPECT_EQ(classify_jordan(Mat2::upper_unipotent(kOne)), JordanClass::unipotent());
  const JordanClass split = classify_jordan(mat(kG, kZero, kZero, kG1));
  EXPECT_EQ(split.kind(), JordanClass::Kind::kSplit);
  EXPECT_EQ(split.eigenvalue(), kG);
  EXPECT_EQ(to_string(split), "Split(0x2@2)");
  const JordanClass up = classify_jordan(mat(kZero, kOne, kOne, kOne));
  ASSERT_EQ(up.kind(), JordanClass::Kind::kSplit);
  EXPECT_EQ(up.eigenvalue()->level(), Level(2));
  EXPECT_THROW(JordanClass::split(kOne), Error);
  EXPECT_EQ(JordanClass::split(kG1), JordanClass::split(kG));
}

TEST(Mat2Test, JordanEigenvalueSatisfiesCharPoly) {
  for (int i = 0; i < 300; ++i) {
    const Mat2 m = random_sl2(testing::random_level(1, 15));
    const JordanClass cls = classify_jordan(m);
    if (cls.kind() != JordanClass::Kind::kSplit) continue;
    const ClosureElt& l = *cls.eigenvalue();
    ASSERT_EQ(l + cinv(l), mtrace(m));
    ASSERT_LE(l, cinv(l));
    ASSERT_TRUE(are_conjugate(m, Mat2::diag(l)));
  }
}

TEST(Mat2Test, ConjugacyExamples) {
  const Mat2 d = mat(kG, kZero, kZero, kG1);
  EXPECT_TRUE(are_conjugate(d, d));
  EXPECT_TRUE(are_conjugate(d, mat(kG1, kZero, kZero, kG)));
  EXPECT_FALSE(are_conjugate(Mat2::upper_unipotent(kOne), Mat2::identity()));
  for (int i = 0; i < 100; ++i) {
    const Mat2 m = random_sl2(testing::random_level(1, 8));
    EXPECT_TRUE(are_conjugate(m, conjugate(random_sl2(testing::random_level(1, 3)), m)));
  }
}

TEST(Mat2Test, Eq1Examples) {
  const ClosureElt l = cl(0x6, 3);
  EXPECT_EQ(conjugate_eq1(l, kOne, kZero, kZero, kOne), Mat2::diag(l));
  EXPECT_EQ(conjugate_eq1(l, kZero, kOne, kOne, kZero), Mat2::diag(cinv(l)));
  EXPECT_NE(Mat2::diag(cinv(l)), Mat2::diag(l));
  EXPECT_THROW(conjugate_eq1(kZero, kOne, kZero, kZero, kOne), Error);
  EXPECT_THROW(conjugate_eq1(l, kOne, kOne, kOne, kOne), Error);
}

TEST(Mat2Test, Eq1MatchesDirectProduct) {
  for (int i = 0; i < 500; ++i) {
    const ClosureElt l = random_closure_nonzero(testing::random_level(1, 4));
    const Mat2 m = random_conjugator();
    ASSERT_EQ(conjugate_eq1(l, m.a, m.b, m.c, m.d), m * Mat2::diag(l) * minv(m));
  }
}

TEST(Mat2Test, Eq2Examples) {
  const ClosureElt l = cl(0x5, 4);
  EXPECT_EQ(conjugate_eq2(l, kOne, kZero, kZero, kOne), Mat2::upper_unipotent(l));
  const ClosureElt s = kG;
  const Mat2 r = conjugate_eq2(l, s, kOne, kZero, cinv(s));
  EXPECT_TRUE(is_member(r, SubsetName::kUpperUni));
  EXPECT_EQ(r.b, l * s * s);
  EXPECT_THROW(conjugate_eq2(l, kOne, kOne, kOne, kOne), Error);
}

TEST(Mat2Test, Eq2MatchesDirectProduct) {
  for (int i = 0; i < 500; ++i) {
    const ClosureElt l = random_closure(testing::random_level(1, 4));
    const Mat2 m = random_conjugator();
    ASSERT_EQ(conjugate_eq2(l, m.a, m.b, m.c, m.d), m * Mat2::upper_unipotent(l) * minv(m));
  }
}

TEST(Mat2Test, MembershipExamples) {
  using enum SubsetName;
  const Mat2 id = Mat2::identity();
  for (SubsetName s : {kDiag, kUpperTri, kUpperUni, kLowerTri, kLowerUni}) EXPECT_TRUE(is_member(id, s));
  EXPECT_FALSE(is_member(id, kOffDiag));
  for (SubsetName s : {kDiag, kUpperTri, kUpperUni, kLowerTri, kLowerUni}) EXPECT_FALSE(is_member(Mat2::swap(), s));
  EXPECT_TRUE(is_member(Mat2::swap(), kOffDiag));
  const Mat2 ut = mat(kG, kOne, kZero, kG1);
  EXPECT_TRUE(is_member(ut, kUpperTri));
  for (SubsetName s : {kDiag, kOffDiag, kUpperUni, kLowerTri, kLowerUni}) EXPECT_FALSE(is_member(ut, s));
  EXPECT_EQ(to_string(kLowerUni), "LowerUni");
}

TEST(Mat2Test, InvolutionParams) {
  EXPECT_EQ(involution_params(Mat2::upper_unipotent(kOne)), std::make_pair(kOne, kZero));
  EXPECT_EQ(involution_params(Mat2::lower_unipotent(kOne)), std::make_pair(kZero, kOne));
  EXPECT_THROW(involution_params(Mat2::identity()), Error);
  EXPECT_THROW(involution_params(Mat2::diag(kG)), Error);
  for (int i = 0; i < 300; ++i) {
    const Mat2 conj = random_conjugator();
    const Mat2 m = conjugate_eq2(kOne, conj.a, conj.b, conj.c, conj.d);
    const auto [s, u] = involution_params(m);
    ASSERT_EQ(s, conj.a);
    ASSERT_EQ(u, conj.c);
    ASSERT_EQ(mat(kOne + s * u, s * s, u * u, kOne + s * u), m);
  }
}

TEST(Mat2Test, DiagAsTwoInvolutions) {
  const auto [p1, q1] = diag_as_two_involutions(kOne);
  EXPECT_EQ(p1, Mat2::swap());
  EXPECT_EQ(q1, Mat2::swap());
  EXPECT_EQ(p1 * q1, Mat2::identity());
  const auto [p, q] = diag_as_two_involutions(kG);
  EXPECT_EQ(p * q, mat(kG, kZero, kZero, kG1));
  for (int i = 0; i < 100; ++i) {
    const ClosureElt l = random_closure_nonzero(testing::random_level(1, 16));
    const auto [x, y] = diag_as_two_involutions(l);
    ASSERT_EQ(morder(x), 2U);
    ASSERT_EQ(morder(y), 2U);
    ASSERT_EQ(x * y, Mat2::diag(l));
  }
}

TEST(Mat2Test, CommuteAfterDiagTwist) {
  const ClosureElt l = cl(0x3, 3);
  EXPECT_TRUE(commute_after_diag_twist(Mat2::upper_unipotent(kOne), l));
  EXPECT_TRUE(commute_after_diag_twist(Mat2::lower_unipotent(kOne), l));
  EXPECT_FALSE(commute_after_diag_twist(Mat2::swap(), kG));
  EXPECT_THROW(commute_after_diag_twist(Mat2::swap(), kOne), Error);
  EXPECT_THROW(commute_after_diag_twist(Mat2::diag(kG), kG), Error);
  for (int i = 0; i < 200; ++i) {
    const Mat2 conj = random_conjugator();
    const Mat2 m = conjugate_eq2(kOne, conj.a, conj.b, conj.c, conj.d);
    const ClosureElt tw = random_closure_nonzero(testing::random_level(2, 4));
    if (tw.is_one()) continue;
    const Mat2 twisted = Mat2::diag(tw) * m * Mat2::diag(cinv(tw));
    ASSERT_EQ(commute_after_diag_twist(m, tw), m * twisted == twisted * m);
  }
}

TEST(Mat2Test, LowerTriangularScaling) {
  const ClosureElt l = cl(0x7, 4);
  EXPECT_EQ(lt_conjugation_scaling(l, l), Mat2::identity());
  const Mat2 d = lt_conjugation_scaling(kOne, kG);
  EXPECT_EQ(d * Mat2::lower_unipotent(kOne) * minv(d), Mat2::lower_unipotent(kG));
  EXPECT_THROW(lt_conjugation_scaling(kZero, kG), Error);
  for (int i = 0; i < 100; ++i) {
    const ClosureElt a = random_closure_nonzero(testing::random_level(1, 6));
    const ClosureElt z = random_closure_nonzero(testing::random_level(1, 5));
    const Mat2 s = lt_conjugation_scaling(a, z);
    ASSERT_TRUE(is_member(s, SubsetName::kDiag));
    ASSERT_EQ(s.a * s.a, a * cinv(z));
    ASSERT_EQ(conjugate(s, Mat2::lower_unipotent(a)), Mat2::lower_unipotent(z));
  }
}

TEST(Mat2Test, PowerHelperAgreesWithOrder) {
  const Mat2 m = mat(kG, kOne, kZero, kG1);
  EXPECT_EQ(mpow(m, morder(m)), Mat2::identity());
}

}  // namespace
}  // namespace sl2bar
