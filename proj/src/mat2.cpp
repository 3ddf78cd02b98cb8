#include "sl2bar/mat2.hpp"

#include "sl2bar/error.hpp"
#include "sl2bar/literal.hpp"

namespace sl2bar {
namespace {

const ClosureElt& zero() {
  static const ClosureElt z = ClosureElt::zero();
  return z;
}

const ClosureElt& one() {
  static const ClosureElt o = ClosureElt::one();
  return o;
}

void require_involution(const Mat2& m) {
  require_sl2(m);
  if (m == Mat2::identity() || !mtrace(m).is_zero()) {
    throw Error(ErrorCode::kNotAnInvolution, to_string(m) + " does not have order 2");
  }
}

}  // namespace

Mat2 Mat2::diag(const ClosureElt& lambda) { return {lambda, zero(), zero(), cinv(lambda)}; }
Mat2 Mat2::upper_unipotent(const ClosureElt& lambda) { return {one(), lambda, zero(), one()}; }
Mat2 Mat2::lower_unipotent(const ClosureElt& lambda) { return {one(), zero(), lambda, one()}; }

std::string_view to_string(SubsetName name) {
  switch (name) {
    case SubsetName::kDiag: return "Diag";
    case SubsetName::kOffDiag: return "OffDiag";
    case SubsetName::kUpperTri: return "UpperTri";
    case SubsetName::kUpperUni: return "UpperUni";
    case SubsetName::kLowerTri: return "LowerTri";
    case SubsetName::kLowerUni: return "LowerUni";
  }
  return "Unknown";
}

JordanClass JordanClass::split(const ClosureElt& lambda) {
  if (lambda.is_zero() || lambda.is_one()) {
    throw Error(ErrorCode::kPreconditionViolation, "split class needs an eigenvalue other than 0 and 1");
  }
  const ClosureElt other = cinv(lambda);
  return JordanClass(Kind::kSplit, other < lambda ? other : lambda);
}

std::string to_string(const JordanClass& cls) {
  switch (cls.kind()) {
    case JordanClass::Kind::kIdentity: return "Identity";
    case JordanClass::Kind::kUnipotent: return "Unipotent";
    case JordanClass::Kind::kSplit: return "Split(" + to_string(*cls.eigenvalue()) + ")";
  }
  return "Unknown";
}

Mat2 mmul(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

ClosureElt mdet(const Mat2& m) { return m.a * m.d + m.b * m.c; }
ClosureElt mtrace(const Mat2& m) { return m.a + m.d; }

Mat2 minv(const Mat2& m) {
  const ClosureElt det = mdet(m);
  if (det.is_zero()) throw Error(ErrorCode::kSingularMatrix, to_string(m) + " has determinant 0");
  // In characteristic 2 the adjugate of [[a,b],[c,d]] is [[d,b],[c,a]].
  return scale(cinv(det), Mat2{m.d, m.b, m.c, m.a});
}

Mat2 transpose(const Mat2& m) { return {m.a, m.c, m.b, m.d}; }

Mat2 scale(const ClosureElt& s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

Mat2 conjugate(const Mat2& m, const Mat2& g) { return m * g * minv(m); }

void require_sl2(const Mat2& m) {
  if (!mdet(m).is_one()) {
    throw Error(ErrorCode::kNonUnitDeterminant, to_string(m) + " has determinant " + to_string(mdet(m)));
  }
}

Mat2 inv_transpose(const Mat2& m) {
  require_sl2(m);
  return {m.d, m.c, m.b, m.a};
}

Mat2 normalize_to_sl2(const Mat2& x) {
  const ClosureElt det = mdet(x);
  if (det.is_zero()) throw Error(ErrorCode::kSingularMatrix, to_string(x) + " has determinant 0");
  return scale(cinv(csqrt(det)), x);
}

JordanClass classify_jordan(const Mat2& m) {
  require_sl2(m);
  if (m == Mat2::identity()) return JordanClass::identity();
  const ClosureElt t = mtrace(m);
  if (t.is_zero()) return JordanClass::unipotent();
  // Eigenvalues solve x^2 + t x + 1 = 0; with x = t y this is y^2 + y = 1/t^2.
  const ClosureElt c = cinv(t * t);
  auto y = artin_schreier_solve(c.repr());
  if (!y) {
    const int doubled = 2 * c.level().value();
    y = artin_schreier_solve(lift(c.repr(), doubled));
    if (!y) throw Error(ErrorCode::kInvariantViolation, "no Artin-Schreier root at the doubled level");
  }
  return JordanClass::split(t * ClosureElt::from(*y));
}

std::uint64_t morder(const Mat2& m) {
  const JordanClass cls = classify_jordan(m);
  switch (cls.kind()) {
    case JordanClass::Kind::kIdentity: return 1;
    case JordanClass::Kind::kUnipotent: return 2;
    case JordanClass::Kind::kSplit: return corder(*cls.eigenvalue());
  }
  return 0;
}

bool are_conjugate(const Mat2& m, const Mat2& n) { return classify_jordan(m) == classify_jordan(n); }

namespace {

void require_conjugator(const ClosureElt& s, const ClosureElt& t, const ClosureElt& u, const ClosureElt& v) {
  if (!(s * v + t * u).is_one()) {
    throw Error(ErrorCode::kPreconditionViolation, "conjugator [[s,t],[u,v]] needs sv + tu = 1");
  }
}

}  // namespace

Mat2 conjugate_eq1(const ClosureElt& lambda, const ClosureElt& s, const ClosureElt& t, const ClosureElt& u,
                   const ClosureElt& v) {
  if (lambda.is_zero()) throw Error(ErrorCode::kPreconditionViolation, "lambda must be nonzero");
  require_conjugator(s, t, u, v);
  const ClosureElt li = cinv(lambda);
  const ClosureElt sum = lambda + li;
  return {lambda * s * v + li * t * u, sum * s * t, sum * u * v, li * s * v + lambda * t * u};
}

Mat2 conjugate_eq2(const ClosureElt& lambda, const ClosureElt& s, const ClosureElt& t, const ClosureElt& u,
                   const ClosureElt& v) {
  require_conjugator(s, t, u, v);
  const ClosureElt diag = one() + lambda * s * u;
  return {diag, lambda * s * s, lambda * u * u, diag};
}

bool is_member(const Mat2& m, SubsetName which) {
  require_sl2(m);
  switch (which) {
    case SubsetName::kDiag: return m.b.is_zero() && m.c.is_zero();
    case SubsetName::kOffDiag: return m.a.is_zero() && m.d.is_zero();
    case SubsetName::kUpperTri: return m.c.is_zero();
    case SubsetName::kUpperUni: return m.c.is_zero() && m.a.is_one() && m.d.is_one();
    case SubsetName::kLowerTri: return m.b.is_zero();
    case SubsetName::kLowerUni: return m.b.is_zero() && m.a.is_one() && m.d.is_one();
  }
  return false;
}

std::pair<ClosureElt, ClosureElt> involution_params(const Mat2& m) {
  require_involution(m);
  ClosureElt s = csqrt(m.b);
  ClosureElt u = csqrt(m.c);
  const ClosureElt diag = one() + s * u;
  if (!(Mat2{diag, s * s, u * u, diag} == m)) {
    throw Error(ErrorCode::kInvariantViolation, "involution " + to_string(m) + " does not match [[1+su,s^2],[u^2,1+su]]");
  }
  return {std::move(s), std::move(u)};
}

std::pair<Mat2, Mat2> diag_as_two_involutions(const ClosureElt& lambda) {
  if (lambda.is_zero()) throw Error(ErrorCode::kPreconditionViolation, "lambda must be nonzero");
  return {Mat2{zero(), lambda, cinv(lambda), zero()}, Mat2::swap()};
}

bool commute_after_diag_twist(const Mat2& m, const ClosureElt& lambda) {
  if (lambda.is_zero() || lambda.is_one()) {
    throw Error(ErrorCode::kPreconditionViolation, "lambda must be outside {0, 1}");
  }
  const auto [s, u] = involution_params(m);
  const Mat2 twisted = conjugate(Mat2::diag(lambda), m);
  const bool direct = m * twisted == twisted * m;
  const bool criterion = s.is_zero() || u.is_zero();
  if (direct != criterion) {
    throw Error(ErrorCode::kInvariantViolation, "commutator and s/u criterion disagree on " + to_string(m));
  }
  return direct;
}

Mat2 lt_conjugation_scaling(const ClosureElt& lambda, const ClosureElt& z) {
  if (lambda.is_zero() || z.is_zero()) throw Error(ErrorCode::kPreconditionViolation, "lambda and z must be nonzero");
  const Mat2 d{csqrt(lambda * cinv(z)), zero(), zero(), csqrt(cinv(lambda) * z)};
  if (conjugate(d, Mat2::lower_unipotent(lambda)) != Mat2::lower_unipotent(z)) {
    throw Error(ErrorCode::kInvariantViolation, "diagonal scaling failed to carry lambda to z");
  }
  return d;
}

}  // namespace sl2bar
