#pragma once

#include <optional>
#include <string>
#include <utility>

#include "sl2bar/closure.hpp"

namespace sl2bar {

/// 2x2 matrix [[a, b], [c, d]] over the closure. Determinant is ad + bc.
/// GL2 values are allowed; operations that need SL2 say so and throw
/// NonUnitDeterminant otherwise.
struct Mat2 {
  ClosureElt a = ClosureElt::one();
  ClosureElt b = ClosureElt::zero();
  ClosureElt c = ClosureElt::zero();
  ClosureElt d = ClosureElt::one();

  static Mat2 identity() { return {}; }
  /// [[0, 1], [1, 0]].
  static Mat2 swap() { return {ClosureElt::zero(), ClosureElt::one(), ClosureElt::one(), ClosureElt::zero()}; }
  /// diag(lambda, lambda^-1).
  static Mat2 diag(const ClosureElt& lambda);
  /// [[1, lambda], [0, 1]].
  static Mat2 upper_unipotent(const ClosureElt& lambda);
  /// [[1, 0], [lambda, 1]].
  static Mat2 lower_unipotent(const ClosureElt& lambda);

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Shapes named in the SL2 taxonomy.
enum class SubsetName { kDiag, kOffDiag, kUpperTri, kUpperUni, kLowerTri, kLowerUni };

std::string_view to_string(SubsetName name);

class JordanClass {
 public:
  enum class Kind { kIdentity, kUnipotent, kSplit };

  static JordanClass identity() { return JordanClass(Kind::kIdentity, std::nullopt); }
  static JordanClass unipotent() { return JordanClass(Kind::kUnipotent, std::nullopt); }
  /// Stores the canonical member of {lambda, lambda^-1}. Requires lambda not 0 or 1.
  static JordanClass split(const ClosureElt& lambda);

  Kind kind() const { return kind_; }
  /// Present only for kSplit.
  const std::optional<ClosureElt>& eigenvalue() const { return eigenvalue_; }

  friend bool operator==(const JordanClass&, const JordanClass&) = default;

 private:
  JordanClass(Kind kind, std::optional<ClosureElt> eigenvalue) : kind_(kind), eigenvalue_(std::move(eigenvalue)) {}

  Kind kind_;
  std::optional<ClosureElt> eigenvalue_;
};

/// "Identity", "Unipotent" or "Split(<literal>)".
std::string to_string(const JordanClass& cls);

Mat2 mmul(const Mat2& m, const Mat2& n);
inline Mat2 operator*(const Mat2& m, const Mat2& n) { return mmul(m, n); }
ClosureElt mdet(const Mat2& m);
ClosureElt mtrace(const Mat2& m);
/// Throws SingularMatrix when det = 0.
Mat2 minv(const Mat2& m);
Mat2 transpose(const Mat2& m);
Mat2 scale(const ClosureElt& s, const Mat2& m);
/// m * g * m^-1.
Mat2 conjugate(const Mat2& m, const Mat2& g);
/// Throws NonUnitDeterminant unless det = 1.
void require_sl2(const Mat2& m);

/// [[a,b],[c,d]] -> [[d,c],[b,a]]; requires SL2.
Mat2 inv_transpose(const Mat2& m);

/// X scaled by 1/sqrt(det X): lies in SL2 and induces the same conjugation.
Mat2 normalize_to_sl2(const Mat2& x);

/// Element order in SL2, read off the Jordan class.
std::uint64_t morder(const Mat2& m);

JordanClass classify_jordan(const Mat2& m);
bool are_conjugate(const Mat2& m, const Mat2& n);

/// Closed form of [[s,t],[u,v]] diag(lambda, lambda^-1) [[s,t],[u,v]]^-1.
/// Requires lambda != 0 and sv + tu = 1 (PreconditionViolation).
Mat2 conjugate_eq1(const ClosureElt& lambda, const ClosureElt& s, const ClosureElt& t, const ClosureElt& u,
                   const ClosureElt& v);
/// Closed form of [[s,t],[u,v]] [[1,lambda],[0,1]] [[s,t],[u,v]]^-1; requires sv + tu = 1.
Mat2 conjugate_eq2(const ClosureElt& lambda, const ClosureElt& s, const ClosureElt& t, const ClosureElt& u,
                   const ClosureElt& v);

bool is_member(const Mat2& m, SubsetName which);

/// For an involution m = [[1+su, s^2], [u^2, 1+su]], returns (s, u).
/// Throws NotAnInvolution otherwise.
std::pair<ClosureElt, ClosureElt> involution_params(const Mat2& m);

/// ([[0, lambda], [lambda^-1, 0]], swap), whose product is diag(lambda, lambda^-1).
std::pair<Mat2, Mat2> diag_as_two_involutions(const ClosureElt& lambda);

/// Whether the involution m commutes with diag(lambda, lambda^-1) m diag(lambda^-1, lambda).
/// Evaluates both the direct commutator and the criterion "s = 0 or u = 0"
/// and throws InvariantViolation if they disagree.
bool commute_after_diag_twist(const Mat2& m, const ClosureElt& lambda);

/// D = diag(sqrt(lambda/z), sqrt(z/lambda)), which conjugates
/// [[1,0],[lambda,1]] to [[1,0],[z,1]]; the identity is checked before returning.
Mat2 lt_conjugation_scaling(const ClosureElt& lambda, const ClosureElt& z);

}  // namespace sl2bar
