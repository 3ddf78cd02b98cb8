#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sl2bar/closure.hpp"
#include "sl2bar/field.hpp"
#include "sl2bar/group.hpp"
#include "sl2bar/mat2.hpp"

namespace sl2bar {

/// x -> x^(2^j) on GF(2^n), 0 <= j < n.
class FieldEndo {
 public:
  /// Throws PreconditionViolation unless 0 <= frob_power < level.
  FieldEndo(Level level, int frob_power);

  Level level() const { return level_; }
  int frob_power() const { return frob_power_; }

  /// LevelMismatch unless a is at this endo's level.
  FieldElt apply(FieldElt a) const;
  /// Applies at this level; LevelMismatch unless a's minimal level divides it.
  ClosureElt apply(const ClosureElt& a) const;

  friend bool operator==(const FieldEndo&, const FieldEndo&) = default;

 private:
  Level level_;
  int frob_power_;
};

/// "frob^j@n".
std::string to_string(const FieldEndo& e);

inline constexpr int kMaxEndoLevel = 20;
/// The n Frobenius powers of GF(2^n), each checked exhaustively to be
/// additive, multiplicative, unital and bijective; InvariantViolation if a
/// check fails. BoundExceeded above kMaxEndoLevel.
std::vector<FieldEndo> field_endos(Level n);

/// e maps the Frobenius orbit of a onto itself.
bool endo_permutes_roots(const FieldEndo& e, FieldElt a);

inline constexpr int kMaxOrderScanLevel = 16;
/// e permutes the elements of order 2^n - 1. Requires e.level() == n;
/// BoundExceeded above kMaxOrderScanLevel.
bool endo_permutes_max_order(const FieldEndo& e, Level n);

/// Endomorphism of SL2 built from entrywise Frobenius, inner automorphisms
/// and the inverse transpose. Compose applies its parts first to last.
struct GroupEndoSpec {
  struct Entrywise {
    FieldEndo endo;
    friend bool operator==(const Entrywise&, const Entrywise&) = default;
  };
  struct InnerConj {
    Mat2 by;
    friend bool operator==(const InnerConj&, const InnerConj&) = default;
  };
  struct InvTranspose {
    friend bool operator==(const InvTranspose&, const InvTranspose&) = default;
  };
  struct Compose {
    std::vector<GroupEndoSpec> parts;
    friend bool operator==(const Compose&, const Compose&) = default;
  };

  std::variant<Entrywise, InnerConj, InvTranspose, Compose> value;

  static GroupEndoSpec entrywise(const FieldEndo& e) { return {Entrywise{e}}; }
  /// Throws NonUnitDeterminant unless `by` is in SL2.
  static GroupEndoSpec inner(const Mat2& by);
  static GroupEndoSpec inv_transpose() { return {InvTranspose{}}; }
  /// Throws PreconditionViolation for an empty list.
  static GroupEndoSpec compose(std::vector<GroupEndoSpec> parts);

  friend bool operator==(const GroupEndoSpec&, const GroupEndoSpec&) = default;
};

/// "frob^j@n", "inner(<matrix>)", "invT", or "compose(p1, p2, ...)".
std::string to_string(const GroupEndoSpec& spec);

/// Requires m in SL2; LevelMismatch when an Entrywise part cannot act on an entry.
Mat2 apply_group_endo(const GroupEndoSpec& spec, const Mat2& m);

/// Index map of spec on a table: out[x] = index of spec(x). InvariantViolation
/// if an image leaves the group.
std::vector<Elt> compile_group_endo(const GroupTable& group, const GroupEndoSpec& spec);

inline constexpr int kMaxReplayLevel = 4;
inline constexpr int kReplayWordLength = 3;

/// Letters of the replay family at level n: every Frobenius power, the
/// inverse transpose, and conjugation by swap, [[1,1],[0,1]], [[1,0],[1,1]],
/// diag(theta, theta^-1) and [[0,1],[1,1]], theta the canonical cube root of unity.
/// NoPrimitiveCubeRoot for odd n.
std::vector<GroupEndoSpec> replay_letters(Level n);
/// Every word of length 1 to kReplayWordLength over replay_letters(n), shorter
/// words first, then lexicographic in letter order. Length-1 words are the letters.
std::vector<GroupEndoSpec> replay_family(Level n);

struct ReplayStep {
  int id = 0;
  bool passed = false;
  std::string witness;  // empty when there is nothing to show
};

struct ReplayCase {
  std::string phi;
  std::vector<ReplayStep> steps;
  bool passed() const;
};

struct ReplayReport {
  int level = 0;
  std::string theta;
  std::vector<ReplayCase> cases;
  bool passed() const;
  /// StepFailed naming the first failing phi, step and witness.
  void throw_if_failed() const;
};

/// Runs the eight-step automorphism argument for every family member:
///   1 cube root theta and g = diag(theta, theta^-1)
///   2 phi(g) has order 3 and is conjugate to g
///   3 alpha = least conjugator with alpha phi(g) = g
///   4 alpha phi restricts to a bijection of the diagonal subgroup
///   5 alpha phi(swap) is off-diagonal and swap is in the image
///   6 beta chosen by whether alpha phi(LT \ {I}) lies in LT or in UT
///   7 beta alpha phi maps L onto L
///   8 beta alpha phi, hence phi, is bijective on the group
/// NoPrimitiveCubeRoot for odd n; BoundExceeded above kMaxReplayLevel.
/// Failures are recorded, not thrown.
ReplayReport replay_cohopf_report(Level n);
/// As replay_cohopf_report, then throw_if_failed().
ReplayReport replay_cohopf_skeleton(Level n);

}  // namespace sl2bar
