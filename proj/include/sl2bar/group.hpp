#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sl2bar/field.hpp"
#include "sl2bar/mat2.hpp"

namespace sl2bar {

enum class GroupKind { kSL2, kGL2 };

std::string_view to_string(GroupKind kind);

/// Index of an element in a GroupTable.
using Elt = std::uint32_t;

/// All of SL2(GF(2^n)) or GL2(GF(2^n)), indexed. Element 0 is the identity;
/// the rest follow in lexicographic order of their (a, b, c, d) masks.
/// Immutable after construction.
class GroupTable {
 public:
  static constexpr int kMaxSl2Level = 5;
  static constexpr int kMaxGl2Level = 3;
  /// Dense multiplication tables are kept up to this order.
  static constexpr std::size_t kCayleyLimit = 5000;

  /// Throws BoundExceeded above kMaxSl2Level / kMaxGl2Level.
  static GroupTable enumerate(Level level, GroupKind kind);

  Level level() const { return level_; }
  GroupKind kind() const { return kind_; }
  std::size_t size() const { return entries_.size(); }
  bool has_cayley() const { return !cayley_.empty(); }

  static constexpr Elt identity() { return 0; }

  /// Entry masks (a, b, c, d) at the table's level.
  const std::array<std::uint32_t, 4>& entries(Elt x) const { return entries_[x]; }
  Mat2 to_mat(Elt x) const;
  /// Index of m, or nullopt when m is not in the group or has entries
  /// outside the table's field.
  std::optional<Elt> find(const Mat2& m) const;
  std::optional<Elt> find(const std::array<std::uint32_t, 4>& masks) const;

  Elt mul(Elt x, Elt y) const;
  Elt inv(Elt x) const { return inverse_[x]; }
  /// x y x^-1.
  Elt conj(Elt x, Elt y) const { return mul(mul(x, y), inv(x)); }
  bool commute(Elt x, Elt y) const;
  /// Least d >= 1 with x^d = 1, by repeated multiplication.
  std::uint64_t order(Elt x) const;

 private:
  GroupTable(Level level, GroupKind kind) : level_(level), kind_(kind) {}
  Elt mul_slow(Elt x, Elt y) const;
  std::uint64_t key(const std::array<std::uint32_t, 4>& m) const;

  Level level_;
  GroupKind kind_;
  std::vector<std::array<std::uint32_t, 4>> entries_;
  std::vector<Elt> index_;  // by packed key; kAbsent when not a member
  std::vector<Elt> inverse_;
  std::vector<std::uint16_t> cayley_;
};

/// A subgroup of a GroupTable, held as a sorted member list plus a bit-set.
/// The table must outlive it.
class Subgroup {
 public:
  /// Checks closure; throws PreconditionViolation if `members` is not a subgroup.
  static Subgroup from_members(const GroupTable& group, std::vector<Elt> members);
  static Subgroup whole(const GroupTable& group);
  static Subgroup trivial(const GroupTable& group);

  const GroupTable& parent() const { return *parent_; }
  const std::vector<Elt>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elt x) const { return bits_[x]; }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  friend Subgroup subgroup_generated(const GroupTable& group, const std::vector<Elt>& gens);
  Subgroup(const GroupTable& group, std::vector<Elt> members);

  const GroupTable* parent_;
  std::vector<Elt> members_;
  std::vector<bool> bits_;
};

/// Elements of the group in the named shape, ascending. The off-diagonal set
/// is not a subgroup; the other five are.
std::vector<Elt> subset_members(const GroupTable& group, SubsetName which);
/// Throws PreconditionViolation for kOffDiag.
Subgroup named_subgroup(const GroupTable& group, SubsetName which);

/// Elements of order 2, ascending.
std::vector<Elt> involutions(const GroupTable& group);

Subgroup centralizer_bf(const GroupTable& group, Elt g);
Subgroup normalizer_bf(const GroupTable& group, const Subgroup& h);
bool is_abelian(const Subgroup& h);
/// Derived subgroup, generated by all commutators x y x^-1 y^-1.
Subgroup derived_subgroup(const Subgroup& h);
bool is_metabelian(const Subgroup& h);

/// Closure of `gens` under multiplication.
Subgroup subgroup_generated(const GroupTable& group, const std::vector<Elt>& gens);

struct CtWitness {
  Elt x;
  Elt y;
  Elt z;
  friend bool operator==(const CtWitness&, const CtWitness&) = default;
};

/// Outcome of a commutative-transitivity check. A witness satisfies y != 1,
/// xy = yx, yz = zy and xz != zx; it is the lexicographically least (x, y, z).
struct CtReport {
  bool holds;
  std::optional<CtWitness> witness;
  friend bool operator==(const CtReport&, const CtReport&) = default;
};

bool is_ct_witness(const GroupTable& group, const CtWitness& w);

/// CT through the criterion "every nontrivial centralizer is abelian".
CtReport ct_check_centralizers(const GroupTable& group);

inline constexpr std::size_t kTripleScanLimit = 600;
/// Direct evaluation of the CT sentence over all triples; BoundExceeded above kTripleScanLimit.
CtReport ct_check_triples(const GroupTable& group);

/// Every maximal abelian subgroup reached from a nontrivial element, ascending
/// by member list. Each result A satisfies C(A) = A. BoundExceeded above kCayleyLimit.
std::vector<Subgroup> maximal_abelian_subgroups(const GroupTable& group);
/// Whether distinct maximal abelian subgroups always meet trivially.
bool maximal_abelian_intersections(const GroupTable& group);

/// Conjugacy classes, each ascending, ordered by least member.
std::vector<std::vector<Elt>> conjugacy_classes(const GroupTable& group);
/// No normal closure of a nontrivial class is proper. BoundExceeded above kCayleyLimit.
bool is_simple(const GroupTable& group);

/// Action of SL2 on the projective line. Point i < 2^n is [i : 1] with i read
/// as a mask; point 2^n is [1 : 0].
struct ProjectiveAction {
  int points = 0;
  std::vector<std::vector<int>> images;  // images[x][p]

  std::size_t kernel_size() const;
  /// Number of distinct permutations.
  std::size_t image_order() const;
  bool all_even() const;
};

inline constexpr int kMaxProjectiveLevel = 4;
/// Requires SL2; BoundExceeded above kMaxProjectiveLevel.
ProjectiveAction projective_action(const GroupTable& group);
/// +1 or -1.
int permutation_sign(const std::vector<int>& perm);

/// (a, b) of order 3 with ab = [[1,1],[0,1]], least a first. Requires SL2 at
/// level 2; SearchFailed if none exists.
std::pair<Elt, Elt> unipotent_as_order3_product(const GroupTable& group);

/// N normal in <N, H>, N and H meet trivially, and NH = <N, H>.
bool semidirect_check(const GroupTable& group, const Subgroup& n, const Subgroup& h);

/// UT and LT meet in {I} and no nontrivial pair from them commutes.
bool ut_lt_disjointness(const GroupTable& group);

}  // namespace sl2bar
