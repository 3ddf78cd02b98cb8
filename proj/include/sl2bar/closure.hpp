#pragma once

#include <compare>
#include <cstdint>
#include <utility>

#include "sl2bar/field.hpp"

namespace sl2bar {

/// An element of the algebraic closure of GF(2), held at the smallest level
/// containing it. Equality, ordering and display all use that canonical form.
class ClosureElt {
 public:
  /// Reduces `a` to its minimal level.
  static ClosureElt from(FieldElt a);
  static ClosureElt zero();
  static ClosureElt one();

  const FieldElt& repr() const { return repr_; }
  Level level() const { return repr_.level(); }
  std::uint32_t mask() const { return repr_.mask(); }
  bool is_zero() const { return repr_.is_zero(); }
  bool is_one() const { return repr_.is_one(); }

  /// Lifted to a level that the minimal level divides.
  FieldElt at(Level n) const;

  friend bool operator==(const ClosureElt&, const ClosureElt&) = default;
  /// Smaller minimal level first, then smaller mask.
  friend std::strong_ordering operator<=>(const ClosureElt& a, const ClosureElt& b);

 private:
  friend ClosureElt reduce(FieldElt a);
  explicit ClosureElt(FieldElt minimal) : repr_(minimal) {}

  FieldElt repr_;
};

/// Image of `a` under the embedding GF(2^m) -> GF(2^n) that sends the level-m
/// Conway generator to g_n^((2^n-1)/(2^m-1)). Throws LevelOverflow for
/// n > kMaxLevel and NotADivisor unless m | n.
FieldElt lift(FieldElt a, int n);

/// Canonical minimal-level form of `a`.
ClosureElt reduce(FieldElt a);

/// lcm of the levels; LevelOverflow (naming the lcm) if it exceeds kMaxLevel.
Level join_level(const ClosureElt& a, const ClosureElt& b);
std::pair<FieldElt, FieldElt> join(const ClosureElt& a, const ClosureElt& b);

ClosureElt cadd(const ClosureElt& a, const ClosureElt& b);
ClosureElt cmul(const ClosureElt& a, const ClosureElt& b);
ClosureElt cinv(const ClosureElt& a);
ClosureElt csqrt(const ClosureElt& a);
ClosureElt cpow(const ClosureElt& a, std::int64_t e);
ClosureElt cfrobenius_power(const ClosureElt& a, int j);
std::uint64_t corder(const ClosureElt& a);

inline ClosureElt operator+(const ClosureElt& a, const ClosureElt& b) { return cadd(a, b); }
inline ClosureElt operator*(const ClosureElt& a, const ClosureElt& b) { return cmul(a, b); }

}  // namespace sl2bar
