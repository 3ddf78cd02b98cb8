#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "sl2bar/conway.hpp"
#include "sl2bar/gf2_poly.hpp"

namespace sl2bar {

/// Extension degree n of GF(2^n) over GF(2), 1 <= n <= kMaxLevel.
class Level {
 public:
  /// Throws BoundExceeded outside [1, kMaxLevel].
  explicit Level(int n);

  constexpr int value() const { return n_; }
  /// 2^n - 1, the order of the multiplicative group.
  constexpr std::uint32_t unit_count() const { return static_cast<std::uint32_t>((std::uint64_t{1} << n_) - 1); }
  /// 2^n.
  constexpr std::uint64_t size() const { return std::uint64_t{1} << n_; }

  friend constexpr auto operator<=>(Level, Level) = default;

 private:
  int n_;
};

/// An element of GF(2^n): bit i of the mask is the coefficient of g^i, where
/// g is a root of the level-n Conway polynomial.
class FieldElt {
 public:
  /// Throws BoundExceeded if the mask has a bit at position >= n.
  static FieldElt make(Level level, std::uint32_t mask);
  static FieldElt zero(Level level) { return FieldElt(level, 0); }
  static FieldElt one(Level level) { return FieldElt(level, 1); }
  /// The Conway generator g (equal to 1 at level 1).
  static FieldElt generator(Level level);

  Level level() const { return level_; }
  std::uint32_t mask() const { return mask_; }
  bool is_zero() const { return mask_ == 0; }
  bool is_one() const { return mask_ == 1; }

  friend bool operator==(const FieldElt&, const FieldElt&) = default;

 private:
  FieldElt(Level level, std::uint32_t mask) : level_(level), mask_(mask) {}

  Level level_;
  std::uint32_t mask_;
};

// All binary operations throw LevelMismatch when levels differ.
FieldElt add(FieldElt a, FieldElt b);
FieldElt mul(FieldElt a, FieldElt b);
/// Throws DivisionByZero for a = 0.
FieldElt inv(FieldElt a);
/// x -> x^2.
FieldElt frobenius(FieldElt a);
/// x -> x^(2^j) for any j >= 0.
FieldElt frobenius_power(FieldElt a, int j);
/// The unique square root, a^(2^(n-1)).
FieldElt sqrt(FieldElt a);
/// a^e; negative e requires a != 0 (DivisionByZero otherwise). 0^0 = 1.
FieldElt pow(FieldElt a, std::int64_t e);

/// Multiplicative order; DivisionByZero for a = 0.
std::uint64_t elt_order(FieldElt a);

/// Monic irreducible polynomial over GF(2) with a as a root.
Gf2Poly minimal_poly(FieldElt a);

/// a, a^2, a^4, ... up to the first repetition.
std::vector<FieldElt> frobenius_orbit(FieldElt a);

/// Absolute trace sum_{i<n} a^(2^i); always 0 or 1.
FieldElt trace_abs(FieldElt a);

/// Some z with z^2 + z = c at c's level, or nullopt. The returned root is
/// the one whose mask has bit 0 clear; the other root is z + 1.
std::optional<FieldElt> artin_schreier_solve(FieldElt c);

/// Every element of multiplicative order 2^n - 1, in mask order.
/// Throws BoundExceeded for n > max_level.
std::vector<FieldElt> elements_of_max_order(Level level, int max_level = 20);

/// Evaluates p at a.
FieldElt evaluate(Gf2Poly p, FieldElt a);

inline FieldElt operator+(FieldElt a, FieldElt b) { return add(a, b); }
inline FieldElt operator*(FieldElt a, FieldElt b) { return mul(a, b); }

/// Replaces the process-wide Conway table after validating it; throws
/// InvalidConwayTable listing the first problem. Intended to be called once
/// at startup, before concurrent use.
void install_conway_table(const ConwayTable& table);
const ConwayTable& conway_table();

}  // namespace sl2bar
