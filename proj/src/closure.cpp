#include "sl2bar/closure.hpp"

#include <numeric>
#include <string>

#include "field_context.hpp"
#include "sl2bar/error.hpp"
#include "sl2bar/numtheory.hpp"

namespace sl2bar {

ClosureElt ClosureElt::from(FieldElt a) { return reduce(a); }
ClosureElt ClosureElt::zero() { return ClosureElt(FieldElt::zero(Level(1))); }
ClosureElt ClosureElt::one() { return ClosureElt(FieldElt::one(Level(1))); }

FieldElt ClosureElt::at(Level n) const { return lift(repr_, n.value()); }

std::strong_ordering operator<=>(const ClosureElt& a, const ClosureElt& b) {
  if (auto c = a.level() <=> b.level(); c != 0) return c;
  return a.mask() <=> b.mask();
}

FieldElt lift(FieldElt a, int n) {
  const int m = a.level().value();
  if (n > kMaxLevel) {
    throw Error(ErrorCode::kLevelOverflow, "level " + std::to_string(n) + " exceeds " + std::to_string(kMaxLevel));
  }
  if (n < 1 || n % m != 0) {
    throw Error(ErrorCode::kNotADivisor, std::to_string(m) + " does not divide " + std::to_string(n));
  }
  if (m == n) return a;
  const auto& basis = detail::context().embedding(m, n).basis;
  std::uint32_t image = 0;
  for (int i = 0; i < m; ++i) {
    if ((a.mask() >> i) & 1U) image ^= basis[i];
  }
  return FieldElt::make(Level(n), image);
}

ClosureElt reduce(FieldElt a) {
  const int n = a.level().value();
  for (int d : divisors(n)) {
    if (d == n) break;
    if (frobenius_power(a, d) != a) continue;
    const auto x = detail::context().embedding(d, n).preimage->solve(a.mask());
    if (!x) throw Error(ErrorCode::kInvariantViolation, "fixed element has no subfield preimage");
    return ClosureElt(FieldElt::make(Level(d), *x));
  }
  return ClosureElt(a);
}

Level join_level(const ClosureElt& a, const ClosureElt& b) {
  const int l = std::lcm(a.level().value(), b.level().value());
  if (l > kMaxLevel) {
    throw Error(ErrorCode::kLevelOverflow, "joined level lcm(" + std::to_string(a.level().value()) + ", " +
                                               std::to_string(b.level().value()) + ") = " + std::to_string(l) +
                                               " exceeds " + std::to_string(kMaxLevel));
  }
  return Level(l);
}

std::pair<FieldElt, FieldElt> join(const ClosureElt& a, const ClosureElt& b) {
  const Level l = join_level(a, b);
  return {a.at(l), b.at(l)};
}

ClosureElt cadd(const ClosureElt& a, const ClosureElt& b) {
  auto [x, y] = join(a, b);
  return reduce(x + y);
}

ClosureElt cmul(const ClosureElt& a, const ClosureElt& b) {
  auto [x, y] = join(a, b);
  return reduce(x * y);
}

ClosureElt cinv(const ClosureElt& a) { return reduce(inv(a.repr())); }
ClosureElt csqrt(const ClosureElt& a) { return reduce(sqrt(a.repr())); }
ClosureElt cpow(const ClosureElt& a, std::int64_t e) { return reduce(pow(a.repr(), e)); }
ClosureElt cfrobenius_power(const ClosureElt& a, int j) { return reduce(frobenius_power(a.repr(), j)); }
std::uint64_t corder(const ClosureElt& a) { return elt_order(a.repr()); }

}  // namespace sl2bar
