#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sl2bar {

struct PrimePower {
  std::uint64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Trial division; fine for the values used here (at most 2^30 - 1).
std::vector<PrimePower> factorize(std::uint64_t value);

// Factorization of 2^n - 1 for 1 <= n <= 62, memoized per n.
const std::vector<PrimePower>& mersenne_factors(int n);

std::uint64_t euler_totient(std::uint64_t value);

// Divisors of n in ascending order.
std::vector<int> divisors(int n);

}  // namespace sl2bar
