#include "sl2bar/numtheory.hpp"

#include <array>
#include <mutex>

#include "sl2bar/error.hpp"

namespace sl2bar {

std::vector<PrimePower> factorize(std::uint64_t value) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= value; p += (p == 2 ? 1 : 2)) {
    if (value % p != 0) continue;
    int e = 0;
    while (value % p == 0) {
      value /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (value > 1) out.push_back({value, 1});
  return out;
}

const std::vector<PrimePower>& mersenne_factors(int n) {
  constexpr int kMax = 62;
  if (n < 1 || n > kMax) {
    throw Error(ErrorCode::kBoundExceeded, "mersenne_factors supports 1 <= n <= 62, got " + std::to_string(n));
  }
  static std::array<std::once_flag, kMax + 1> once;
  static std::array<std::vector<PrimePower>, kMax + 1> memo;
  std::call_once(once[n], [n] { memo[n] = factorize((std::uint64_t{1} << n) - 1); });
  return memo[n];
}

std::uint64_t euler_totient(std::uint64_t value) {
  if (value == 0) return 0;
  std::uint64_t phi = value;
  for (const auto& [p, e] : factorize(value)) phi = phi / p * (p - 1);
  return phi;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace sl2bar
