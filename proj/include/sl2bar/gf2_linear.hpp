#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sl2bar {

/// Solves x_0 c_0 + ... + x_{d-1} c_{d-1} = target over GF(2), where the
/// columns c_i are bit-vectors of length <= 32 and d <= 32.
class Gf2LinearSolver {
 public:
  explicit Gf2LinearSolver(std::span<const std::uint32_t> columns);

  /// A coefficient mask x with the given image, or nullopt if the target is
  /// outside the column span. Among several solutions, one is returned.
  std::optional<std::uint32_t> solve(std::uint32_t target) const;

  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  struct Pivot {
    std::uint32_t image;
    std::uint32_t combo;
    int lead;
  };
  // Sorted by lead, descending.
  std::vector<Pivot> pivots_;
};

}  // namespace sl2bar
