#include "sl2bar/gf2_linear.hpp"

#include <algorithm>
#include <bit>

#include "sl2bar/error.hpp"

namespace sl2bar {

Gf2LinearSolver::Gf2LinearSolver(std::span<const std::uint32_t> columns) {
  if (columns.size() > 32) throw Error(ErrorCode::kBoundExceeded, "GF(2) solver supports at most 32 columns");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    std::uint32_t v = columns[i];
    std::uint32_t combo = std::uint32_t{1} << i;
    for (const Pivot& p : pivots_) {
      if ((v >> p.lead) & 1U) {
        v ^= p.image;
        combo ^= p.combo;
      }
    }
    if (v == 0) continue;
    const int lead = 31 - std::countl_zero(v);
    auto pos = std::find_if(pivots_.begin(), pivots_.end(), [lead](const Pivot& p) { return p.lead < lead; });
    pivots_.insert(pos, Pivot{v, combo, lead});
  }
}

std::optional<std::uint32_t> Gf2LinearSolver::solve(std::uint32_t target) const {
  std::uint32_t x = 0;
  for (const Pivot& p : pivots_) {
    if ((target >> p.lead) & 1U) {
      target ^= p.image;
      x ^= p.combo;
    }
  }
  if (target != 0) return std::nullopt;
  return x;
}

}  // namespace sl2bar
