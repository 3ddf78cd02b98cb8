#pragma once

// Process-wide immutable tables derived from the installed Conway table.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sl2bar/conway.hpp"
#include "sl2bar/gf2_linear.hpp"

namespace sl2bar::detail {

// Levels up to this bound multiply through log/antilog tables.
inline constexpr int kTableLevel = 16;

struct LogTables {
  std::vector<std::uint32_t> exp;  // length 2 * (2^n - 1)
  std::vector<std::uint32_t> log;  // length 2^n, log[0] unused
};

struct Embedding {
  std::vector<std::uint32_t> basis;  // images of g_m^i at level n
  std::optional<Gf2LinearSolver> preimage;
};

class FieldContext {
 public:
  explicit FieldContext(const ConwayTable& table);

  const ConwayTable& table() const { return table_; }
  std::uint64_t modulus(int n) const { return moduli_[n]; }
  const LogTables* log_tables(int n) const { return n <= kTableLevel ? &logs_[n] : nullptr; }
  const Gf2LinearSolver& artin_schreier(int n) const { return *artin_schreier_[n]; }
  /// Requires m | n.
  const Embedding& embedding(int m, int n) const { return embeddings_[m][n]; }

 private:
  ConwayTable table_;
  std::array<std::uint64_t, kMaxLevel + 1> moduli_{};
  std::array<LogTables, kTableLevel + 1> logs_;
  std::array<std::optional<Gf2LinearSolver>, kMaxLevel + 1> artin_schreier_;
  std::array<std::array<Embedding, kMaxLevel + 1>, kMaxLevel + 1> embeddings_;
};

const FieldContext& context();

// Mask-level arithmetic at level n without level checks.
std::uint32_t mul_raw(const FieldContext& ctx, int n, std::uint32_t a, std::uint32_t b);
std::uint32_t pow_raw(const FieldContext& ctx, int n, std::uint32_t a, std::uint64_t e);

}  // namespace sl2bar::detail
