#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sl2bar/gf2_poly.hpp"

namespace sl2bar {

/// Largest supported extension degree.
inline constexpr int kMaxLevel = 30;

/// Degree-n Conway polynomials over GF(2) for n = 1..kMaxLevel.
///
/// Text form is one `n:HEX` line per level, HEX being the big-endian
/// coefficient mask including the leading term (`2:7` is x^2+x+1). Blank
/// lines and lines starting with '#' are ignored.
class ConwayTable {
 public:
  /// The table compiled into the library (same content as data/conway_gf2.txt).
  static ConwayTable builtin();

  /// Throws ParseError on malformed lines, duplicates, wrong degrees, or
  /// missing levels.
  static ConwayTable parse(std::string_view text);
  static ConwayTable load(const std::filesystem::path& path);

  std::string serialize() const;

  Gf2Poly at(int n) const;

  friend bool operator==(const ConwayTable&, const ConwayTable&) = default;

 private:
  std::array<Gf2Poly, kMaxLevel + 1> entries_{};
};

/// True if the root of `f` (degree n) raised to (2^n-1)/(2^m-1) is a root of
/// `lower` (degree m, m | n).
bool norm_compatible(Gf2Poly f, Gf2Poly lower);

/// Irreducibility, primitivity and norm-compatibility with every divisor
/// level. Returns one message per violated condition; empty means valid.
std::vector<std::string> validate(const ConwayTable& table);

}  // namespace sl2bar
