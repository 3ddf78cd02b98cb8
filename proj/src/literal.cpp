#include "sl2bar/literal.hpp"

#include <array>
#include <cctype>
#include <charconv>

#include "sl2bar/error.hpp"

namespace sl2bar {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_token(std::string_view token, std::string_view why) {
  throw Error(ErrorCode::kParseError, "bad token '" + std::string(token) + "': " + std::string(why));
}

}  // namespace

std::string to_string(FieldElt a) {
  char hex[16];
  auto res = std::to_chars(hex, hex + sizeof hex, a.mask(), 16);
  return "0x" + std::string(hex, res.ptr) + "@" + std::to_string(a.level().value());
}

std::string to_string(const ClosureElt& a) { return to_string(a.repr()); }

std::string to_string(const Mat2& m) {
  return "[[" + to_string(m.a) + "," + to_string(m.b) + "],[" + to_string(m.c) + "," + to_string(m.d) + "]]";
}

FieldElt parse_field_elt(std::string_view text) {
  const std::string_view token = trim(text);
  if (token.size() < 2 || token[0] != '0' || (token[1] != 'x' && token[1] != 'X')) bad_token(token, "expected 0x<hex>@<n>");
  const auto at = token.find('@');
  if (at == std::string_view::npos) bad_token(token, "missing '@<level>'");
  const std::string_view hex = token.substr(2, at - 2);
  const std::string_view lvl = token.substr(at + 1);
  std::uint64_t mask = 0;
  int n = 0;
  auto r1 = std::from_chars(hex.data(), hex.data() + hex.size(), mask, 16);
  if (hex.empty() || r1.ec != std::errc{} || r1.ptr != hex.data() + hex.size()) bad_token(token, "invalid hex mask");
  auto r2 = std::from_chars(lvl.data(), lvl.data() + lvl.size(), n);
  if (lvl.empty() || r2.ec != std::errc{} || r2.ptr != lvl.data() + lvl.size()) bad_token(token, "invalid level");
  if (n < 1 || n > kMaxLevel) bad_token(token, "level outside [1, " + std::to_string(kMaxLevel) + "]");
  if ((mask >> n) != 0) bad_token(token, "mask has bits beyond the level");
  return FieldElt::make(Level(n), static_cast<std::uint32_t>(mask));
}

ClosureElt parse_closure_elt(std::string_view text) { return ClosureElt::from(parse_field_elt(text)); }

Mat2 parse_mat2(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.size() < 4 || compact.substr(0, 2) != "[[" || compact.substr(compact.size() - 2) != "]]") {
    bad_token(text, "expected [[e,e],[e,e]]");
  }
  const std::string inner = compact.substr(2, compact.size() - 4);
  const auto sep = inner.find("],[");
  if (sep == std::string::npos || inner.find("],[", sep + 1) != std::string::npos) bad_token(text, "expected two rows");
  std::array<std::string, 2> rows{inner.substr(0, sep), inner.substr(sep + 3)};
  std::array<ClosureElt, 4> entries{ClosureElt::zero(), ClosureElt::zero(), ClosureElt::zero(), ClosureElt::zero()};
  for (int r = 0; r < 2; ++r) {
    const auto comma = rows[r].find(',');
    if (comma == std::string::npos || rows[r].find(',', comma + 1) != std::string::npos) {
      bad_token(rows[r], "expected two entries per row");
    }
    entries[2 * r] = parse_closure_elt(rows[r].substr(0, comma));
    entries[2 * r + 1] = parse_closure_elt(rows[r].substr(comma + 1));
  }
  return Mat2{entries[0], entries[1], entries[2], entries[3]};
}

}  // namespace sl2bar
