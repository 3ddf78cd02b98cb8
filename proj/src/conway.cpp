#include "sl2bar/conway.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sl2bar/error.hpp"

namespace sl2bar {
namespace {

constexpr std::array<std::uint64_t, kMaxLevel + 1> kBuiltin = {
    0x0,        0x3,        0x7,        0xB,        0x13,       0x25,       0x5B,       0x83,
    0x11D,      0x211,      0x46F,      0x805,      0x10EB,     0x201B,     0x40A9,     0x8035,
    0x1002D,    0x20009,    0x41403,    0x80027,    0x1006F3,   0x200065,   0x401F61,   0x800021,
    0x101E6A9,  0x2000145,  0x40045D3,  0x80016AD,  0x100020E5, 0x20000005, 0x400328AF,
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::uint64_t mersenne(int n) { return (std::uint64_t{1} << n) - 1; }

}  // namespace

ConwayTable ConwayTable::builtin() {
  ConwayTable t;
  for (int n = 1; n <= kMaxLevel; ++n) t.entries_[n] = Gf2Poly(kBuiltin[n]);
  return t;
}

ConwayTable ConwayTable::parse(std::string_view text) {
  ConwayTable t;
  int line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto where = "line " + std::to_string(line_no) + " '" + std::string(line) + "'";
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::kParseError, "missing ':' at " + where);
    const auto lhs = trim(line.substr(0, colon));
    const auto rhs = trim(line.substr(colon + 1));
    int n = 0;
    std::uint64_t mask = 0;
    auto r1 = std::from_chars(lhs.data(), lhs.data() + lhs.size(), n);
    auto r2 = std::from_chars(rhs.data(), rhs.data() + rhs.size(), mask, 16);
    if (r1.ec != std::errc{} || r1.ptr != lhs.data() + lhs.size() || r2.ec != std::errc{} ||
        r2.ptr != rhs.data() + rhs.size() || rhs.empty()) {
      throw Error(ErrorCode::kParseError, "malformed entry at " + where);
    }
    if (n < 1 || n > kMaxLevel) throw Error(ErrorCode::kParseError, "level out of range at " + where);
    if (!t.entries_[n].is_zero()) throw Error(ErrorCode::kParseError, "duplicate level at " + where);
    if (Gf2Poly(mask).degree() != n) throw Error(ErrorCode::kParseError, "degree does not match level at " + where);
    t.entries_[n] = Gf2Poly(mask);
  }
  for (int n = 1; n <= kMaxLevel; ++n) {
    if (t.entries_[n].is_zero()) throw Error(ErrorCode::kParseError, "missing level " + std::to_string(n));
  }
  return t;
}

ConwayTable ConwayTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read Conway table '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string ConwayTable::serialize() const {
  std::string out;
  for (int n = 1; n <= kMaxLevel; ++n) {
    char hex[20];
    auto res = std::to_chars(hex, hex + sizeof hex, entries_[n].bits(), 16);
    std::string digits(hex, res.ptr);
    for (char& c : digits) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out += std::to_string(n) + ":" + digits + "\n";
  }
  return out;
}

Gf2Poly ConwayTable::at(int n) const {
  if (n < 1 || n > kMaxLevel) throw Error(ErrorCode::kBoundExceeded, "no Conway polynomial for level " + std::to_string(n));
  return entries_[n];
}

bool norm_compatible(Gf2Poly f, Gf2Poly lower) {
  const int n = f.degree();
  const int m = lower.degree();
  if (m < 1 || n < 1 || n % m != 0) return false;
  const Gf2Poly h = powmod(Gf2Poly::x(), mersenne(n) / mersenne(m), f);
  return compose_mod(lower, h, f).is_zero();
}

std::vector<std::string> validate(const ConwayTable& table) {
  std::vector<std::string> problems;
  for (int n = 1; n <= kMaxLevel; ++n) {
    const Gf2Poly f = table.at(n);
    const std::string name = "level " + std::to_string(n) + " (" + to_string(f) + ")";
    if (!is_irreducible(f)) {
      problems.push_back(name + " is reducible");
      continue;
    }
    if (!is_primitive(f)) problems.push_back(name + " is not primitive");
    for (int m = 1; m < n; ++m) {
      if (n % m == 0 && !norm_compatible(f, table.at(m))) {
        problems.push_back(name + " is not norm-compatible with level " + std::to_string(m));
      }
    }
  }
  return problems;
}

}  // namespace sl2bar
