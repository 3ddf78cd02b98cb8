#include "sl2bar/field.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <string>

#include "field_context.hpp"
#include "sl2bar/error.hpp"
#include "sl2bar/numtheory.hpp"

namespace sl2bar {
namespace detail {
namespace {

std::uint32_t schoolbook_mul(std::uint64_t modulus, int n, std::uint32_t a, std::uint32_t b) {
  std::uint64_t acc = 0;
  std::uint64_t shifted = a;
  for (std::uint32_t rest = b; rest != 0; rest >>= 1, shifted <<= 1) {
    if (rest & 1U) acc ^= shifted;
  }
  for (int d = 2 * n - 2; d >= n; --d) {
    if ((acc >> d) & 1U) acc ^= modulus << (d - n);
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t schoolbook_pow(std::uint64_t modulus, int n, std::uint32_t a, std::uint64_t e) {
  std::uint32_t result = 1;
  std::uint32_t sq = a;
  for (; e != 0; e >>= 1) {
    if (e & 1U) result = schoolbook_mul(modulus, n, result, sq);
    sq = schoolbook_mul(modulus, n, sq, sq);
  }
  return result;
}

}  // namespace

FieldContext::FieldContext(const ConwayTable& table) : table_(table) {
  for (int n = 1; n <= kMaxLevel; ++n) moduli_[n] = table_.at(n).bits();

  for (int n = 1; n <= kTableLevel; ++n) {
    const std::uint32_t units = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    const std::uint32_t g = n == 1 ? 1 : 2;
    LogTables& t = logs_[n];
    t.exp.resize(2 * static_cast<std::size_t>(units));
    t.log.assign(std::size_t{1} << n, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < units; ++i) {
      t.exp[i] = cur;
      t.exp[i + units] = cur;
      t.log[cur] = i;
      cur = schoolbook_mul(moduli_[n], n, cur, g);
    }
  }

  for (int n = 1; n <= kMaxLevel; ++n) {
    std::vector<std::uint32_t> cols;
    for (int i = 0; i < n; ++i) {
      const std::uint32_t basis = std::uint32_t{1} << i;
      cols.push_back(mul_raw(*this, n, basis, basis) ^ basis);
    }
    artin_schreier_[n].emplace(cols);
  }

  for (int n = 1; n <= kMaxLevel; ++n) {
    const std::uint32_t g_n = n == 1 ? 1 : 2;
    for (int m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      const std::uint64_t exponent = ((std::uint64_t{1} << n) - 1) / ((std::uint64_t{1} << m) - 1);
      const std::uint32_t h = pow_raw(*this, n, g_n, exponent);
      Embedding& e = embeddings_[m][n];
      std::uint32_t cur = 1;
      for (int i = 0; i < m; ++i) {
        e.basis.push_back(cur);
        cur = mul_raw(*this, n, cur, h);
      }
      e.preimage.emplace(e.basis);
    }
  }
}

std::uint32_t mul_raw(const FieldContext& ctx, int n, std::uint32_t a, std::uint32_t b) {
  if (const LogTables* t = ctx.log_tables(n)) {
    if (a == 0 || b == 0) return 0;
    return t->exp[t->log[a] + t->log[b]];
  }
  return schoolbook_mul(ctx.modulus(n), n, a, b);
}

std::uint32_t pow_raw(const FieldContext& ctx, int n, std::uint32_t a, std::uint64_t e) {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t units = (std::uint64_t{1} << n) - 1;
  if (const LogTables* t = ctx.log_tables(n)) {
    const std::uint64_t k = (static_cast<std::uint64_t>(t->log[a]) * (e % units)) % units;
    return t->exp[k];
  }
  return schoolbook_pow(ctx.modulus(n), n, a, e % units == 0 ? units : e % units);
}

namespace {

std::atomic<const FieldContext*> g_context{nullptr};
std::mutex g_install_mutex;

// Contexts are never freed: readers may still hold a pointer to a replaced one.
std::vector<std::unique_ptr<const FieldContext>>& retired() {
  static std::vector<std::unique_ptr<const FieldContext>> r;
  return r;
}

const FieldContext* make_context(const ConwayTable& table) {
  const auto problems = validate(table);
  if (!problems.empty()) {
    throw Error(ErrorCode::kInvalidConwayTable, problems.front() + " (" + std::to_string(problems.size()) + " problem(s))");
  }
  retired().push_back(std::make_unique<const FieldContext>(table));
  return retired().back().get();
}

}  // namespace

const FieldContext& context() {
  if (const FieldContext* ctx = g_context.load(std::memory_order_acquire)) return *ctx;
  std::lock_guard lock(g_install_mutex);
  if (const FieldContext* ctx = g_context.load(std::memory_order_acquire)) return *ctx;
  const FieldContext* ctx = make_context(ConwayTable::builtin());
  g_context.store(ctx, std::memory_order_release);
  return *ctx;
}

}  // namespace detail

using detail::context;

void install_conway_table(const ConwayTable& table) {
  std::lock_guard lock(detail::g_install_mutex);
  detail::g_context.store(detail::make_context(table), std::memory_order_release);
}

const ConwayTable& conway_table() { return context().table(); }

Level::Level(int n) : n_(n) {
  if (n < 1 || n > kMaxLevel) {
    throw Error(ErrorCode::kBoundExceeded, "level " + std::to_string(n) + " outside [1, " + std::to_string(kMaxLevel) + "]");
  }
}

FieldElt FieldElt::make(Level level, std::uint32_t mask) {
  if ((std::uint64_t{mask} >> level.value()) != 0) {
    throw Error(ErrorCode::kBoundExceeded, "mask " + std::to_string(mask) + " has bits beyond level " + std::to_string(level.value()));
  }
  return FieldElt(level, mask);
}

FieldElt FieldElt::generator(Level level) { return FieldElt(level, level.value() == 1 ? 1 : 2); }

namespace {

void require_same_level(FieldElt a, FieldElt b) {
  if (a.level() != b.level()) {
    throw Error(ErrorCode::kLevelMismatch,
                "levels " + std::to_string(a.level().value()) + " and " + std::to_string(b.level().value()));
  }
}

}  // namespace

FieldElt add(FieldElt a, FieldElt b) {
  require_same_level(a, b);
  return FieldElt::make(a.level(), a.mask() ^ b.mask());
}

FieldElt mul(FieldElt a, FieldElt b) {
  require_same_level(a, b);
  return FieldElt::make(a.level(), detail::mul_raw(context(), a.level().value(), a.mask(), b.mask()));
}

FieldElt inv(FieldElt a) {
  if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return pow(a, -1);
}

FieldElt frobenius(FieldElt a) { return mul(a, a); }

FieldElt frobenius_power(FieldElt a, int j) {
  const int n = a.level().value();
  j %= n;
  for (int i = 0; i < j; ++i) a = frobenius(a);
  return a;
}

FieldElt sqrt(FieldElt a) { return frobenius_power(a, a.level().value() - 1); }

FieldElt pow(FieldElt a, std::int64_t e) {
  const Level level = a.level();
  if (e < 0) {
    if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "negative power of zero");
    const std::int64_t units = level.unit_count();
    e = ((e % units) + units) % units;
  }
  return FieldElt::make(level, detail::pow_raw(context(), level.value(), a.mask(), static_cast<std::uint64_t>(e)));
}

std::uint64_t elt_order(FieldElt a) {
  if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "order of zero");
  std::uint64_t d = a.level().unit_count();
  for (const auto& [p, e] : mersenne_factors(a.level().value())) {
    while (d % p == 0 && pow(a, static_cast<std::int64_t>(d / p)).is_one()) d /= p;
  }
  return d;
}

std::vector<FieldElt> frobenius_orbit(FieldElt a) {
  std::vector<FieldElt> orbit{a};
  for (FieldElt r = frobenius(a); r != a; r = frobenius(r)) orbit.push_back(r);
  return orbit;
}

Gf2Poly minimal_poly(FieldElt a) {
  const Level level = a.level();
  // coeffs[i] is the coefficient of x^i.
  std::vector<FieldElt> coeffs{FieldElt::one(level)};
  for (FieldElt root : frobenius_orbit(a)) {
    std::vector<FieldElt> next(coeffs.size() + 1, FieldElt::zero(level));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = next[i + 1] + coeffs[i];
      next[i] = next[i] + coeffs[i] * root;
    }
    coeffs = std::move(next);
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_one()) {
      bits |= std::uint64_t{1} << i;
    } else if (!coeffs[i].is_zero()) {
      throw Error(ErrorCode::kPreconditionViolation, "minimal polynomial coefficient outside GF(2)");
    }
  }
  return Gf2Poly(bits);
}

FieldElt trace_abs(FieldElt a) {
  FieldElt sum = FieldElt::zero(a.level());
  FieldElt cur = a;
  for (int i = 0; i < a.level().value(); ++i) {
    sum = sum + cur;
    cur = frobenius(cur);
  }
  return sum;
}

std::optional<FieldElt> artin_schreier_solve(FieldElt c) {
  const auto z = context().artin_schreier(c.level().value()).solve(c.mask());
  if (!z) return std::nullopt;
  return FieldElt::make(c.level(), *z & ~std::uint32_t{1});
}

std::vector<FieldElt> elements_of_max_order(Level level, int max_level) {
  if (level.value() > max_level) {
    throw Error(ErrorCode::kBoundExceeded,
                "elements_of_max_order supports n <= " + std::to_string(max_level) + ", got " + std::to_string(level.value()));
  }
  std::vector<FieldElt> out;
  const std::uint64_t target = level.unit_count();
  for (std::uint64_t mask = 1; mask < level.size(); ++mask) {
    const FieldElt a = FieldElt::make(level, static_cast<std::uint32_t>(mask));
    if (elt_order(a) == target) out.push_back(a);
  }
  return out;
}

FieldElt evaluate(Gf2Poly p, FieldElt a) {
  FieldElt acc = FieldElt::zero(a.level());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * a;
    if (p.coeff(i)) acc = acc + FieldElt::one(a.level());
  }
  return acc;
}

}  // namespace sl2bar
