#include "sl2bar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>

#include "sl2bar/closure.hpp"
#include "sl2bar/conway.hpp"
#include "sl2bar/endo.hpp"
#include "sl2bar/error.hpp"
#include "sl2bar/field.hpp"
#include "sl2bar/group.hpp"
#include "sl2bar/literal.hpp"
#include "sl2bar/mat2.hpp"
#include "sl2bar/numtheory.hpp"

namespace sl2bar {

using nlohmann::ordered_json;

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

std::size_t VerifyReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kFail) return &c;
  }
  return nullptr;
}

namespace {

struct Outcome {
  bool passed = true;
  std::optional<ordered_json> witness;
};

Outcome pass() { return {}; }
Outcome fail(ordered_json witness) { return {false, std::move(witness)}; }

ordered_json mat_json(const Mat2& m) {
  return ordered_json::array({to_string(m.a), to_string(m.b), to_string(m.c), to_string(m.d)});
}

ordered_json elt_json(const GroupTable& g, Elt x) { return mat_json(g.to_mat(x)); }

FieldElt at(int n, std::uint32_t mask) { return FieldElt::make(Level(n), mask); }
ClosureElt cl(int n, std::uint32_t mask) { return ClosureElt::from(at(n, mask)); }

// Group tables are shared across checks within one run.
class Tables {
 public:
  const GroupTable& get(int n, GroupKind kind) {
    auto& slot = cache_[{n, kind}];
    if (!slot) slot = std::make_unique<GroupTable>(GroupTable::enumerate(Level(n), kind));
    return *slot;
  }

 private:
  std::map<std::pair<int, GroupKind>, std::unique_ptr<GroupTable>> cache_;
};

std::uint64_t sl2_order(int n) {
  const std::uint64_t q = std::uint64_t{1} << n;
  return q * (q * q - 1);
}

std::uint64_t gl2_order(int n) {
  const std::uint64_t q = std::uint64_t{1} << n;
  return (q * q - 1) * (q * q - q);
}

Elt lookup(const GroupTable& g, const Mat2& m) {
  const auto x = g.find(m);
  if (!x) throw Error(ErrorCode::kInvariantViolation, "matrix " + to_string(m) + " not in table");
  return *x;
}

Subgroup union_generated(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elt> gens = a.members();
  gens.insert(gens.end(), b.members().begin(), b.members().end());
  return subgroup_generated(g, gens);
}

// Nonzero field elements at level n as closure elements.
std::vector<ClosureElt> units(int n) {
  std::vector<ClosureElt> out;
  for (std::uint32_t m = 1; m < (1U << n); ++m) out.push_back(cl(n, m));
  return out;
}

Outcome check_conway(int) {
  const auto problems = validate(conway_table());
  if (problems.empty()) return pass();
  return fail(problems);
}

Outcome check_embedding(int bound) {
  for (int n = 2; n <= bound; ++n) {
    for (int m : divisors(n)) {
      if (m == n) continue;
      std::set<std::uint32_t> image;
      for (std::uint32_t x = 0; x < (1U << m); ++x) {
        const FieldElt a = at(m, x);
        const FieldElt la = lift(a, n);
        image.insert(la.mask());
        if (reduce(la).level().value() > m) return fail({{"m", m}, {"n", n}, {"reduce", to_string(a)}});
        for (std::uint32_t y = 0; y < (1U << m); ++y) {
          const FieldElt b = at(m, y);
          if (lift(a + b, n) != la + lift(b, n) || lift(a * b, n) != la * lift(b, n)) {
            return fail({{"m", m}, {"n", n}, {"a", to_string(a)}, {"b", to_string(b)}});
          }
        }
      }
      if (image.size() != (std::size_t{1} << m)) return fail({{"m", m}, {"n", n}, {"injective", false}});
    }
  }
  return pass();
}

Outcome check_artin_schreier(int bound) {
  for (int n = 1; n <= bound; ++n) {
    std::vector<bool> reachable(std::size_t{1} << n);
    for (std::uint32_t z = 0; z < (1U << n); ++z) {
      const FieldElt e = at(n, z);
      reachable[(e * e + e).mask()] = true;
    }
    for (std::uint32_t c = 0; c < (1U << n); ++c) {
      const FieldElt e = at(n, c);
      const auto z = artin_schreier_solve(e);
      const bool trace_zero = trace_abs(e).is_zero();
      if (z.has_value() != reachable[c] || trace_zero != reachable[c]) {
        return fail({{"c", to_string(e)}, {"solved", z.has_value()}, {"trace_zero", trace_zero}});
      }
      if (z && *z * *z + *z != e) return fail({{"c", to_string(e)}, {"z", to_string(*z)}});
      if (!z && 2 * n <= kMaxLevel) {
        const FieldElt up = lift(e, 2 * n);
        const auto w = artin_schreier_solve(up);
        if (!w || *w * *w + *w != up) return fail({{"c", to_string(e)}, {"fallback", 2 * n}});
      }
    }
  }
  return pass();
}

Outcome check_frobenius_endos(int bound) {
  for (int n = 1; n <= bound; ++n) {
    const auto endos = field_endos(Level(n));
    if (endos.size() != static_cast<std::size_t>(n)) return fail({{"n", n}, {"count", endos.size()}});
  }
  return pass();
}

Outcome check_root_permutation(int bound) {
  for (int n = 1; n <= bound; ++n) {
    const auto endos = field_endos(Level(n));
    for (std::uint32_t x = 0; x < (1U << n); ++x) {
      for (const auto& e : endos) {
        if (!endo_permutes_roots(e, at(n, x))) return fail({{"endo", to_string(e)}, {"a", to_string(at(n, x))}});
      }
    }
  }
  return pass();
}

Outcome check_max_order_permutation(int bound) {
  for (int n = 1; n <= bound; ++n) {
    const auto count = elements_of_max_order(Level(n)).size();
    if (count != euler_totient(Level(n).unit_count())) return fail({{"n", n}, {"count", count}});
    for (const auto& e : field_endos(Level(n))) {
      if (!endo_permutes_max_order(e, Level(n))) return fail({{"endo", to_string(e)}});
    }
  }
  return pass();
}

Outcome check_group_order(Tables& t, int n) {
  const auto& g = t.get(n, GroupKind::kSL2);
  if (g.size() != sl2_order(n)) return fail({{"kind", "SL2"}, {"order", g.size()}});
  if (n <= GroupTable::kMaxGl2Level) {
    const auto& h = t.get(n, GroupKind::kGL2);
    if (h.size() != gl2_order(n)) return fail({{"kind", "GL2"}, {"order", h.size()}});
  }
  return pass();
}

Outcome check_order_dichotomy(Tables& t, int n) {
  const auto& g = t.get(n, GroupKind::kSL2);
  for (Elt x = 0; x < g.size(); ++x) {
    const auto ord = g.order(x);
    const Mat2 m = g.to_mat(x);
    const bool trace_zero = mtrace(m).is_zero();
    const bool ok = (ord == 1 || ord == 2 || ord % 2 == 1) && ((ord == 2) == (trace_zero && x != 0)) &&
                    morder(m) == ord;
    if (!ok) return fail({{"element", elt_json(g, x)}, {"order", ord}});
  }
  return pass();
}

Outcome check_jordan(Tables& t, int n) {
  const auto& g = t.get(n, GroupKind::kSL2);
  for (const auto& cls : conjugacy_classes(g)) {
    const JordanClass first = classify_jordan(g.to_mat(cls.front()));
    for (Elt x : cls) {
      if (classify_jordan(g.to_mat(x)) != first) return fail({{"element", elt_json(g, x)}});
    }
  }
  // Distinct classes carry distinct labels.
  std::set<std::string> labels;
  const auto classes = conjugacy_classes(g);
  for (const auto& cls : classes) labels.insert(to_string(classify_jordan(g.to_mat(cls.front()))));
  if (labels.size() != classes.size()) return fail({{"classes", classes.size()}, {"labels", labels.size()}});
  return pass();
}

Outcome check_ct(Tables& t, int n) {
  const auto& g = t.get(n, GroupKind::kSL2);
  const CtReport r = ct_check_centralizers(g);
  if (r.holds) return pass();
  return fail({{"x", elt_json(g, r.witness->x)}, {"y", elt_json(g, r.witness->y)}, {"z", elt_json(g, r.witness->z)}});
}

Outcome check_ct_gl2(Tables& t, int n) {
  const auto& g = t.get(n, GroupKind::kGL2);
  const CtReport r = ct_check_centralizers(g);
  if (r.holds || !r.witness || !is_ct_witness(g, *r.witness)) return fail({{"holds", r.holds}});
  Outcome out;
  out.witness = ordered_json{
      {"x", elt_json(g, r.witness->x)}, {"y", elt_json(g, r.witness->y)}, {"z", elt_json(g, r.witness->z)}};
  return out;
}

Outcome check_ct_triples(Tables& t, int n, GroupKind kind) {
  const auto& g = t.get(n, kind);
  const CtReport a = ct_check_triples(g);
  const CtReport b = ct_check_centralizers(g);
  if (a != b) return fail({{"kind", to_string(kind)}, {"triples", a.holds}, {"centralizers", b.holds}});
  return pass();
}

Outcome check_maximal_abelian(Tables& t, int n, GroupKind kind) {
  const auto& g = t.get(n, kind);
  const bool disjoint = maximal_abelian_intersections(g);
  const bool ct = ct_check_centralizers(g).holds;
  if (disjoint != ct) return fail({{"kind", to_string(kind)}, {"trivial_intersections", disjoint}, {"ct", ct}});
  return pass();
}

Outcome check_diag_centralizer(Tables& t, int n) {
  const auto& g = t.get(n, GroupKind::kSL2);
  const Subgroup delta = named_subgroup(g, SubsetName::kDiag);
  if (delta.size() != Level(n).unit_count()) return fail({{"diag_order", delta.size()}});
  // Cyclic: some element has order 2^n - 1.
  const bool cyclic = std::any_of(delta.members().begin(), delta.members().end(),
                                  [&](Elt x) { return g.order(x) == Level(n).unit_count(); });
  if (!cyclic) return fail({{"cyclic", false}});
  for (const auto& lambda : units(n)) {
    if (lambda.is_one()) continue;
    const Elt x = lookup(g, Mat2::diag(lambda));
    if (!(centralizer_bf(g, x) == delta)) return fail({{"lambda", to_string(lambda)}});
  }
  return pass();
}

Outcome check_diag_normalizer(Tables& t, int n) {
  const auto& g = t.get(n, GroupKind::kSL2);
  const Subgroup delta = named_subgroup(g, SubsetName::kDiag);
  const Subgroup nd = normalizer_bf(g, delta);
  std::vector<Elt> expect = delta.members();
  const auto off = subset_members(g, SubsetName::kOffDiag);
  expect.insert(expect.end(), off.begin(), off.end());
  std::sort(expect.begin(), expect.end());
  if (nd.members() != expect) return fail({{"normalizer_order", nd.size()}});
  if (nd.size() != 2 * delta.size()) return fail({{"index", "not 2"}});
  if (!is_metabelian(nd)) return fail({{"metabelian", false}});
  const Subgroup s = subgroup_generated(g, {lookup(g, Mat2::swap())});
  if (!semidirect_check(g, delta, s)) return fail({{"semidirect", false}});
  return pass();
}

Outcome check_unipotent_centralizer(Tables& t, int n) {
  const auto& g = t.get(n, GroupKind::kSL2);
  const Subgroup ut = named_subgroup(g, SubsetName::kUpperUni);
  const Subgroup lt = named_subgroup(g, SubsetName::kLowerUni);
  if (ut.size() != Level(n).size() || !is_abelian(ut)) return fail({{"ut_order", ut.size()}});
  for (Elt x : ut.members()) {
    if (x != 0 && g.order(x) != 2) return fail({{"not_involution", elt_json(g, x)}});
  }
  for (const auto& lambda : units(n)) {
    if (!(centralizer_bf(g, lookup(g, Mat2::upper_unipotent(lambda))) == ut)) {
      return fail({{"upper", to_string(lambda)}});
    }
    if (!(centralizer_bf(g, lookup(g, Mat2::lower_unipotent(lambda))) == lt)) {
      return fail({{"lower", to_string(lambda)}});
    }
  }
  return pass();
}

Outcome check_unipotent_normalizer(Tables& t, int n) {
  const auto& g = t.get(n, GroupKind::kSL2);
  const Subgroup ut = named_subgroup(g, SubsetName::kUpperUni);
  const Subgroup lt = named_subgroup(g, SubsetName::kLowerUni);
  const Subgroup u = named_subgroup(g, SubsetName::kUpperTri);
  const Subgroup l = named_subgroup(g, SubsetName::kLowerTri);
  const Subgroup delta = named_subgroup(g, SubsetName::kDiag);
  if (!(normalizer_bf(g, ut) == u)) return fail({{"normalizer", "UT"}});
  if (!(normalizer_bf(g, lt) == l)) return fail({{"normalizer", "LT"}});
  if (!is_metabelian(u)) return fail({{"metabelian", false}});
  if (!semidirect_check(g, ut, delta) || !(union_generated(g, ut, delta) == u)) return fail({{"semidirect", false}});
  std::vector<Elt> inv_u;
  for (Elt x : u.members()) {
    if (g.order(x) == 2) inv_u.push_back(x);
  }
  std::vector<Elt> ut_star(ut.members().begin() + 1, ut.members().end());
  if (inv_u != ut_star) return fail({{"involutions", inv_u.size()}});
  return pass();
}

Outcome check_disjoint(Tables& t, int n) {
  if (!ut_lt_disjointness(t.get(n, GroupKind::kSL2))) return fail({{"disjoint", false}});
  return pass();
}

Outcome check_identities(int bound) {
  std::mt19937_64 rng(0x1de7);
  constexpr int kTuples = 10000;
  for (int i = 0; i < kTuples; ++i) {
    const int n = std::uniform_int_distribution<int>(1, bound)(rng);
    std::uniform_int_distribution<std::uint32_t> any(0, (1U << n) - 1);
    std::uniform_int_distribution<std::uint32_t> nonzero(1, (1U << n) - 1);
    const ClosureElt lambda = cl(n, nonzero(rng));
    ClosureElt s = ClosureElt::zero(), t = s, u = s, v = s;
    for (;;) {
      s = cl(n, any(rng));
      t = cl(n, any(rng));
      u = cl(n, any(rng));
      if (!s.is_zero()) {
        v = (ClosureElt::one() + t * u) * cinv(s);
        break;
      }
      if (!t.is_zero()) {
        u = cinv(t);
        v = cl(n, any(rng));
        break;
      }
    }
    const Mat2 p{s, t, u, v};
    if (conjugate_eq1(lambda, s, t, u, v) != conjugate(p, Mat2::diag(lambda)) ||
        conjugate_eq2(lambda, s, t, u, v) != conjugate(p, Mat2::upper_unipotent(lambda))) {
      return fail({{"lambda", to_string(lambda)}, {"conjugator", mat_json(p)}});
    }
  }
  return pass();
}

Outcome check_generation(Tables& t, int n) {
  const auto& g = t.get(n, GroupKind::kSL2);
  if (subgroup_generated(g, involutions(g)).size() != g.size()) return fail({{"generated_by", "involutions"}});
  const Subgroup lt = named_subgroup(g, SubsetName::kLowerUni);
  const Subgroup sw = subgroup_generated(g, {lookup(g, Mat2::swap())});
  if (union_generated(g, sw, lt).size() != g.size()) return fail({{"generated_by", "swap and LT"}});
  const Subgroup nd = normalizer_bf(g, named_subgroup(g, SubsetName::kDiag));
  const Subgroup l = named_subgroup(g, SubsetName::kLowerTri);
  if (union_generated(g, nd, l).size() != g.size()) return fail({{"generated_by", "N(diag) and L"}});
  for (const auto& lambda : units(n)) {
    const auto [p, q] = diag_as_two_involutions(lambda);
    if (p * q != Mat2::diag(lambda) || g.order(lookup(g, p)) != 2 || g.order(lookup(g, q)) != 2) {
      return fail({{"lambda", to_string(lambda)}});
    }
  }
  return pass();
}

Outcome check_order3_product(Tables& t, int) {
  const auto& g = t.get(2, GroupKind::kSL2);
  const auto [a, b] = unipotent_as_order3_product(g);
  if (g.order(a) != 3 || g.order(b) != 3 || g.mul(a, b) != lookup(g, Mat2::upper_unipotent(ClosureElt::one()))) {
    return fail({{"a", elt_json(g, a)}, {"b", elt_json(g, b)}});
  }
  return pass();
}

Outcome check_a5(Tables& t, int) {
  const auto& g = t.get(2, GroupKind::kSL2);
  const ProjectiveAction act = projective_action(g);
  if (act.points != 5 || act.kernel_size() != 1 || act.image_order() != 60 || !act.all_even()) {
    return fail({{"points", act.points}, {"kernel", act.kernel_size()}, {"image", act.image_order()}});
  }
  return pass();
}

Outcome check_simplicity(Tables& t, int n) {
  const bool expect = n >= 2;
  if (is_simple(t.get(n, GroupKind::kSL2)) != expect) return fail({{"simple", !expect}});
  return pass();
}

Outcome check_replay(int n) {
  const ReplayReport r = replay_cohopf_report(Level(n));
  for (const auto& c : r.cases) {
    for (const auto& s : c.steps) {
      if (!s.passed) return fail({{"phi", c.phi}, {"step", s.id}, {"witness", s.witness}});
    }
  }
  return pass();
}

struct Check {
  std::string name;
  // Levels to run at for a given max level.
  std::function<std::vector<int>(int)> levels;
  // Reason for skipping a level, or empty to run it.
  std::function<std::string(int)> skip;
  std::function<Outcome(Tables&, int)> run;
};

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

std::function<std::vector<int>(int)> single(std::function<int(int)> level) {
  return [level](int max) { return std::vector<int>{level(max)}; };
}

std::function<std::vector<int>(int)> from(int lo) {
  return [lo](int max) { return range(lo, max); };
}

std::function<std::vector<int>(int)> from_to(int lo, int hi) {
  return [lo, hi](int max) { return range(lo, std::min(max, hi)); };
}

std::string no_skip(int) { return {}; }

std::string cayley_skip(int n) {
  if (sl2_order(n) > GroupTable::kCayleyLimit) {
    return "group order " + std::to_string(sl2_order(n)) + " exceeds " + std::to_string(GroupTable::kCayleyLimit);
  }
  return {};
}

template <typename F>
std::function<Outcome(Tables&, int)> field(F f) {
  return [f](Tables&, int n) { return f(n); };
}

int field_bound(int max, int cap) { return std::min(4 * max, cap); }

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {"conway-table", single([](int) { return kMaxLevel; }), no_skip, field(check_conway)},
      {"subfield-embedding", single([](int max) { return std::min(2 * max + 2, 8); }), no_skip,
       field(check_embedding)},
      {"artin-schreier", single([](int max) { return std::min(2 * max + 2, 8); }), no_skip,
       field(check_artin_schreier)},
      {"frobenius-endos", single([](int max) { return field_bound(max, kMaxEndoLevel); }), no_skip,
       field(check_frobenius_endos)},
      {"root-permutation", single([](int max) { return field_bound(max, 12); }), no_skip,
       field(check_root_permutation)},
      {"max-order-permutation", single([](int max) { return field_bound(max, kMaxOrderScanLevel); }), no_skip,
       field(check_max_order_permutation)},
      {"conjugation-identities", single([](int max) { return std::min(2 * max, 6); }), no_skip,
       field(check_identities)},
      {"group-order", from(1), no_skip, check_group_order},
      {"order-dichotomy", from(1), no_skip, check_order_dichotomy},
      {"jordan-conjugacy", from_to(1, 3), no_skip, check_jordan},
      {"ut-lt-disjoint", from(1), no_skip, check_disjoint},
      {"diag-centralizer", from(2), no_skip, check_diag_centralizer},
      {"diag-normalizer", from(2), no_skip, check_diag_normalizer},
      {"unipotent-centralizer", from(2), no_skip, check_unipotent_centralizer},
      {"unipotent-normalizer", from(2), no_skip, check_unipotent_normalizer},
      {"generation", from(2), no_skip, check_generation},
      {"order3-product", single([](int) { return 2; }), no_skip, check_order3_product},
      {"ct-centralizers", from(2), no_skip, check_ct},
      {"ct-gl2-witness", single([](int) { return 2; }), no_skip, check_ct_gl2},
      {"ct-triples", from_to(1, 3), no_skip,
       [](Tables& t, int n) { return check_ct_triples(t, n, GroupKind::kSL2); }},
      {"ct-triples-gl2", from_to(1, 2), no_skip,
       [](Tables& t, int n) { return check_ct_triples(t, n, GroupKind::kGL2); }},
      {"maximal-abelian", from(1), cayley_skip,
       [](Tables& t, int n) { return check_maximal_abelian(t, n, GroupKind::kSL2); }},
      {"maximal-abelian-gl2", single([](int) { return 2; }), no_skip,
       [](Tables& t, int n) { return check_maximal_abelian(t, n, GroupKind::kGL2); }},
      {"a5-action", single([](int) { return 2; }), no_skip, check_a5},
      {"simplicity", from(1), cayley_skip, check_simplicity},
      {"cohopf-replay", [](int max) { return max >= 4 ? std::vector<int>{2, 4} : std::vector<int>{2}; }, no_skip,
       [](Tables&, int n) { return check_replay(n); }},
  };
  return all;
}

}  // namespace

std::vector<std::string> verify_check_names() {
  std::vector<std::string> out;
  for (const auto& c : checks()) out.push_back(c.name);
  return out;
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.max_level < kMinVerifyLevel || options.max_level > kMaxVerifyLevel) {
    throw Error(ErrorCode::kBoundExceeded, "max level " + std::to_string(options.max_level) + " outside [" +
                                               std::to_string(kMinVerifyLevel) + ", " +
                                               std::to_string(kMaxVerifyLevel) + "]");
  }
  VerifyReport report;
  report.max_level = options.max_level;
  Tables tables;
  for (const auto& check : checks()) {
    if (!options.filter.empty() && check.name.find(options.filter) == std::string::npos) continue;
    for (int n : check.levels(options.max_level)) {
      CheckResult r;
      r.name = check.name;
      r.level = n;
      if (std::string why = check.skip(n); !why.empty()) {
        r.status = CheckStatus::kSkipped;
        r.reason = std::move(why);
        report.checks.push_back(std::move(r));
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      try {
        Outcome o = check.run(tables, n);
        r.status = o.passed ? CheckStatus::kPass : CheckStatus::kFail;
        r.witness = std::move(o.witness);
      } catch (const Error& e) {
        r.status = CheckStatus::kFail;
        r.witness = ordered_json{{"error", e.what()}};
      }
      r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                     .count();
      report.checks.push_back(std::move(r));
    }
  }
  return report;
}

ordered_json to_json(const VerifyReport& report) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json j;
    j["name"] = c.name;
    j["level"] = c.level;
    j["status"] = to_string(c.status);
    if (c.witness) j["witness"] = *c.witness;
    if (!c.reason.empty()) j["reason"] = c.reason;
    j["millis"] = c.millis;
    checks.push_back(std::move(j));
  }
  ordered_json out;
  out["max_level"] = report.max_level;
  out["checks"] = std::move(checks);
  out["summary"] = {{"pass", report.count(CheckStatus::kPass)},
                    {"fail", report.count(CheckStatus::kFail)},
                    {"skipped", report.count(CheckStatus::kSkipped)}};
  if (const CheckResult* f = report.first_failure()) {
    out["summary"]["first_failure"] = {{"name", f->name}, {"level", f->level}};
  }
  return out;
}

}  // namespace sl2bar
