#include "sl2bar/endo.hpp"

#include <algorithm>
#include <string>

#include "sl2bar/error.hpp"
#include "sl2bar/literal.hpp"

namespace sl2bar {
namespace {

std::string level_text(int n) { return std::to_string(n); }

void require_even(Level n) {
  if (n.value() % 2 != 0) {
    throw Error(ErrorCode::kNoPrimitiveCubeRoot, "GF(2^" + level_text(n.value()) + ") has no primitive cube root of unity");
  }
}

// Canonical primitive cube root of unity visible at an even level.
ClosureElt cube_root(Level n) {
  require_even(n);
  const FieldElt t = pow(FieldElt::generator(n), n.unit_count() / 3);
  return std::min(ClosureElt::from(t), ClosureElt::from(t * t));
}

ClosureElt cl(std::uint32_t mask) { return ClosureElt::from(FieldElt::make(Level(1), mask)); }

Mat2 mat(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) { return {cl(a), cl(b), cl(c), cl(d)}; }

// Each word is a list of letter indices, applied first to last.
std::vector<std::vector<int>> replay_words(int letters) {
  std::vector<std::vector<int>> words;
  std::vector<std::vector<int>> prev{{}};
  for (int len = 1; len <= kReplayWordLength; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : prev) {
      for (int k = 0; k < letters; ++k) {
        auto v = w;
        v.push_back(k);
        next.push_back(std::move(v));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    prev = std::move(next);
  }
  return words;
}

GroupEndoSpec word_spec(const std::vector<GroupEndoSpec>& letters, const std::vector<int>& word) {
  if (word.size() == 1) return letters[word[0]];
  std::vector<GroupEndoSpec> parts;
  for (int k : word) parts.push_back(letters[k]);
  return GroupEndoSpec::compose(std::move(parts));
}

}  // namespace

FieldEndo::FieldEndo(Level level, int frob_power) : level_(level), frob_power_(frob_power) {
  if (frob_power < 0 || frob_power >= level.value()) {
    throw Error(ErrorCode::kPreconditionViolation, "Frobenius power " + std::to_string(frob_power) +
                                                       " outside [0, " + level_text(level.value()) + ")");
  }
}

FieldElt FieldEndo::apply(FieldElt a) const {
  if (a.level() != level_) {
    throw Error(ErrorCode::kLevelMismatch, "endomorphism of level " + level_text(level_.value()) +
                                               " applied to an element of level " + level_text(a.level().value()));
  }
  return frobenius_power(a, frob_power_);
}

ClosureElt FieldEndo::apply(const ClosureElt& a) const {
  if (level_.value() % a.level().value() != 0) {
    throw Error(ErrorCode::kLevelMismatch, "endomorphism of level " + level_text(level_.value()) +
                                               " cannot act on " + to_string(a));
  }
  return ClosureElt::from(apply(a.at(level_)));
}

std::string to_string(const FieldEndo& e) {
  return "frob^" + std::to_string(e.frob_power()) + "@" + level_text(e.level().value());
}

std::vector<FieldEndo> field_endos(Level level) {
  const int n = level.value();
  if (n > kMaxEndoLevel) {
    throw Error(ErrorCode::kBoundExceeded,
                "field endomorphism scan supports level <= " + level_text(kMaxEndoLevel) + ", got " + level_text(n));
  }
  const std::uint32_t size = static_cast<std::uint32_t>(level.size());
  std::vector<std::uint32_t> square(size);
  for (std::uint32_t x = 0; x < size; ++x) square[x] = frobenius(FieldElt::make(level, x)).mask();

  auto fail = [&](int j, const std::string& what) {
    throw Error(ErrorCode::kInvariantViolation, "frob^" + std::to_string(j) + "@" + level_text(n) + " " + what);
  };
  std::vector<FieldEndo> out;
  std::vector<std::uint32_t> map(size);
  for (std::uint32_t x = 0; x < size; ++x) map[x] = x;
  std::vector<bool> hit(size);
  for (int j = 0; j < n; ++j) {
    const FieldEndo e(level, j);
    if (map[0] != 0 || map[1] != 1) fail(j, "is not unital");
    // Additive iff the image of every x is the sum of the images of its bits.
    for (std::uint32_t x = 1; x < size; ++x) {
      const std::uint32_t low = x & (~x + 1);
      if (map[x] != (map[x ^ low] ^ map[low])) fail(j, "is not additive at " + std::to_string(x));
    }
    // Given additivity, multiplicativity on basis pairs covers all pairs.
    for (int i = 0; i < n; ++i) {
      for (int k = i; k < n; ++k) {
        const FieldElt p = FieldElt::make(level, 1U << i) * FieldElt::make(level, 1U << k);
        const FieldElt q = FieldElt::make(level, map[1U << i]) * FieldElt::make(level, map[1U << k]);
        if (map[p.mask()] != q.mask()) fail(j, "is not multiplicative");
      }
    }
    std::fill(hit.begin(), hit.end(), false);
    for (std::uint32_t x = 0; x < size; ++x) hit[map[x]] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) fail(j, "is not bijective");
    const FieldElt probe = FieldElt::make(level, size - 1);
    if (e.apply(probe).mask() != map[size - 1]) fail(j, "disagrees with its table");
    out.push_back(e);
    for (auto& v : map) v = square[v];
  }
  return out;
}

bool endo_permutes_roots(const FieldEndo& e, FieldElt a) {
  std::vector<std::uint32_t> orbit;
  std::vector<std::uint32_t> image;
  for (const FieldElt& r : frobenius_orbit(a)) {
    orbit.push_back(r.mask());
    image.push_back(e.apply(r).mask());
  }
  std::sort(orbit.begin(), orbit.end());
  std::sort(image.begin(), image.end());
  return orbit == image;
}

bool endo_permutes_max_order(const FieldEndo& e, Level n) {
  if (n.value() > kMaxOrderScanLevel) {
    throw Error(ErrorCode::kBoundExceeded, "maximal-order scan supports level <= " + level_text(kMaxOrderScanLevel) +
                                               ", got " + level_text(n.value()));
  }
  if (e.level() != n) {
    throw Error(ErrorCode::kLevelMismatch, to_string(e) + " does not act on level " + level_text(n.value()));
  }
  const auto elts = elements_of_max_order(n, kMaxOrderScanLevel);
  std::vector<std::uint32_t> image;
  for (const FieldElt& a : elts) image.push_back(e.apply(a).mask());
  std::sort(image.begin(), image.end());
  std::vector<std::uint32_t> orig;
  for (const FieldElt& a : elts) orig.push_back(a.mask());
  return image == orig;
}

GroupEndoSpec GroupEndoSpec::inner(const Mat2& by) {
  require_sl2(by);
  return {InnerConj{by}};
}

GroupEndoSpec GroupEndoSpec::compose(std::vector<GroupEndoSpec> parts) {
  if (parts.empty()) throw Error(ErrorCode::kPreconditionViolation, "empty composition");
  return {Compose{std::move(parts)}};
}

std::string to_string(const GroupEndoSpec& spec) {
  struct Visitor {
    std::string operator()(const GroupEndoSpec::Entrywise& e) const { return to_string(e.endo); }
    std::string operator()(const GroupEndoSpec::InnerConj& c) const { return "inner(" + to_string(c.by) + ")"; }
    std::string operator()(const GroupEndoSpec::InvTranspose&) const { return "invT"; }
    std::string operator()(const GroupEndoSpec::Compose& c) const {
      std::string out = "compose(";
      for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(c.parts[i]);
      }
      return out + ")";
    }
  };
  return std::visit(Visitor{}, spec.value);
}

Mat2 apply_group_endo(const GroupEndoSpec& spec, const Mat2& m) {
  struct Visitor {
    const Mat2& m;
    Mat2 operator()(const GroupEndoSpec::Entrywise& e) const {
      return {e.endo.apply(m.a), e.endo.apply(m.b), e.endo.apply(m.c), e.endo.apply(m.d)};
    }
    Mat2 operator()(const GroupEndoSpec::InnerConj& c) const { return conjugate(c.by, m); }
    Mat2 operator()(const GroupEndoSpec::InvTranspose&) const { return inv_transpose(m); }
    Mat2 operator()(const GroupEndoSpec::Compose& c) const {
      Mat2 cur = m;
      for (const auto& p : c.parts) cur = apply_group_endo(p, cur);
      return cur;
    }
  };
  require_sl2(m);
  return std::visit(Visitor{m}, spec.value);
}

std::vector<Elt> compile_group_endo(const GroupTable& group, const GroupEndoSpec& spec) {
  std::vector<Elt> out(group.size());
  for (Elt x = 0; x < group.size(); ++x) {
    const auto y = group.find(apply_group_endo(spec, group.to_mat(x)));
    if (!y) throw Error(ErrorCode::kInvariantViolation, to_string(spec) + " leaves the group");
    out[x] = *y;
  }
  return out;
}

std::vector<GroupEndoSpec> replay_letters(Level n) {
  const ClosureElt theta = cube_root(n);
  std::vector<GroupEndoSpec> letters;
  for (int j = 0; j < n.value(); ++j) letters.push_back(GroupEndoSpec::entrywise(FieldEndo(n, j)));
  letters.push_back(GroupEndoSpec::inv_transpose());
  letters.push_back(GroupEndoSpec::inner(Mat2::swap()));
  letters.push_back(GroupEndoSpec::inner(mat(1, 1, 0, 1)));
  letters.push_back(GroupEndoSpec::inner(mat(1, 0, 1, 1)));
  letters.push_back(GroupEndoSpec::inner(Mat2::diag(theta)));
  letters.push_back(GroupEndoSpec::inner(mat(0, 1, 1, 1)));
  return letters;
}

std::vector<GroupEndoSpec> replay_family(Level n) {
  const auto letters = replay_letters(n);
  std::vector<GroupEndoSpec> out;
  for (const auto& w : replay_words(static_cast<int>(letters.size()))) out.push_back(word_spec(letters, w));
  return out;
}

bool ReplayCase::passed() const {
  return std::all_of(steps.begin(), steps.end(), [](const ReplayStep& s) { return s.passed; });
}

bool ReplayReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const ReplayCase& c) { return c.passed(); });
}

void ReplayReport::throw_if_failed() const {
  for (const auto& c : cases) {
    for (const auto& s : c.steps) {
      if (!s.passed) {
        throw Error(ErrorCode::kStepFailed,
                    "phi = " + c.phi + ", step " + std::to_string(s.id) + (s.witness.empty() ? "" : ": " + s.witness));
      }
    }
  }
}

namespace {

class Replay {
 public:
  explicit Replay(Level n)
      : group_(GroupTable::enumerate(n, GroupKind::kSL2)), letters_(replay_letters(n)) {
    for (const auto& spec : letters_) {
      auto map = compile_group_endo(group_, spec);
      letter_ok_.push_back(is_automorphism(map));
      letter_maps_.push_back(std::move(map));
    }
    // Step 1 is shared by every case: least cube root in closure order.
    std::optional<ClosureElt> theta;
    for (std::uint32_t m = 1; m < n.size(); ++m) {
      const FieldElt t = FieldElt::make(n, m);
      if (elt_order(t) != 3) continue;
      const ClosureElt c = ClosureElt::from(t);
      if (!theta || c < *theta) theta = c;
    }
    theta_ = *theta;
    g_ = *group_.find(Mat2::diag(theta_));
    swap_ = *group_.find(Mat2::swap());
    diag_ = named_subgroup(group_, SubsetName::kDiag).members();
    lt_ = subset_members(group_, SubsetName::kLowerUni);
    l_ = subset_members(group_, SubsetName::kLowerTri);
    n_diag_ = normalizer_bf(group_, named_subgroup(group_, SubsetName::kDiag)).members();
    auto gens = n_diag_;
    gens.insert(gens.end(), l_.begin(), l_.end());
    generated_ = subgroup_generated(group_, gens).size() == group_.size();
  }

  const ClosureElt& theta() const { return theta_; }
  const std::vector<GroupEndoSpec>& letters() const { return letters_; }

  ReplayCase run(const std::vector<int>& word) const {
    ReplayCase out;
    out.phi = to_string(word_spec(letters_, word));
    std::vector<Elt> f(group_.size());
    for (Elt x = 0; x < group_.size(); ++x) {
      Elt y = x;
      for (int k : word) y = letter_maps_[k][y];
      f[x] = y;
    }
    auto step = [&](int id, bool ok, std::string witness) {
      out.steps.push_back({id, ok, std::move(witness)});
      return ok;
    };
    auto skip_rest = [&](int from) {
      for (int id = from; id <= 8; ++id) step(id, false, "not reached");
      return out;
    };

    step(1, elt_order(theta_.repr()) == 3, "theta = " + to_string(theta_));

    const Elt fg = f[g_];
    const bool conj_ok = group_.order(fg) == 3 && are_conjugate(group_.to_mat(fg), group_.to_mat(g_));
    if (!step(2, conj_ok, "phi(g) = " + mat_text(fg))) return skip_rest(3);

    std::optional<Elt> alpha;
    for (Elt a = 0; a < group_.size() && !alpha; ++a) {
      if (group_.conj(a, fg) == g_) alpha = a;
    }
    if (!step(3, alpha.has_value(), alpha ? "alpha = inner(" + mat_text(*alpha) + ")" : "no conjugator")) {
      return skip_rest(4);
    }
    auto psi = [&](Elt x) { return group_.conj(*alpha, f[x]); };

    std::vector<Elt> img;
    for (Elt d : diag_) img.push_back(psi(d));
    const auto bad_diag = std::find_if(img.begin(), img.end(), [&](Elt y) { return !in_shape(y, SubsetName::kDiag); });
    step(4, bad_diag == img.end() && distinct(img) && img.size() == diag_.size(),
         bad_diag == img.end() ? "" : "image " + mat_text(*bad_diag) + " is not diagonal");

    const Elt ps = psi(swap_);
    bool swap_hit = false;
    for (Elt x = 0; x < group_.size() && !swap_hit; ++x) swap_hit = psi(x) == swap_;
    step(5, in_shape(ps, SubsetName::kOffDiag) && swap_hit, "alpha phi(swap) = " + mat_text(ps));

    bool meets_lt = false;
    bool meets_ut = false;
    bool twist_ok = true;
    std::string stray;
    for (Elt m : lt_) {
      if (m == GroupTable::identity()) continue;
      const Elt y = psi(m);
      const bool in_lt = y != GroupTable::identity() && in_shape(y, SubsetName::kLowerUni);
      const bool in_ut = y != GroupTable::identity() && in_shape(y, SubsetName::kUpperUni);
      meets_lt = meets_lt || in_lt;
      meets_ut = meets_ut || in_ut;
      if (!in_lt && !in_ut && stray.empty()) stray = mat_text(y);
      try {
        if (!commute_after_diag_twist(group_.to_mat(y), theta_)) twist_ok = false;
      } catch (const Error&) {
        twist_ok = false;
      }
    }
    const bool use_invt = meets_ut;
    step(6, stray.empty() && twist_ok && meets_lt != meets_ut,
         !stray.empty() ? "image " + stray + " is in neither LT nor UT"
         : meets_lt && meets_ut ? "image meets both LT and UT"
                                : std::string("beta = ") + (use_invt ? "invT" : "identity"));
    auto chi = [&](Elt x) { return use_invt ? inv_t(psi(x)) : psi(x); };

    img.clear();
    for (Elt x : l_) img.push_back(chi(x));
    const auto bad_l = std::find_if(img.begin(), img.end(), [&](Elt y) { return !in_shape(y, SubsetName::kLowerTri); });
    step(7, bad_l == img.end() && distinct(img), bad_l == img.end() ? "" : "image " + mat_text(*bad_l) + " leaves L");

    img.clear();
    for (Elt x : n_diag_) img.push_back(chi(x));
    const bool keeps_n_diag =
        distinct(img) && std::all_of(img.begin(), img.end(), [&](Elt y) {
          return std::binary_search(n_diag_.begin(), n_diag_.end(), y);
        });
    const bool letters_ok = std::all_of(word.begin(), word.end(), [&](int k) { return letter_ok_[k]; });
    const bool phi_bijective = is_bijective(f);
    std::string why = "automorphism";
    if (!letters_ok) why = "a letter is not an automorphism";
    if (!keeps_n_diag) why = "N(diag) is not preserved";
    if (!generated_) why = "N(diag) and L do not generate";
    if (!phi_bijective) why = "phi is not bijective";
    step(8, letters_ok && keeps_n_diag && generated_ && phi_bijective, why);
    return out;
  }

 private:
  bool in_shape(Elt x, SubsetName s) const { return is_member(group_.to_mat(x), s); }

  std::string mat_text(Elt x) const { return to_string(group_.to_mat(x)); }

  Elt inv_t(Elt x) const {
    const auto [a, b, c, d] = group_.entries(x);
    return *group_.find(std::array<std::uint32_t, 4>{d, c, b, a});
  }

  static bool distinct(std::vector<Elt> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  }

  bool is_bijective(const std::vector<Elt>& map) const {
    std::vector<bool> hit(group_.size(), false);
    for (Elt y : map) hit[y] = true;
    return std::find(hit.begin(), hit.end(), false) == hit.end();
  }

  // Exhaustive homomorphism check plus bijectivity.
  bool is_automorphism(const std::vector<Elt>& map) const {
    for (Elt x = 0; x < group_.size(); ++x) {
      for (Elt y = 0; y < group_.size(); ++y) {
        if (map[group_.mul(x, y)] != group_.mul(map[x], map[y])) return false;
      }
    }
    return is_bijective(map);
  }

  GroupTable group_;
  std::vector<GroupEndoSpec> letters_;
  std::vector<std::vector<Elt>> letter_maps_;
  std::vector<bool> letter_ok_;
  ClosureElt theta_ = ClosureElt::one();
  Elt g_ = 0;
  Elt swap_ = 0;
  std::vector<Elt> diag_;
  std::vector<Elt> lt_;
  std::vector<Elt> l_;
  std::vector<Elt> n_diag_;
  bool generated_ = false;
};

}  // namespace

ReplayReport replay_cohopf_report(Level n) {
  require_even(n);
  if (n.value() > kMaxReplayLevel) {
    throw Error(ErrorCode::kBoundExceeded,
                "replay supports level <= " + level_text(kMaxReplayLevel) + ", got " + level_text(n.value()));
  }
  const Replay replay(n);
  ReplayReport report;
  report.level = n.value();
  report.theta = to_string(replay.theta());
  for (const auto& w : replay_words(static_cast<int>(replay.letters().size()))) report.cases.push_back(replay.run(w));
  return report;
}

ReplayReport replay_cohopf_skeleton(Level n) {
  ReplayReport report = replay_cohopf_report(n);
  report.throw_if_failed();
  return report;
}

}  // namespace sl2bar
