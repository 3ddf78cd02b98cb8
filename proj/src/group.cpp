#include "sl2bar/group.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "field_context.hpp"
#include "sl2bar/error.hpp"

namespace sl2bar {
namespace {

constexpr Elt kAbsent = std::numeric_limits<Elt>::max();

using Masks = std::array<std::uint32_t, 4>;

void require_cayley_size(const GroupTable& group, const char* what) {
  if (group.size() > GroupTable::kCayleyLimit) {
    throw Error(ErrorCode::kBoundExceeded, std::string(what) + " needs |G| <= " +
                                               std::to_string(GroupTable::kCayleyLimit) + ", got " +
                                               std::to_string(group.size()));
  }
}

bool in_shape(const Masks& m, SubsetName which) {
  const auto [a, b, c, d] = m;
  switch (which) {
    case SubsetName::kDiag:
      return b == 0 && c == 0;
    case SubsetName::kOffDiag:
      return a == 0 && d == 0;
    case SubsetName::kUpperTri:
      return c == 0;
    case SubsetName::kUpperUni:
      return c == 0 && a == 1 && d == 1;
    case SubsetName::kLowerTri:
      return b == 0;
    case SubsetName::kLowerUni:
      return b == 0 && a == 1 && d == 1;
  }
  return false;
}

}  // namespace

std::string_view to_string(GroupKind kind) { return kind == GroupKind::kSL2 ? "SL2" : "GL2"; }

GroupTable GroupTable::enumerate(Level level, GroupKind kind) {
  const int n = level.value();
  const int bound = kind == GroupKind::kSL2 ? kMaxSl2Level : kMaxGl2Level;
  if (n > bound) {
    throw Error(ErrorCode::kBoundExceeded, std::string(to_string(kind)) + " enumeration supports level <= " +
                                               std::to_string(bound) + ", got " + std::to_string(n));
  }
  const auto& ctx = detail::context();
  GroupTable g(level, kind);
  const std::uint32_t field = 1U << n;
  const std::uint64_t total = std::uint64_t{1} << (4 * n);
  g.index_.assign(total, kAbsent);

  for (std::uint64_t t = 0; t < total; ++t) {
    const Masks m{static_cast<std::uint32_t>(t >> (3 * n)), static_cast<std::uint32_t>((t >> (2 * n)) & (field - 1)),
                  static_cast<std::uint32_t>((t >> n) & (field - 1)), static_cast<std::uint32_t>(t & (field - 1))};
    const std::uint32_t det = detail::mul_raw(ctx, n, m[0], m[3]) ^ detail::mul_raw(ctx, n, m[1], m[2]);
    const bool member = kind == GroupKind::kSL2 ? det == 1 : det != 0;
    if (member) g.entries_.push_back(m);
  }
  const auto id = std::find(g.entries_.begin(), g.entries_.end(), Masks{1, 0, 0, 1});
  std::rotate(g.entries_.begin(), id, id + 1);
  for (Elt i = 0; i < g.entries_.size(); ++i) g.index_[g.key(g.entries_[i])] = i;

  g.inverse_.resize(g.size());
  for (Elt i = 0; i < g.size(); ++i) {
    const auto [a, b, c, d] = g.entries_[i];
    Masks inv{d, b, c, a};
    if (kind == GroupKind::kGL2) {
      const std::uint32_t det = detail::mul_raw(ctx, n, a, d) ^ detail::mul_raw(ctx, n, b, c);
      const std::uint32_t s = detail::pow_raw(ctx, n, det, level.unit_count() - 1);
      for (auto& e : inv) e = detail::mul_raw(ctx, n, e, s);
    }
    g.inverse_[i] = g.index_[g.key(inv)];
  }

  if (g.size() <= kCayleyLimit) {
    const std::size_t s = g.size();
    g.cayley_.resize(s * s);
    for (Elt x = 0; x < s; ++x) {
      for (Elt y = 0; y < s; ++y) g.cayley_[x * s + y] = static_cast<std::uint16_t>(g.mul_slow(x, y));
    }
  }
  return g;
}

std::uint64_t GroupTable::key(const Masks& m) const {
  const int n = level_.value();
  return (std::uint64_t{m[0]} << (3 * n)) | (std::uint64_t{m[1]} << (2 * n)) | (std::uint64_t{m[2]} << n) | m[3];
}

Mat2 GroupTable::to_mat(Elt x) const {
  const auto& m = entries_[x];
  auto e = [&](int k) { return ClosureElt::from(FieldElt::make(level_, m[k])); };
  return Mat2{e(0), e(1), e(2), e(3)};
}

std::optional<Elt> GroupTable::find(const Masks& masks) const {
  for (std::uint32_t e : masks) {
    if (e >= level_.size()) return std::nullopt;
  }
  const Elt i = index_[key(masks)];
  if (i == kAbsent) return std::nullopt;
  return i;
}

std::optional<Elt> GroupTable::find(const Mat2& m) const {
  Masks masks{};
  const ClosureElt* entries[] = {&m.a, &m.b, &m.c, &m.d};
  for (int k = 0; k < 4; ++k) {
    if (level_.value() % entries[k]->level().value() != 0) return std::nullopt;
    masks[k] = entries[k]->at(level_).mask();
  }
  return find(masks);
}

Elt GroupTable::mul_slow(Elt x, Elt y) const {
  const auto& ctx = detail::context();
  const int n = level_.value();
  const auto& p = entries_[x];
  const auto& q = entries_[y];
  auto m = [&](std::uint32_t u, std::uint32_t v) { return detail::mul_raw(ctx, n, u, v); };
  const Masks r{m(p[0], q[0]) ^ m(p[1], q[2]), m(p[0], q[1]) ^ m(p[1], q[3]), m(p[2], q[0]) ^ m(p[3], q[2]),
                m(p[2], q[1]) ^ m(p[3], q[3])};
  return index_[key(r)];
}

Elt GroupTable::mul(Elt x, Elt y) const {
  if (!cayley_.empty()) return cayley_[x * entries_.size() + y];
  return mul_slow(x, y);
}

bool GroupTable::commute(Elt x, Elt y) const {
  if (!cayley_.empty()) return mul(x, y) == mul(y, x);
  const auto& ctx = detail::context();
  const int n = level_.value();
  const auto& p = entries_[x];
  const auto& q = entries_[y];
  auto m = [&](std::uint32_t u, std::uint32_t v) { return detail::mul_raw(ctx, n, u, v); };
  // XY = YX entrywise for X = [[a,b],[c,d]], Y = [[e,f],[g,h]].
  return m(p[1], q[2]) == m(q[1], p[2]) && (m(p[0], q[1]) ^ m(p[1], q[3])) == (m(q[0], p[1]) ^ m(q[1], p[3])) &&
         (m(p[2], q[0]) ^ m(p[3], q[2])) == (m(q[2], p[0]) ^ m(q[3], p[2]));
}

std::uint64_t GroupTable::order(Elt x) const {
  std::uint64_t k = 1;
  for (Elt cur = x; cur != identity(); cur = mul(cur, x)) ++k;
  return k;
}

Subgroup::Subgroup(const GroupTable& group, std::vector<Elt> members)
    : parent_(&group), members_(std::move(members)), bits_(group.size(), false) {
  for (Elt x : members_) bits_[x] = true;
}

Subgroup Subgroup::from_members(const GroupTable& group, std::vector<Elt> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup h(group, std::move(members));
  if (h.members_.empty() || !h.contains(GroupTable::identity())) {
    throw Error(ErrorCode::kPreconditionViolation, "subgroup must contain the identity");
  }
  for (Elt x : h.members_) {
    for (Elt y : h.members_) {
      if (!h.contains(group.mul(x, y))) {
        throw Error(ErrorCode::kPreconditionViolation, "member set is not closed under multiplication");
      }
    }
  }
  return h;
}

Subgroup Subgroup::whole(const GroupTable& group) {
  std::vector<Elt> all(group.size());
  for (Elt i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup(group, std::move(all));
}

Subgroup Subgroup::trivial(const GroupTable& group) { return Subgroup(group, {GroupTable::identity()}); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Elt x) { return other.contains(x); });
}

std::vector<Elt> subset_members(const GroupTable& group, SubsetName which) {
  std::vector<Elt> out;
  for (Elt i = 0; i < group.size(); ++i) {
    if (in_shape(group.entries(i), which)) out.push_back(i);
  }
  return out;
}

Subgroup named_subgroup(const GroupTable& group, SubsetName which) {
  if (which == SubsetName::kOffDiag) throw Error(ErrorCode::kPreconditionViolation, "OffDiag is not a subgroup");
  return Subgroup::from_members(group, subset_members(group, which));
}

std::vector<Elt> involutions(const GroupTable& group) {
  std::vector<Elt> out;
  for (Elt i = 1; i < group.size(); ++i) {
    if (group.mul(i, i) == GroupTable::identity()) out.push_back(i);
  }
  return out;
}

Subgroup centralizer_bf(const GroupTable& group, Elt g) {
  std::vector<Elt> out;
  for (Elt x = 0; x < group.size(); ++x) {
    if (group.commute(x, g)) out.push_back(x);
  }
  return Subgroup::from_members(group, std::move(out));
}

Subgroup normalizer_bf(const GroupTable& group, const Subgroup& h) {
  std::vector<Elt> out;
  for (Elt x = 0; x < group.size(); ++x) {
    const bool normalizes =
        std::all_of(h.members().begin(), h.members().end(), [&](Elt y) { return h.contains(group.conj(x, y)); });
    if (normalizes) out.push_back(x);
  }
  return Subgroup::from_members(group, std::move(out));
}

bool is_abelian(const Subgroup& h) {
  const auto& m = h.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!h.parent().commute(m[i], m[j])) return false;
    }
  }
  return true;
}

Subgroup derived_subgroup(const Subgroup& h) {
  const GroupTable& g = h.parent();
  std::vector<bool> seen(g.size(), false);
  std::vector<Elt> commutators;
  for (Elt x : h.members()) {
    for (Elt y : h.members()) {
      const Elt c = g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y)));
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  }
  return subgroup_generated(g, commutators);
}

bool is_metabelian(const Subgroup& h) { return is_abelian(derived_subgroup(h)); }

Subgroup subgroup_generated(const GroupTable& group, const std::vector<Elt>& gens) {
  std::vector<bool> in(group.size(), false);
  std::vector<Elt> members{GroupTable::identity()};
  in[GroupTable::identity()] = true;
  std::vector<Elt> used;
  for (Elt g : gens) {
    if (in[g]) continue;
    used.push_back(g);
    // Right-multiply everything found so far by every generator until no new element appears.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Elt s : used) {
        const Elt p = group.mul(members[i], s);
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(group, std::move(members));
}

bool is_ct_witness(const GroupTable& group, const CtWitness& w) {
  return w.y != GroupTable::identity() && group.commute(w.x, w.y) && group.commute(w.y, w.z) &&
         !group.commute(w.x, w.z);
}

CtReport ct_check_centralizers(const GroupTable& group) {
  const Elt size = static_cast<Elt>(group.size());
  std::vector<std::vector<Elt>> cent(size);
  for (Elt x = 0; x < size; ++x) {
    for (Elt y = x; y < size; ++y) {
      if (!group.commute(x, y)) continue;
      cent[x].push_back(y);
      if (y != x) cent[y].push_back(x);
    }
  }
  for (auto& c : cent) std::sort(c.begin(), c.end());
  // Least (x, y, z): y ranges over C(x) \ {1}, z over C(y).
  for (Elt x = 0; x < size; ++x) {
    for (Elt y : cent[x]) {
      if (y == GroupTable::identity()) continue;
      for (Elt z : cent[y]) {
        if (!group.commute(x, z)) return {false, CtWitness{x, y, z}};
      }
    }
  }
  return {true, std::nullopt};
}

CtReport ct_check_triples(const GroupTable& group) {
  if (group.size() > kTripleScanLimit) {
    throw Error(ErrorCode::kBoundExceeded, "triple scan needs |G| <= " + std::to_string(kTripleScanLimit) +
                                               ", got " + std::to_string(group.size()));
  }
  const Elt size = static_cast<Elt>(group.size());
  for (Elt x = 0; x < size; ++x) {
    for (Elt y = 1; y < size; ++y) {
      for (Elt z = 0; z < size; ++z) {
        const CtWitness w{x, y, z};
        if (is_ct_witness(group, w)) return {false, w};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

// Extends <seed> by every element, in index order, that commutes with all
// generators collected so far. Nothing outside the result centralizes it.
Subgroup greedy_abelian(const GroupTable& group, std::vector<Elt> gens) {
  Subgroup a = subgroup_generated(group, gens);
  for (Elt x = 0; x < group.size(); ++x) {
    if (a.contains(x)) continue;
    if (std::all_of(gens.begin(), gens.end(), [&](Elt g) { return group.commute(x, g); })) {
      gens.push_back(x);
      a = subgroup_generated(group, gens);
    }
  }
  return a;
}

}  // namespace

std::vector<Subgroup> maximal_abelian_subgroups(const GroupTable& group) {
  require_cayley_size(group, "maximal abelian subgroup search");
  std::set<std::vector<Elt>> found;
  for (Elt y = 1; y < group.size(); ++y) {
    const Subgroup a = greedy_abelian(group, {y});
    found.insert(a.members());
    // A non-abelian centralizer holds a second maximal abelian subgroup through y.
    const Subgroup c = centralizer_bf(group, y);
    const auto other = std::find_if(c.members().begin(), c.members().end(), [&](Elt w) { return !a.contains(w); });
    if (other != c.members().end()) found.insert(greedy_abelian(group, {y, *other}).members());
  }
  std::vector<Subgroup> out;
  for (const auto& m : found) {
    Subgroup a = Subgroup::from_members(group, m);
    if (!is_abelian(a)) throw Error(ErrorCode::kInvariantViolation, "greedy extension produced a non-abelian set");
    out.push_back(std::move(a));
  }
  return out;
}

bool maximal_abelian_intersections(const GroupTable& group) {
  const auto subs = maximal_abelian_subgroups(group);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      for (Elt x : subs[i].members()) {
        if (x != GroupTable::identity() && subs[j].contains(x)) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<Elt>> conjugacy_classes(const GroupTable& group) {
  std::vector<bool> done(group.size(), false);
  std::vector<std::vector<Elt>> out;
  for (Elt x = 0; x < group.size(); ++x) {
    if (done[x]) continue;
    std::vector<Elt> cls;
    for (Elt g = 0; g < group.size(); ++g) {
      const Elt c = group.conj(g, x);
      if (!done[c]) {
        done[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

bool is_simple(const GroupTable& group) {
  require_cayley_size(group, "simplicity test");
  if (group.size() == 1) return false;
  for (const auto& cls : conjugacy_classes(group)) {
    if (cls.front() == GroupTable::identity()) continue;
    if (subgroup_generated(group, cls).size() != group.size()) return false;
  }
  return true;
}

std::size_t ProjectiveAction::kernel_size() const {
  std::vector<int> id(points);
  for (int p = 0; p < points; ++p) id[p] = p;
  return static_cast<std::size_t>(std::count(images.begin(), images.end(), id));
}

std::size_t ProjectiveAction::image_order() const {
  return std::set<std::vector<int>>(images.begin(), images.end()).size();
}

bool ProjectiveAction::all_even() const {
  return std::all_of(images.begin(), images.end(), [](const auto& p) { return permutation_sign(p) == 1; });
}

int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

ProjectiveAction projective_action(const GroupTable& group) {
  if (group.kind() != GroupKind::kSL2) throw Error(ErrorCode::kPreconditionViolation, "projective action needs SL2");
  const int n = group.level().value();
  if (n > kMaxProjectiveLevel) {
    throw Error(ErrorCode::kBoundExceeded, "projective action supports level <= " +
                                               std::to_string(kMaxProjectiveLevel) + ", got " + std::to_string(n));
  }
  const Level lv = group.level();
  const int infinity = 1 << n;
  // Point of the line through (x, y), (x, y) != 0.
  auto point = [&](FieldElt x, FieldElt y) {
    if (y.is_zero()) return infinity;
    return static_cast<int>(mul(x, inv(y)).mask());
  };
  ProjectiveAction act;
  act.points = infinity + 1;
  act.images.resize(group.size());
  for (Elt i = 0; i < group.size(); ++i) {
    const auto& m = group.entries(i);
    const FieldElt a = FieldElt::make(lv, m[0]);
    const FieldElt b = FieldElt::make(lv, m[1]);
    const FieldElt c = FieldElt::make(lv, m[2]);
    const FieldElt d = FieldElt::make(lv, m[3]);
    auto& img = act.images[i];
    img.resize(act.points);
    for (int p = 0; p < infinity; ++p) {
      const FieldElt x = FieldElt::make(lv, static_cast<std::uint32_t>(p));
      img[p] = point(a * x + b, c * x + d);
    }
    img[infinity] = point(a, c);
  }
  return act;
}

std::pair<Elt, Elt> unipotent_as_order3_product(const GroupTable& group) {
  if (group.kind() != GroupKind::kSL2 || group.level().value() != 2) {
    throw Error(ErrorCode::kPreconditionViolation, "order-3 factorization is defined on SL2 at level 2");
  }
  const Elt u = *group.find(Masks{1, 1, 0, 1});
  for (Elt a = 1; a < group.size(); ++a) {
    if (group.order(a) != 3) continue;
    const Elt b = group.mul(group.inv(a), u);
    if (group.order(b) == 3) return {a, b};
  }
  throw Error(ErrorCode::kSearchFailed, "no pair of order-3 elements multiplies to [[1,1],[0,1]]");
}

bool semidirect_check(const GroupTable& group, const Subgroup& n, const Subgroup& h) {
  std::vector<Elt> gens = n.members();
  gens.insert(gens.end(), h.members().begin(), h.members().end());
  const Subgroup k = subgroup_generated(group, gens);
  for (Elt x : k.members()) {
    for (Elt y : n.members()) {
      if (!n.contains(group.conj(x, y))) return false;
    }
  }
  for (Elt x : h.members()) {
    if (x != GroupTable::identity() && n.contains(x)) return false;
  }
  std::set<Elt> products;
  for (Elt x : n.members()) {
    for (Elt y : h.members()) products.insert(group.mul(x, y));
  }
  return products.size() == k.size();
}

bool ut_lt_disjointness(const GroupTable& group) {
  const auto ut = subset_members(group, SubsetName::kUpperUni);
  const auto lt = subset_members(group, SubsetName::kLowerUni);
  std::vector<Elt> both;
  std::set_intersection(ut.begin(), ut.end(), lt.begin(), lt.end(), std::back_inserter(both));
  if (both != std::vector<Elt>{GroupTable::identity()}) return false;
  for (Elt u : ut) {
    for (Elt l : lt) {
      if (u != GroupTable::identity() && l != GroupTable::identity() && group.commute(u, l)) return false;
    }
  }
  return true;
}

}  // namespace sl2bar
