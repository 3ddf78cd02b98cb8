#include "sl2bar/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sl2bar/closure.hpp"
#include "sl2bar/conway.hpp"
#include "sl2bar/error.hpp"
#include "sl2bar/field.hpp"
#include "sl2bar/group.hpp"
#include "sl2bar/literal.hpp"
#include "sl2bar/mat2.hpp"
#include "sl2bar/numtheory.hpp"
#include "sl2bar/verify.hpp"

namespace sl2bar {

using nlohmann::ordered_json;

namespace {

ordered_json mat_json(const Mat2& m) {
  return ordered_json::array({to_string(m.a), to_string(m.b), to_string(m.c), to_string(m.d)});
}

// Writes either the JSON document or the text line.
struct Emitter {
  std::ostream& out;
  bool json;

  void emit(const ordered_json& doc, const std::string& text) const {
    if (json) {
      out << doc.dump(2) << '\n';
    } else {
      out << text << '\n';
    }
  }
};

Level matrix_level(const Mat2& m) {
  const int n = std::lcm(std::lcm(m.a.level().value(), m.b.level().value()),
                         std::lcm(m.c.level().value(), m.d.level().value()));
  return Level(n);
}

std::string centralizer_descriptor(const JordanClass& cls) {
  switch (cls.kind()) {
    case JordanClass::Kind::kIdentity: return "whole group";
    case JordanClass::Kind::kUnipotent: return "conjugate of the upper unitriangular subgroup";
    case JordanClass::Kind::kSplit: return "conjugate of the diagonal subgroup";
  }
  return {};
}

GroupKind parse_kind(const std::string& s) { return s == "gl2" ? GroupKind::kGL2 : GroupKind::kSL2; }

std::string group_name(const GroupTable& g) {
  return std::string(to_string(g.kind())) + "(2^" + std::to_string(g.level().value()) + ")";
}

Elt member(const GroupTable& g, const Mat2& m) {
  const auto x = g.find(m);
  if (!x) throw Error(ErrorCode::kPreconditionViolation, "matrix " + to_string(m) + " is not in " + group_name(g));
  return *x;
}

int cmd_field_eval(const Emitter& e, const std::vector<std::string>& expr) {
  if (expr.size() != 3) throw Error(ErrorCode::kParseError, "eval expects A OP B");
  const ClosureElt a = parse_closure_elt(expr[0]);
  const std::string& op = expr[1];
  const ClosureElt r = [&] {
    if (op == "^") {
      std::int64_t k = 0;
      const auto& t = expr[2];
      const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), k);
      if (ec != std::errc() || p != t.data() + t.size()) {
        throw Error(ErrorCode::kParseError, "bad exponent '" + t + "'");
      }
      return cpow(a, k);
    }
    const ClosureElt b = parse_closure_elt(expr[2]);
    if (op == "+" || op == "-") return a + b;
    if (op == "*") return a * b;
    if (op == "/") return a * cinv(b);
    throw Error(ErrorCode::kParseError, "unknown operator '" + op + "'");
  }();
  e.emit({{"result", to_string(r)}}, to_string(r));
  return kExitOk;
}

int cmd_field(const Emitter& e, const std::string& op, const std::vector<std::string>& args, int level) {
  if (op == "eval") return cmd_field_eval(e, args);
  if (op == "max-order-count") {
    const auto count = elements_of_max_order(Level(level)).size();
    e.emit({{"level", level}, {"count", count}}, std::to_string(count));
    return kExitOk;
  }
  if (args.size() != 1) throw Error(ErrorCode::kParseError, op + " expects one element");
  if (op == "as-solve") {
    const FieldElt c = parse_field_elt(args[0]);
    const auto z = artin_schreier_solve(c);
    const std::string text = z ? to_string(*z) : "none";
    e.emit({{"input", to_string(c)}, {"root", z ? ordered_json(text) : ordered_json(nullptr)}}, text);
    return kExitOk;
  }
  const ClosureElt a = parse_closure_elt(args[0]);
  if (op == "order") {
    const auto ord = corder(a);
    e.emit({{"input", to_string(a)}, {"order", ord}}, std::to_string(ord));
  } else if (op == "minpoly") {
    const std::string p = to_string(minimal_poly(a.repr()));
    e.emit({{"input", to_string(a)}, {"minpoly", p}}, p);
  } else if (op == "sqrt") {
    const std::string r = to_string(csqrt(a));
    e.emit({{"input", to_string(a)}, {"sqrt", r}}, r);
  }
  return kExitOk;
}

int cmd_mat(const Emitter& e, const std::string& op, const std::vector<std::string>& args) {
  const std::size_t want = op == "conjugate" ? 2 : 1;
  if (args.size() != want) throw Error(ErrorCode::kParseError, op + " expects " + std::to_string(want) + " matrix");
  const Mat2 m = parse_mat2(args[0]);
  if (op == "normalize") {
    const Mat2 r = normalize_to_sl2(m);
    e.emit({{"input", mat_json(m)}, {"normalized", mat_json(r)}}, to_string(r));
    return kExitOk;
  }
  require_sl2(m);
  if (op == "jordan") {
    const std::string cls = to_string(classify_jordan(m));
    e.emit({{"input", mat_json(m)}, {"class", cls}}, cls);
  } else if (op == "order") {
    const auto ord = morder(m);
    e.emit({{"input", mat_json(m)}, {"order", ord}}, std::to_string(ord));
  } else if (op == "centralizer") {
    const JordanClass cls = classify_jordan(m);
    const Level n = matrix_level(m);
    ordered_json doc{{"input", mat_json(m)}, {"class", to_string(cls)}, {"descriptor", centralizer_descriptor(cls)}};
    std::string text = to_string(cls) + ": " + centralizer_descriptor(cls);
    if (n.value() <= GroupTable::kMaxSl2Level) {
      const GroupTable g = GroupTable::enumerate(n, GroupKind::kSL2);
      const auto size = centralizer_bf(g, member(g, m)).size();
      doc["level"] = n.value();
      doc["order"] = size;
      text += "; order " + std::to_string(size) + " in " + group_name(g);
    }
    e.emit(doc, text);
  } else if (op == "conjugate") {
    const Mat2 other = parse_mat2(args[1]);
    require_sl2(other);
    const bool c = are_conjugate(m, other);
    e.emit({{"conjugate", c}}, c ? "true" : "false");
  }
  return kExitOk;
}

int cmd_group(const Emitter& e, const std::string& op, int level, const std::string& kind_name,
              const std::vector<std::string>& gens) {
  const GroupTable g = GroupTable::enumerate(Level(level), parse_kind(kind_name));
  ordered_json doc{{"group", to_string(g.kind())}, {"level", level}};
  if (op == "enum") {
    doc["order"] = g.size();
    e.emit(doc, "order " + std::to_string(g.size()));
  } else if (op == "ct") {
    const CtReport r = ct_check_centralizers(g);
    doc["holds"] = r.holds;
    std::string text = "CT: holds";
    if (r.witness) {
      const Mat2 x = g.to_mat(r.witness->x), y = g.to_mat(r.witness->y), z = g.to_mat(r.witness->z);
      doc["witness"] = {{"x", mat_json(x)}, {"y", mat_json(y)}, {"z", mat_json(z)}};
      text = "CT: fails x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z);
    }
    e.emit(doc, text);
  } else if (op == "simple") {
    const bool s = is_simple(g);
    doc["simple"] = s;
    e.emit(doc, std::string("simple: ") + (s ? "true" : "false"));
  } else if (op == "gen") {
    std::vector<Elt> ids;
    for (const auto& text : gens) ids.push_back(member(g, parse_mat2(text)));
    const Subgroup h = subgroup_generated(g, ids);
    doc["order"] = h.size();
    ordered_json members = ordered_json::array();
    for (Elt x : h.members()) members.push_back(mat_json(g.to_mat(x)));
    doc["indices"] = h.members();
    doc["members"] = std::move(members);
    e.emit(doc, "order " + std::to_string(h.size()));
  } else if (op == "a5") {
    const ProjectiveAction act = projective_action(g);
    doc["points"] = act.points;
    doc["kernel"] = act.kernel_size();
    doc["image_order"] = act.image_order();
    doc["all_even"] = act.all_even();
    e.emit(doc, "points " + std::to_string(act.points) + ", kernel " + std::to_string(act.kernel_size()) +
                    ", image order " + std::to_string(act.image_order()) +
                    ", all even: " + (act.all_even() ? "true" : "false"));
  }
  return kExitOk;
}

int cmd_verify(const Emitter& e, int max_level, const std::string& filter) {
  const VerifyReport report = run_verify({max_level, filter});
  if (e.json) {
    e.out << to_json(report).dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      e.out << to_string(c.status) << ' ' << c.name << " level " << c.level;
      if (c.status == CheckStatus::kSkipped) {
        e.out << " (" << c.reason << ')';
      } else {
        e.out << " (" << c.millis << " ms)";
      }
      if (c.status == CheckStatus::kFail && c.witness) e.out << " witness " << c.witness->dump();
      e.out << '\n';
    }
    e.out << report.count(CheckStatus::kPass) << " passed, " << report.count(CheckStatus::kFail) << " failed, "
          << report.count(CheckStatus::kSkipped) << " skipped\n";
    if (const CheckResult* f = report.first_failure()) {
      e.out << "first failure: " << f->name << " level " << f->level;
      if (f->witness) e.out << " witness " << f->witness->dump();
      e.out << '\n';
    }
  }
  return report.passed() ? kExitOk : kExitDomain;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite SL2 and GL2 over fields of characteristic 2", "sl2bar"};
  app.require_subcommand(1);

  bool json = false;
  std::string conway_file;
  // Global options are accepted before or after the subcommand.
  const auto add_globals = [&](CLI::App* a) {
    a->add_flag("--json", json, "Emit JSON");
    a->add_option("--conway-file", conway_file,
                  "Conway table file (overrides " + std::string(kConwayPathEnv) + ")");
  };
  add_globals(&app);

  std::string op;
  std::vector<std::string> positional;
  int level = 0;
  std::string kind = "sl2";
  int max_level = 3;
  std::string filter;

  auto* field = app.add_subcommand("field", "Field arithmetic");
  field->add_option("op", op, "eval | order | minpoly | sqrt | as-solve | max-order-count")
      ->required()
      ->check(CLI::IsMember({"eval", "order", "minpoly", "sqrt", "as-solve", "max-order-count"}));
  field->allow_extras()->footer("Arguments: element literals, or A OP B for eval");
  field->add_option("--level", level, "Level for max-order-count");

  auto* mat = app.add_subcommand("mat", "Matrix operations");
  mat->add_option("op", op, "jordan | order | centralizer | conjugate | normalize")
      ->required()
      ->check(CLI::IsMember({"jordan", "order", "centralizer", "conjugate", "normalize"}));
  mat->allow_extras()->footer("Arguments: matrix literals");

  auto* group = app.add_subcommand("group", "Whole-group computations");
  group->add_option("op", op, "enum | ct | simple | gen | a5")
      ->required()
      ->check(CLI::IsMember({"enum", "ct", "simple", "gen", "a5"}));
  group->allow_extras()->footer("Arguments: matrix literals for gen");
  group->add_option("--level", level, "Field level n")->required();
  group->add_option("--kind", kind, "sl2 | gl2")->check(CLI::IsMember({"sl2", "gl2"}));

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--max-level", max_level, "Largest group level to check")
      ->check(CLI::Range(kMinVerifyLevel, kMaxVerifyLevel));
  verify->add_option("--filter", filter, "Run checks whose name contains this text");

  for (auto* sub : {field, mat, group, verify}) add_globals(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  // Literals are taken verbatim; CLI11 would otherwise split bracketed values.
  for (auto* sub : {field, mat, group}) {
    if (sub->parsed()) positional = sub->remaining();
  }

  const Emitter emitter{out, json};
  try {
    std::string path = conway_file;
    if (path.empty()) {
      if (const char* env = std::getenv(kConwayPathEnv)) path = env;
    }
    if (!path.empty()) install_conway_table(ConwayTable::load(path));

    if (field->parsed()) {
      if (op == "max-order-count" && level == 0) throw Error(ErrorCode::kParseError, "max-order-count needs --level");
      return cmd_field(emitter, op, positional, level);
    }
    if (mat->parsed()) return cmd_mat(emitter, op, positional);
    if (group->parsed()) {
      if (op != "gen" && !positional.empty()) {
        throw Error(ErrorCode::kParseError, "unexpected argument '" + positional.front() + "'");
      }
      return cmd_group(emitter, op, level, kind, positional);
    }
    return cmd_verify(emitter, max_level, filter);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kParseError ? kExitUsage : kExitDomain;
  }
}

}  // namespace sl2bar
