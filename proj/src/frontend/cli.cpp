#include "fpred/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "fpred/frontend.hpp"
#include "fpred/hereditary.hpp"
#include "fpred/measure.hpp"
#include "fpred/reduction.hpp"
#include "fpred/sexp.hpp"
#include "fpred/testkit/enumerate.hpp"
#include "fpred/testkit/suites.hpp"
#include "fpred/typecheck.hpp"

namespace fpred {

namespace {

using frontend::Program;
using frontend::Scope;
using json = nlohmann::ordered_json;

enum class Format { Text, Sexp, Json };

// Thrown to unwind a command with an exit code after the diagnostic has been
// written.
struct Exit {
  int code;
};

class Session {
 public:
  Session(std::istream& in, std::ostream& out, std::ostream& err)
      : in_(in), out_(out), err_(err) {}

  Format format = Format::Text;

  std::ostream& out() { return out_; }

  [[noreturn]] void die(int code, const std::string& message) {
    err_ << "fpred: " << message << "\n";
    if (format == Format::Json) out_ << json{{"ok", false}}.dump() << "\n";
    throw Exit{code};
  }

  std::pair<std::string, std::string> read(const std::string& path) {
    if (path == "-") {
      std::ostringstream s;
      s << in_.rdbuf();
      return {"<stdin>", s.str()};
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) die(kExitParseError, "cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return {path, s.str()};
  }

  [[noreturn]] void parse_failure(const std::string& label, const frontend::ParseError& e) {
    die(kExitParseError, label + ":" + std::to_string(e.span.start.line) + ":" +
                             std::to_string(e.span.start.column) + ": parse error: " + e.message);
  }

  Program program(const std::string& path, const Env& env = {}, const Scope& scope = {}) {
    const auto [label, text] = read(path);
    auto p = frontend::parse_program(text, env, scope);
    if (!p) parse_failure(label, p.error());
    last_label = label;
    return std::move(p).value();
  }

  Program program_with_term(const std::string& path, const Env& env = {},
                            const Scope& scope = {}) {
    Program p = program(path, env, scope);
    if (!p.term) die(kExitParseError, last_label + ": expected a term after the declarations");
    return p;
  }

  Typ type_arg(const std::string& text, const Scope& scope = {}) {
    auto t = frontend::parse_type(text, scope);
    if (!t) parse_failure("<argument>", t.error());
    return t.value();
  }

  Typ typecheck(const Program& p) {
    auto r = infer_type(p.env, *p.term);
    if (!r) {
      const TypeError& e = r.error();
      const frontend::SourceSpan& span = p.spans.at(e.location);
      die(kExitTypeError, last_label + ":" + std::to_string(span.start.line) + ":" +
                              std::to_string(span.start.column) + ": type error: " +
                              to_string(e.kind) + ": " + e.detail);
    }
    return r.value();
  }

  void term_line(const Term& t, const Scope& scope) {
    out_ << (format == Format::Sexp ? to_sexp(t) : frontend::print_term(t, scope)) << "\n";
  }

  std::string last_label = "<input>";

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

json kinds_json(const KindBag& bag) {
  json out = json::array();
  for (const auto& [k, m] : bag.entries()) out.push_back({k, m});
  return out;
}

void check_fuel(Session& s, const Term& t, std::size_t fuel) {
  if (!normalize_fuel(t, fuel)) {
    s.die(kExitFuel, "reduction oracle ran out of fuel after " + std::to_string(fuel) + " steps");
  }
}

struct Options {
  std::string file;
  std::string type_expr;
  bool sexp = false;
  bool as_json = false;
  bool trace = false;
  bool checked = false;
  std::size_t fuel = kDefaultFuel;
  std::string var_type, target, subst, env_file, goal;
  Index index = 0;
  std::size_t max_size = 0;
  std::size_t type_nodes = testkit::EnumBounds{}.max_type_nodes;
  Kind max_kind = testkit::EnumBounds{}.max_kind;
  std::uint64_t seed = 1;
  std::size_t cases = testkit::SelftestOptions{}.cases;
};

void add_format(CLI::App* cmd, Options& o, bool with_json = true) {
  auto* sexp = cmd->add_flag("--sexp", o.sexp, "Print s-expressions");
  if (with_json) cmd->add_flag("--json", o.as_json, "Print JSON")->excludes(sexp);
}

void cmd_check(Session& s, const Options& o) {
  const Program p = s.program_with_term(o.file);
  const Typ t = s.typecheck(p);
  if (s.format == Format::Json) {
    s.out() << json{{"ok", true}, {"type", to_sexp(t)}}.dump() << "\n";
  } else {
    s.out() << (s.format == Format::Sexp ? to_sexp(t) : frontend::print_type(t, p.scope)) << "\n";
  }
}

void cmd_kind(Session& s, const Options& o) {
  const Typ t = s.type_arg(o.type_expr);
  const auto k = infer_kind(Env(), t);
  if (!k) s.die(kExitTypeError, "type is not kindable");
  s.out() << *k << "\n";
}

void cmd_normalize(Session& s, const Options& o) {
  const Program p = s.program_with_term(o.file);
  const Typ type = s.typecheck(p);
  const Term& t = *p.term;

  std::optional<ReductionTrace> trace;
  if (o.trace) {
    auto r = normalize_traced(t, o.fuel);
    if (!r) s.die(kExitFuel, "reduction oracle ran out of fuel after " + std::to_string(o.fuel) + " steps");
    trace = std::move(r).value();
  }

  Term nf = t;
  if (o.checked) {
    check_fuel(s, t, o.fuel);
    CheckOptions options;
    options.fuel = o.fuel;
    auto r = normalize_checked(p.env, type, t, options);
    if (!r) {
      s.die(kExitInvariant, std::string("check failed: ") + to_string(r.error().kind) + ": " +
                                r.error().detail);
    }
    nf = r.value();
  } else {
    try {
      nf = normalize(t, hsubst_guarded);
    } catch (const InternalInvariantViolation& e) {
      s.die(kExitInvariant, e.what());
    }
  }

  if (s.format == Format::Json) {
    json j{{"ok", true}, {"type", to_sexp(type)}, {"normal_form", to_sexp(nf)}};
    if (trace) j["steps"] = trace->steps.size();
    s.out() << j.dump() << "\n";
    return;
  }
  s.term_line(nf, p.scope);
  if (trace) s.out() << format_trace(*trace);
}

void cmd_hsubst(Session& s, const Options& o) {
  Program ctx;
  if (!o.env_file.empty()) {
    ctx = s.program(o.env_file);
    if (ctx.term) s.die(kExitParseError, s.last_label + ": context file must only declare");
  }
  const Program target = s.program_with_term(o.target, ctx.env, ctx.scope);
  const Env& env = target.env;
  const Scope outer_scope = frontend::remove_term_name(target.scope, o.index);
  const Program sub = s.program_with_term(o.subst, remove_var(env, o.index), outer_scope);
  const HsubstInput in{s.type_arg(o.var_type, target.scope), *target.term, *sub.term, o.index};

  std::optional<Typ> goal;
  Term result = in.target;
  std::vector<HsubstCall> calls;
  if (o.checked) {
    if (!o.goal.empty()) {
      goal = s.type_arg(o.goal, target.scope);
    } else {
      s.last_label = o.target;
      goal = s.typecheck(target);
    }
    if (!precondition_holds(env, *goal, in)) s.die(kExitTypeError, "precondition violated");
    check_fuel(s, subst(in.target, in.index, in.substituend), o.fuel);
    CheckOptions options;
    options.fuel = o.fuel;
    auto r = hsubst_checked(env, *goal, in, options);
    if (!r) {
      const int code = r.error().kind == CheckErrorKind::PreViolated ? kExitTypeError
                                                                     : kExitInvariant;
      s.die(code, std::string("check failed: ") + to_string(r.error().kind) + ": " +
                      r.error().detail);
    }
    result = r.value();
  } else {
    try {
      result = hsubst_guarded(in);
    } catch (const InternalInvariantViolation& e) {
      s.die(kExitInvariant, e.what());
    }
  }
  if (o.trace) calls = hsubst_traced(in).calls;

  if (s.format == Format::Json) {
    json j{{"ok", true}};
    if (goal) j["type"] = to_sexp(*goal);
    j["normal_form"] = to_sexp(result);
    s.out() << j.dump() << "\n";
    return;
  }
  s.term_line(result, outer_scope);
  if (o.trace) s.out() << format_calls(calls);
}

void cmd_measure(Session& s, const Options& o) {
  const Typ t = s.type_arg(o.type_expr);
  const KindBag bag = kinds_of(t);
  if (s.format == Format::Json) {
    s.out() << json{{"ok", true}, {"measure", {{"kinds", kinds_json(bag)}, {"depth", depth(t)}}}}
                   .dump()
            << "\n";
    return;
  }
  s.out() << "kinds " << bag.to_string() << "\n"
          << "depth " << depth(t) << "\n";
}

void cmd_enumerate(Session& s, const Options& o) {
  Program ctx;
  if (!o.env_file.empty()) {
    ctx = s.program(o.env_file);
    if (ctx.term) s.die(kExitParseError, s.last_label + ": context file must only declare");
  }
  const Typ goal = s.type_arg(o.goal, ctx.scope);
  const testkit::EnumBounds bounds{o.type_nodes, o.max_kind};
  for (const Term& t : testkit::enumerate_terms(ctx.env, goal, o.max_size, bounds)) {
    s.term_line(t, ctx.scope);
  }
}

int cmd_selftest(Session& s, const Options& o) {
  const auto results = testkit::run_selftest({o.seed, o.cases});
  s.out() << "1.." << results.size() << "\n";
  bool all = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    all = all && r.ok();
    s.out() << (r.ok() ? "ok " : "not ok ") << i + 1 << " - " << r.name << " (" << r.instances
            << " instances)\n";
    if (!r.counterexample.empty()) s.out() << "# counterexample: " << r.counterexample << "\n";
  }
  return all ? kExitOk : kExitInvariant;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Predicative System F: type checker and hereditary normalizer", "fpred"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Type-check a file");
  check->add_option("FILE", o.file, "Input file, or - for stdin")->required();
  add_format(check, o);

  auto* kind = app.add_subcommand("kind", "Print the minimal kind of a closed type");
  kind->add_option("TYPE", o.type_expr)->required();

  auto* norm = app.add_subcommand("normalize", "Normalize a well-typed term");
  norm->add_option("FILE", o.file, "Input file, or - for stdin")->required();
  norm->add_flag("--trace", o.trace, "Also print the reduction oracle's trace");
  norm->add_option("--fuel", o.fuel, "Step limit for the reduction oracle");
  norm->add_flag("--checked", o.checked, "Verify pre- and postconditions");
  add_format(norm, o);

  auto* hs = app.add_subcommand("hsubst", "Hereditary substitution");
  hs->add_option("--var-type", o.var_type, "Type of the substituted variable")->required();
  hs->add_option("--target", o.target, "Term to substitute into")->required();
  hs->add_option("--subst", o.subst, "Term to substitute")->required();
  hs->add_option("--index", o.index, "Index of the substituted variable")->required();
  hs->add_flag("--checked", o.checked, "Verify pre- and postconditions");
  hs->add_option("--env", o.env_file, "File of context declarations");
  hs->add_option("--goal", o.goal, "Type of the target");
  hs->add_option("--fuel", o.fuel, "Step limit for the reduction oracle");
  hs->add_flag("--trace", o.trace, "Also print the measure at every call");
  add_format(hs, o);

  auto* meas = app.add_subcommand("measure", "Print kinds_of and depth of a closed type");
  meas->add_option("TYPE", o.type_expr)->required();
  meas->add_flag("--json", o.as_json, "Print JSON");

  auto* en = app.add_subcommand("enumerate", "List inhabitants up to a size");
  en->add_option("--goal", o.goal, "Type to inhabit")->required();
  en->add_option("--max-size", o.max_size, "Largest term_size")->required();
  en->add_option("--env", o.env_file, "File of context declarations");
  en->add_option("--type-nodes", o.type_nodes, "Largest annotation type, in nodes");
  en->add_option("--max-kind", o.max_kind, "Largest quantifier bound in annotations");
  add_format(en, o, false);

  auto* self = app.add_subcommand("selftest", "Run the property suites");
  self->add_option("--seed", o.seed);
  self->add_option("--cases", o.cases, "Instances per generated suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  Session s(in, out, err);
  s.format = o.as_json ? Format::Json : o.sexp ? Format::Sexp : Format::Text;
  try {
    if (*check) cmd_check(s, o);
    if (*kind) cmd_kind(s, o);
    if (*norm) cmd_normalize(s, o);
    if (*hs) cmd_hsubst(s, o);
    if (*meas) cmd_measure(s, o);
    if (*en) cmd_enumerate(s, o);
    if (*self) return cmd_selftest(s, o);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitOk;
}

}  // namespace fpred
