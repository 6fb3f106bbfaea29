#include "fpred/testkit/generate.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "fpred/measure.hpp"
#include "fpred/reduction.hpp"
#include "fpred/typecheck.hpp"

namespace fpred::testkit {

namespace {

// A well-formed type with at most m nodes exists in scope s iff s > 0 or m >= 2.
bool wf_feasible(std::size_t m, Index scope) { return m >= 2 || (m >= 1 && scope > 0); }

Kind draw_kind(Rng& rng, Kind max_kind) { return static_cast<Kind>(rng.below(max_kind + 1)); }

}  // namespace

Typ gen_raw_type(Rng& rng, std::size_t max_nodes, Index scope, Kind max_kind) {
  if (max_nodes <= 1 || rng.chance(1, 3)) {
    return Typ::tvar(static_cast<Index>(rng.below(scope + 1)));
  }
  if (max_nodes >= 3 && rng.chance(1, 2)) {
    const std::size_t left = rng.between(1, max_nodes - 2);
    Typ dom = gen_raw_type(rng, left, scope, max_kind);
    Typ cod = gen_raw_type(rng, max_nodes - 1 - left, scope, max_kind);
    return Typ::arrow(std::move(dom), std::move(cod));
  }
  const Kind k = draw_kind(rng, max_kind);
  return Typ::all(k, gen_raw_type(rng, max_nodes - 1, scope + 1, max_kind));
}

Term gen_raw_term(Rng& rng, std::size_t max_nodes, Index term_scope, Index type_scope,
                  Kind max_kind) {
  if (max_nodes <= 1 || rng.chance(1, 4)) {
    return Term::var(static_cast<Index>(rng.below(term_scope + 1)));
  }
  switch (rng.below(4)) {
    case 0:
      if (max_nodes >= 3) {
        const std::size_t ty = rng.between(1, max_nodes - 2);
        Typ annot = gen_raw_type(rng, ty, type_scope, max_kind);
        return Term::abs(std::move(annot), gen_raw_term(rng, max_nodes - 1 - ty, term_scope + 1,
                                                        type_scope, max_kind));
      }
      break;
    case 1:
      if (max_nodes >= 3) {
        const std::size_t left = rng.between(1, max_nodes - 2);
        Term fn = gen_raw_term(rng, left, term_scope, type_scope, max_kind);
        Term arg = gen_raw_term(rng, max_nodes - 1 - left, term_scope, type_scope, max_kind);
        return Term::app(std::move(fn), std::move(arg));
      }
      break;
    case 2:
      if (max_nodes >= 3) {
        const std::size_t ty = rng.between(1, max_nodes - 2);
        Typ arg = gen_raw_type(rng, ty, type_scope, max_kind);
        return Term::tapp(gen_raw_term(rng, max_nodes - 1 - ty, term_scope, type_scope, max_kind),
                          std::move(arg));
      }
      break;
    default:
      break;
  }
  const Kind k = draw_kind(rng, max_kind);
  return Term::tabs(k, gen_raw_term(rng, max_nodes - 1, term_scope, type_scope + 1, max_kind));
}

Typ gen_wf_type(Rng& rng, std::size_t max_nodes, Index type_scope, Kind max_kind) {
  if (!wf_feasible(max_nodes, type_scope)) max_nodes = 2;
  const bool can_var = type_scope > 0;
  const bool can_all = max_nodes >= 2;
  const bool can_arrow =
      max_nodes >= 3 && (type_scope > 0 ? true : max_nodes >= 5);  // both sides need 2 nodes at scope 0
  std::vector<int> options;
  if (can_var) options.insert(options.end(), {0, 0});
  if (can_arrow) options.insert(options.end(), {1, 1});
  if (can_all) options.push_back(2);
  switch (options[rng.below(options.size())]) {
    case 0:
      return Typ::tvar(static_cast<Index>(rng.below(type_scope)));
    case 1: {
      const std::size_t min_side = type_scope > 0 ? 1 : 2;
      const std::size_t left = rng.between(min_side, max_nodes - 1 - min_side);
      Typ dom = gen_wf_type(rng, left, type_scope, max_kind);
      Typ cod = gen_wf_type(rng, max_nodes - 1 - left, type_scope, max_kind);
      return Typ::arrow(std::move(dom), std::move(cod));
    }
    default: {
      const Kind k = draw_kind(rng, max_kind);
      return Typ::all(k, gen_wf_type(rng, max_nodes - 1, type_scope + 1, max_kind));
    }
  }
}

Env gen_env(Rng& rng, std::size_t length, Kind max_kind) {
  Env env;
  for (std::size_t i = 0; i < length; ++i) {
    if (rng.chance(1, 2)) {
      const auto scope = static_cast<Index>(env.type_bindings());
      env = env.with_var(gen_wf_type(rng, rng.between(1, 4), scope, max_kind));
    } else {
      env = env.with_tvar(draw_kind(rng, max_kind));
    }
  }
  return env;
}

namespace {

// Budgets count term constructors, variables included; embedded types are
// drawn separately and do not count.
class TypedGen {
 public:
  TypedGen(Rng& rng, const GenConfig& config) : rng_(rng), config_(config) {}

  // Term variable to favour, counted from the outermost binding so that it
  // stays the same variable under binders.
  std::optional<std::size_t> preferred_level;

  std::optional<TypedTerm> synth(const Env& env, std::size_t budget) {
    if (budget == 0 || !spend()) return std::nullopt;
    enum Choice { kVar, kAbs, kTAbs, kBeta, kApp, kTApp, kTBeta };
    std::vector<Choice> pool;
    if (env.term_bindings() > 0) pool.insert(pool.end(), budget <= 2 ? 4 : 1, kVar);
    if (budget >= 2) pool.insert(pool.end(), {kAbs, kAbs, kTAbs, kTApp, kTApp});
    if (budget >= 3) pool.insert(pool.end(), {kApp, kApp, kApp, kTBeta});
    if (budget >= 4) pool.insert(pool.end(), {kBeta, kBeta});
    while (!pool.empty()) {
      const std::size_t pick = rng_.below(pool.size());
      const Choice choice = pool[pick];
      std::erase(pool, choice);
      std::optional<TypedTerm> out;
      switch (choice) {
        case kVar:
          out = pick_var(env);
          break;
        case kAbs:
          out = synth_abs(env, budget);
          break;
        case kTAbs:
          out = synth_tabs(env, budget);
          break;
        case kBeta:
          out = synth_beta(env, budget);
          break;
        case kApp:
          out = synth_app(env, budget);
          break;
        case kTApp:
          out = synth_tapp(env, budget);
          break;
        case kTBeta:
          out = synth_tbeta(env, budget);
          break;
      }
      if (out) return out;
    }
    return std::nullopt;
  }

  std::optional<Term> check(const Env& env, const Typ& goal, std::size_t budget) {
    if (budget == 0 || !spend()) return std::nullopt;
    enum Choice { kIntro, kVar, kSpine, kBeta, kTBeta };
    std::vector<Choice> pool = {kVar, kVar, kSpine, kSpine};
    if (budget >= 2 && (goal.is_arrow() || goal.is_all())) pool.insert(pool.end(), 4, kIntro);
    if (budget >= 3) pool.push_back(kTBeta);
    if (budget >= 4) pool.push_back(kBeta);
    while (!pool.empty()) {
      const std::size_t pick = rng_.below(pool.size());
      const Choice choice = pool[pick];
      std::erase(pool, choice);
      std::optional<Term> out;
      switch (choice) {
        case kIntro:
          out = check_intro(env, goal, budget);
          break;
        case kVar:
          out = var_of_type(env, goal);
          break;
        case kSpine:
          out = check_spine(env, goal, budget);
          break;
        case kBeta:
          out = check_beta(env, goal, budget);
          break;
        case kTBeta:
          out = check_tbeta(env, goal, budget);
          break;
      }
      if (out) return out;
    }
    return std::nullopt;
  }

  Typ random_type(const Env& env) {
    return gen_wf_type(rng_, rng_.between(1, config_.max_type_nodes),
                       static_cast<Index>(env.type_bindings()), config_.max_kind);
  }

  // A type of kind at most `bound`, if one is found quickly.
  std::optional<Typ> random_type_below(const Env& env, Kind bound) {
    for (int attempt = 0; attempt < 16; ++attempt) {
      Typ t = random_type(env);
      const auto k = infer_kind(env, t);
      if (k && *k <= bound) return t;
    }
    for (Index i = 0; i < env.type_bindings(); ++i) {
      const auto k = get_kind(env, i);
      if (k && *k <= bound) return Typ::tvar(i);
    }
    if (bound >= 1) return Typ::all(0, Typ::tvar(0));
    return std::nullopt;
  }

  Kind random_kind() { return draw_kind(rng_, config_.max_kind); }

 private:
  bool spend() {
    if (effort_ == 0) return false;
    --effort_;
    return true;
  }

  std::optional<Index> preferred_index(const Env& env) const {
    if (!preferred_level || *preferred_level >= env.term_bindings()) return std::nullopt;
    return static_cast<Index>(env.term_bindings() - 1 - *preferred_level);
  }

  std::optional<TypedTerm> pick_var(const Env& env) {
    const std::size_t n = env.term_bindings();
    if (n == 0) return std::nullopt;
    Index x = static_cast<Index>(rng_.below(n));
    if (auto p = preferred_index(env); p && rng_.chance(1, 2)) x = *p;
    return TypedTerm{Term::var(x), *get_var(env, x)};
  }

  std::optional<Term> var_of_type(const Env& env, const Typ& goal) {
    std::vector<Index> hits;
    for (Index x = 0; x < env.term_bindings(); ++x) {
      if (*get_var(env, x) == goal) hits.push_back(x);
    }
    if (hits.empty()) return std::nullopt;
    return Term::var(hits[rng_.below(hits.size())]);
  }

  std::optional<TypedTerm> synth_abs(const Env& env, std::size_t budget) {
    Typ annot = random_type(env);
    auto body = synth(env.with_var(annot), budget - 1);
    if (!body) return std::nullopt;
    return TypedTerm{Term::abs(annot, body->term), Typ::arrow(annot, body->type)};
  }

  std::optional<TypedTerm> synth_tabs(const Env& env, std::size_t budget) {
    const Kind k = random_kind();
    auto body = synth(env.with_tvar(k), budget - 1);
    if (!body) return std::nullopt;
    return TypedTerm{Term::tabs(k, body->term), Typ::all(k, body->type)};
  }

  // (\x:A. body) arg
  std::optional<TypedTerm> synth_beta(const Env& env, std::size_t budget) {
    const std::size_t arg_budget = rng_.between(1, budget - 3);
    auto arg = synth(env, arg_budget);
    if (!arg) return std::nullopt;
    auto body = synth(env.with_var(arg->type), budget - 2 - arg_budget);
    if (!body) return std::nullopt;
    return TypedTerm{Term::app(Term::abs(arg->type, body->term), arg->term), body->type};
  }

  std::optional<TypedTerm> synth_app(const Env& env, std::size_t budget) {
    const std::size_t fn_budget = rng_.between(1, budget - 2);
    auto fn = synth(env, fn_budget);
    if (!fn || !fn->type.is_arrow()) return std::nullopt;
    auto arg = check(env, fn->type.dom(), budget - 1 - fn_budget);
    if (!arg) return std::nullopt;
    return TypedTerm{Term::app(fn->term, *arg), fn->type.cod()};
  }

  std::optional<TypedTerm> synth_tapp(const Env& env, std::size_t budget) {
    auto fn = synth(env, budget - 1);
    if (!fn || !fn->type.is_all()) return std::nullopt;
    auto arg = random_type_below(env, fn->type.bound());
    if (!arg) return std::nullopt;
    return TypedTerm{Term::tapp(fn->term, *arg), tsubst(fn->type.body(), 0, *arg)};
  }

  // (/\X:k. body) [T]
  std::optional<TypedTerm> synth_tbeta(const Env& env, std::size_t budget) {
    const Kind k = random_kind();
    auto body = synth(env.with_tvar(k), budget - 2);
    if (!body) return std::nullopt;
    auto arg = random_type_below(env, k);
    if (!arg) return std::nullopt;
    return TypedTerm{Term::tapp(Term::tabs(k, body->term), *arg),
                     tsubst(body->type, 0, *arg)};
  }

  std::optional<Term> check_intro(const Env& env, const Typ& goal, std::size_t budget) {
    if (goal.is_arrow()) {
      auto body = check(env.with_var(goal.dom()), goal.cod(), budget - 1);
      if (!body) return std::nullopt;
      return Term::abs(goal.dom(), *body);
    }
    if (goal.is_all()) {
      auto body = check(env.with_tvar(goal.bound()), goal.body(), budget - 1);
      if (!body) return std::nullopt;
      return Term::tabs(goal.bound(), *body);
    }
    return std::nullopt;
  }

  // A variable whose type is an arrow chain ending in the goal, applied to
  // inhabitants of each domain.
  std::optional<Term> check_spine(const Env& env, const Typ& goal, std::size_t budget) {
    std::vector<std::pair<Index, std::vector<Typ>>> heads;
    for (Index x = 0; x < env.term_bindings(); ++x) {
      std::vector<Typ> doms;
      Typ t = *get_var(env, x);
      while (t.is_arrow() && !(t == goal)) {
        doms.push_back(t.dom());
        t = t.cod();
      }
      if (t == goal && !doms.empty() && 2 * doms.size() + 1 <= budget) {
        heads.emplace_back(x, std::move(doms));
      }
    }
    if (heads.empty()) return std::nullopt;
    auto& [x, doms] = heads[rng_.below(heads.size())];
    Term out = Term::var(x);
    std::size_t left = budget - 1 - doms.size();
    for (std::size_t i = 0; i < doms.size(); ++i) {
      const std::size_t reserve = doms.size() - 1 - i;
      const std::size_t arg_budget = rng_.between(1, left - reserve);
      auto arg = check(env, doms[i], arg_budget);
      if (!arg) return std::nullopt;
      out = Term::app(out, *arg);
      left -= arg_budget;
    }
    return out;
  }

  std::optional<Term> check_beta(const Env& env, const Typ& goal, std::size_t budget) {
    const std::size_t arg_budget = rng_.between(1, budget - 3);
    auto arg = synth(env, arg_budget);
    if (!arg) return std::nullopt;
    auto body = check(env.with_var(arg->type), goal, budget - 2 - arg_budget);
    if (!body) return std::nullopt;
    return Term::app(Term::abs(arg->type, *body), arg->term);
  }

  std::optional<Term> check_tbeta(const Env& env, const Typ& goal, std::size_t budget) {
    const Kind k = random_kind();
    auto arg = random_type_below(env, k);
    if (!arg) return std::nullopt;
    auto body = check(env.with_tvar(k), tshift(0, goal), budget - 2);
    if (!body) return std::nullopt;
    return Term::tapp(Term::tabs(k, *body), *arg);
  }

  Rng& rng_;
  GenConfig config_;
  std::size_t effort_ = 4000;
};

TypedTerm fallback(const Env& env) {
  if (env.term_bindings() > 0) return TypedTerm{Term::var(0), *get_var(env, 0)};
  return TypedTerm{Term::tabs(0, Term::abs(Typ::tvar(0), Term::var(0))),
                   Typ::all(0, Typ::arrow(Typ::tvar(0), Typ::tvar(0)))};
}

}  // namespace

TypedTerm gen_well_typed(std::uint64_t seed, std::size_t budget, const Env& env,
                         const GenConfig& config) {
  Rng rng(seed);
  TypedGen gen(rng, config);
  if (auto out = gen.synth(env, budget)) return *out;
  return fallback(env);
}

std::optional<Term> gen_inhabitant(Rng& rng, const Env& env, const Typ& goal, std::size_t budget,
                                   const GenConfig& config) {
  TypedGen gen(rng, config);
  return gen.check(env, goal, budget);
}

namespace {

bool mentions(const Term& t, Index x) {
  switch (t.tag()) {
    case Term::Tag::Var:
      return t.index() == x;
    case Term::Tag::Abs:
      return mentions(t.body(), x + 1);
    case Term::Tag::TAbs:
      return mentions(t.body(), x);
    case Term::Tag::App:
      return mentions(t.fn(), x) || mentions(t.arg(), x);
    case Term::Tag::TApp:
      return mentions(t.fn(), x);
  }
  return false;
}

}  // namespace

HsubstInstance gen_hsubst_instance(std::uint64_t seed, std::size_t budget,
                                   const GenConfig& config) {
  Rng rng(seed);
  std::optional<HsubstInstance> last;
  for (int attempt = 0; attempt < 64; ++attempt) {
    TypedGen gen(rng, config);
    const Env base = gen_env(rng, rng.below(3), config.max_kind);
    Typ var_type = gen.random_type(base);
    if (rng.chance(2, 3)) {
      // Higher-order variables are what make substitution hereditary.
      if (rng.chance(1, 2)) {
        var_type = Typ::arrow(gen.random_type(base), gen.random_type(base));
      } else {
        const Kind k = gen.random_kind();
        var_type = Typ::all(k, gen.random_type(base.with_tvar(k)));
      }
    }
    Env env = base.with_var(var_type);
    Index x = 0;
    switch (rng.below(3)) {
      case 0:
        env = env.with_tvar(gen.random_kind());
        break;
      case 1:
        env = env.with_var(gen.random_type(env));
        x = 1;
        break;
      default:
        break;
    }
    const Typ declared = *get_var(env, x);
    const Env outer = remove_var(env, x);

    auto u = gen.check(outer, declared, budget);
    if (!u) continue;
    auto u_normal = normalize_fuel(*u, kDefaultFuel);
    if (!u_normal) continue;

    gen.preferred_level = env.term_bindings() - 1 - x;
    auto target = gen.synth(env, budget);
    if (!target) continue;
    auto t_normal = normalize_fuel(target->term, kDefaultFuel);
    if (!t_normal) continue;

    HsubstInstance inst{env, target->type, HsubstInput{declared, t_normal.value(),
                                                       u_normal.value(), x}};
    if (!precondition_holds(inst.env, inst.goal, inst.input)) continue;
    if (mentions(inst.input.target, x)) return inst;
    last = std::move(inst);
  }
  if (last) return *last;
  // Degenerate but valid: substitute into the variable itself.
  const Env env = Env().with_var(Typ::all(0, Typ::arrow(Typ::tvar(0), Typ::tvar(0))));
  return HsubstInstance{env, *get_var(env, 0),
                        HsubstInput{*get_var(env, 0), Term::var(0),
                                    Term::tabs(0, Term::abs(Typ::tvar(0), Term::var(0))), 0}};
}

}  // namespace fpred::testkit
