#include "fpred/testkit/suites.hpp"

#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "fpred/measure.hpp"
#include "fpred/reduction.hpp"
#include "fpred/sexp.hpp"
#include "fpred/typecheck.hpp"
#include "fpred/testkit/dm_oracle.hpp"
#include "fpred/testkit/generate.hpp"
#include "fpred/testkit/lemmas.hpp"
#include "fpred/testkit/named.hpp"

namespace fpred::testkit {

void PropertyResult::record(bool pass, const std::function<std::string()>& describe) {
  ++instances;
  if (pass) return;
  if (failures++ == 0) counterexample = describe();
}

HsubstFn tallying_hsubst(MeasureTally& tally) {
  return [&tally](const HsubstInput& in) {
    HsubstTrace trace = hsubst_traced(in);
    ++tally.runs;
    tally.calls += trace.calls.size();
    for (const HsubstCall& c : trace.calls) {
      if (c.decreased) continue;
      if (tally.violations++ == 0) {
        tally.first_violation = "target " + to_sexp(in.target) + " substituend " +
                                to_sexp(in.substituend) + "\n" + format_calls(trace.calls);
      }
    }
    return std::move(trace.result);
  };
}

namespace {

std::string show(const Env& env, const Term& t) { return to_sexp(env) + " |- " + to_sexp(t); }

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt, std::size_t i) {
  return seed * 0x9e3779b97f4a7c15ULL + salt * 0x100000001b3ULL + i;
}

// The oracle comparison shared by both normalization suites. Returns an empty
// string on success, else a description of what went wrong.
std::string normalization_failure(const Env& env, const Term& t, const Typ& type,
                                  const HsubstFn& hs) {
  Term n = t;
  try {
    n = normalize(t, hs);
  } catch (const std::exception& e) {
    return std::string("normalize threw: ") + e.what();
  }
  const auto oracle = normalize_fuel(t, kDefaultFuel);
  if (!oracle.ok()) return "oracle ran out of fuel";
  if (!(oracle.value() == n)) {
    return "normalize gave " + to_sexp(n) + ", oracle " + to_sexp(oracle.value());
  }
  const auto n_type = infer_type(env, n);
  if (!n_type.ok() || !(n_type.value() == type)) return "type not preserved by " + to_sexp(n);
  if (!is_normal(n)) return "result not normal: " + to_sexp(n);
  return {};
}

HsubstFn pick_hsubst(MeasureTally* tally) {
  return tally ? tallying_hsubst(*tally) : HsubstFn(hsubst);
}

Env random_env(Rng& rng, std::size_t max_len) { return gen_env(rng, rng.below(max_len + 1), 2); }

// Occurrences of TVar x in t, counted independently of tsubst.
std::size_t occurrences(const Typ& t, Index x) {
  switch (t.tag()) {
    case Typ::Tag::TVar:
      return t.index() == x ? 1 : 0;
    case Typ::Tag::Arrow:
      return occurrences(t.dom(), x) + occurrences(t.cod(), x);
    case Typ::Tag::All:
      return occurrences(t.body(), x + 1);
  }
  return 0;
}

// A type well formed in env whose minimal kind is at most k.
std::optional<Typ> gen_type_at_kind(Rng& rng, const Env& env, Kind k) {
  const auto scope = static_cast<Index>(env.type_bindings());
  for (int attempt = 0; attempt < 32; ++attempt) {
    Typ t = gen_wf_type(rng, rng.between(1, 4), scope, k);
    if (check_kinding(env, t, k)) return t;
  }
  return std::nullopt;
}

}  // namespace

PropertyResult normalization_exhaustive(std::size_t max_size, const EnumBounds& bounds,
                                        MeasureTally* tally) {
  std::ostringstream name;
  name << "normalize agrees with the oracle on closed terms of size <= " << max_size
       << " (types <= " << bounds.max_type_nodes << " nodes, kinds <= " << bounds.max_kind << ")";
  PropertyResult r{name.str()};
  const HsubstFn hs = pick_hsubst(tally);
  TermEnumerator en(bounds);
  const Env env;
  const std::size_t memo = max_size > 0 ? max_size - 1 : 0;
  for (std::size_t n = 0; n <= max_size; ++n) {
    en.for_each_typed(env, n, memo, [&](const TypedTerm& tt) {
      const std::string why = normalization_failure(env, tt.term, tt.type, hs);
      r.record(why.empty(), [&] { return show(env, tt.term) + ": " + why; });
    });
  }
  return r;
}

PropertyResult normalization_generated(std::uint64_t seed, std::size_t cases, std::size_t budget,
                                       MeasureTally* tally) {
  PropertyResult r{"normalize agrees with the oracle on generated terms of size <= " +
                   std::to_string(budget)};
  const HsubstFn hs = pick_hsubst(tally);
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Env env = random_env(rng, 3);
    const TypedTerm tt = gen_well_typed(mix(seed, 1, i), budget, env);
    const std::string why = normalization_failure(env, tt.term, tt.type, hs);
    const bool in_size = term_size(tt.term) <= budget;
    r.record(why.empty() && in_size, [&] {
      return show(env, tt.term) + ": " + (in_size ? why : std::string("over budget"));
    });
  }
  return r;
}

PropertyResult hsubst_contract(std::uint64_t seed, std::size_t cases, std::size_t budget,
                               MeasureTally* tally) {
  PropertyResult r{"hsubst_checked holds on generated instances"};
  CheckOptions options;
  if (tally) options.hsubst = tallying_hsubst(*tally);
  for (std::size_t i = 0; i < cases; ++i) {
    const HsubstInstance inst = gen_hsubst_instance(mix(seed, 2, i), budget);
    const auto out = hsubst_checked(inst.env, inst.goal, inst.input, options);
    r.record(out.ok(), [&] {
      return std::string(to_string(out.error().kind)) + " " + out.error().detail + " on " +
             to_sexp(inst.env) + " target " + to_sexp(inst.input.target) + " substituend " +
             to_sexp(inst.input.substituend) + " index " + std::to_string(inst.input.index);
    });
  }
  return r;
}

PropertyResult measure_decrease(const MeasureTally& tally) {
  PropertyResult r{"every recursive hsubst call decreases the measure"};
  r.instances = tally.calls;
  r.failures = tally.violations;
  r.counterexample = tally.first_violation;
  return r;
}

PropertyResult multiset_order_exhaustive(std::size_t max_elems, Kind max_kind) {
  PropertyResult r{"multiset_lt agrees with the closure oracle on bags of <= " +
                   std::to_string(max_elems) + " elements over kinds 0.." +
                   std::to_string(max_kind)};
  const std::vector<KindBag> bags = enumerate_bags(max_elems, max_kind);
  DmOracle oracle;
  for (const KindBag& a : bags) {
    for (const KindBag& b : bags) {
      const bool fast = multiset_lt(a, b);
      const bool slow = oracle.less(a, b);
      r.record(fast == slow, [&] {
        return a.to_string() + " < " + b.to_string() + ": multiset_lt " +
               (fast ? "true" : "false") + ", oracle " + (slow ? "true" : "false");
      });
    }
  }
  return r;
}

namespace {

template <class T, class Less, class Show>
void check_strict_order(PropertyResult& r, const std::vector<T>& xs, Less less, Show show_one) {
  std::vector<std::vector<std::size_t>> above(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (less(xs[i], xs[j])) above[i].push_back(j);
    }
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    r.record(!less(xs[i], xs[i]), [&] { return "reflexive at " + show_one(xs[i]); });
    for (std::size_t j : above[i]) {
      for (std::size_t k : above[j]) {
        r.record(less(xs[i], xs[k]), [&] {
          return "not transitive: " + show_one(xs[i]) + " < " + show_one(xs[j]) + " < " +
                 show_one(xs[k]);
        });
      }
    }
  }
}

}  // namespace

PropertyResult order_laws_exhaustive() {
  PropertyResult r{"multiset_lt, type_order and her_less are strict orders"};
  check_strict_order(r, enumerate_bags(4, 3), multiset_lt,
                     [](const KindBag& b) { return b.to_string(); });

  std::vector<Typ> types;
  for (const Typ& t : enumerate_raw_types(3, 2, 1)) {
    if (wf_typ(Env().with_tvar(0).with_tvar(0), t)) types.push_back(t);
  }
  check_strict_order(r, types, type_order, [](const Typ& t) { return to_sexp(t); });

  const Typ x0 = Typ::tvar(0);
  const std::vector<Term> terms = {
      Term::var(0),
      Term::abs(x0, Term::var(0)),
      Term::app(Term::var(0), Term::var(1)),
      Term::tabs(0, Term::var(0)),
      Term::abs(x0, Term::app(Term::var(0), Term::var(1))),
      Term::tabs(1, Term::abs(x0, Term::tapp(Term::var(0), x0))),
  };
  std::vector<std::pair<Typ, Term>> pairs;
  for (const Typ& t : types) {
    if (t.node_count() > 2) continue;
    for (const Term& u : terms) pairs.emplace_back(t, u);
  }
  check_strict_order(r, pairs, [](const auto& a, const auto& b) { return her_less(a, b); },
                     [](const auto& p) { return to_sexp(p.first) + " " + to_sexp(p.second); });
  return r;
}

PropertyResult kinds_of_kinded(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"kinds_of of a type kindable at k is below {k}"};
  Rng rng(seed);
  while (r.instances < cases) {
    const Env env = random_env(rng, 3);
    const Typ t = gen_wf_type(rng, rng.between(1, 6), static_cast<Index>(env.type_bindings()), 2);
    const auto least = infer_kind(env, t);
    if (!least) continue;
    const Kind k = *least + static_cast<Kind>(rng.below(2));
    if (!check_kinding(env, t, k)) continue;
    r.record(multiset_lt(kinds_of(t), KindBag::singleton(k)), [&] {
      return to_sexp(t) + " at " + std::to_string(k) + " has bag " + kinds_of(t).to_string();
    });
  }
  return r;
}

PropertyResult kinds_of_tshift(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"kinds_of is invariant under tshift"};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Env env = random_env(rng, 3);
    const Typ t = gen_wf_type(rng, rng.between(1, 7), static_cast<Index>(env.type_bindings()), 3);
    const auto cutoff = static_cast<Index>(rng.below(env.type_bindings() + 2));
    const Typ shifted = tshift(cutoff, t);
    r.record(kinds_of(shifted) == kinds_of(t),
             [&] { return to_sexp(t) + " shifted at " + std::to_string(cutoff); });
  }
  return r;
}

PropertyResult kinds_of_tsubst(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"kinds_of after tsubst adds one copy of the replacement per occurrence"};
  Rng rng(seed);
  while (r.instances < cases) {
    const Env env = random_env(rng, 4);
    const auto scope = static_cast<Index>(env.type_bindings());
    if (scope == 0) continue;
    const Typ u = gen_wf_type(rng, rng.between(1, 7), scope, 2);
    const auto x = static_cast<Index>(rng.below(scope));
    const Typ t = gen_wf_type(rng, rng.between(1, 4), scope - 1, 2);
    const KindBag expected = kinds_of(u) + mul_sum(occurrences(u, x), kinds_of(t));
    const KindBag got = kinds_of(tsubst(u, x, t));
    r.record(got == expected, [&] {
      return to_sexp(u) + " [" + std::to_string(x) + " := " + to_sexp(t) + "] gives " +
             got.to_string() + ", expected " + expected.to_string();
    });
  }
  return r;
}

PropertyResult kinds_of_tsubst_all(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"instantiating All k U at kind k shrinks the bag of kinds"};
  Rng rng(seed);
  while (r.instances < cases) {
    const Env env = random_env(rng, 3);
    const auto scope = static_cast<Index>(env.type_bindings());
    const auto k = static_cast<Kind>(rng.below(3));
    const Typ u = gen_wf_type(rng, rng.between(1, 6), scope + 1, 2);
    const Typ whole = Typ::all(k, u);
    if (!infer_kind(env, whole)) continue;
    const auto t = gen_type_at_kind(rng, env, k);
    if (!t) continue;
    r.record(multiset_lt(kinds_of(tsubst(u, 0, *t)), kinds_of(whole)),
             [&] { return to_sexp(whole) + " instantiated at " + to_sexp(*t); });
  }
  return r;
}

PropertyResult kinding_exhaustive(std::size_t max_nodes, Kind max_kind,
                                  std::size_t max_type_bindings) {
  std::ostringstream name;
  name << "check_kinding agrees with derivation search on types of <= " << max_nodes
       << " nodes, kinds 0.." << max_kind << ", <= " << max_type_bindings << " type bindings";
  PropertyResult r{name.str()};

  std::vector<Env> envs;
  std::vector<Env> layer{Env()};
  for (std::size_t depth = 0; depth <= max_type_bindings; ++depth) {
    std::vector<Env> next;
    for (const Env& e : layer) {
      envs.push_back(e);
      // One term binding on top, once well formed and once not.
      envs.push_back(e.with_var(Typ::tvar(0)));
      envs.push_back(e.with_var(Typ::tvar(static_cast<Index>(max_type_bindings))));
      for (Kind k = 0; k <= max_kind; ++k) next.push_back(e.with_tvar(k));
    }
    layer = std::move(next);
  }

  // One free index past the largest context, so unbound variables occur.
  const auto free_limit = static_cast<Index>(max_type_bindings + 1);
  const std::vector<Typ> types = enumerate_raw_types(max_nodes, free_limit, max_kind);
  // All max_kind has minimal kind max_kind + 1; one more level checks the
  // upper side of cumulativity.
  const Kind top = max_kind + 2;
  for (const Env& env : envs) {
    for (const Typ& t : types) {
      for (Kind k = 0; k <= top; ++k) {
        const bool fast = check_kinding(env, t, k);
        const bool slow = kinding_search_oracle(env, t, k, k);
        r.record(fast == slow, [&] {
          return to_sexp(env) + " |- " + to_sexp(t) + " : " + std::to_string(k) +
                 ": check_kinding " + (fast ? "true" : "false") + ", search " +
                 (slow ? "true" : "false");
        });
      }
    }
  }
  return r;
}

PropertyResult weakening_kind(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"typing survives inserting a type binding"};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Env env = random_env(rng, 4);
    const TypedTerm tt = gen_well_typed(mix(seed, 3, i), 10, env);
    const InsertKind iw = gen_insert_kind(rng, env, 2);
    r.record(is_valid(iw) && check_weakening(iw, tt.term, tt.type), [&] {
      return show(env, tt.term) + " inserted at " + std::to_string(iw.position) + " into " +
             to_sexp(iw.after);
    });
  }
  return r;
}

PropertyResult weakening_var(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"typing survives adding a term binding"};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Env env = random_env(rng, 4);
    const TypedTerm tt = gen_well_typed(mix(seed, 4, i), 10, env);
    const Typ extra =
        gen_wf_type(rng, rng.between(1, 4), static_cast<Index>(env.type_bindings()), 2);
    r.record(check_weakening_var(env, extra, tt.term, tt.type),
             [&] { return show(env, tt.term) + " extended with " + to_sexp(extra); });
  }
  return r;
}

PropertyResult substitution_term(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"term substitution preserves typing"};
  Rng rng(seed);
  std::size_t i = 0;
  while (r.instances < cases) {
    ++i;
    Env env = random_env(rng, 2);
    env = env.with_var(
        gen_wf_type(rng, rng.between(1, 5), static_cast<Index>(env.type_bindings()), 2));
    if (rng.chance(1, 2)) env = env.with_tvar(static_cast<Kind>(rng.below(3)));
    if (rng.chance(1, 3)) {
      env = env.with_var(
          gen_wf_type(rng, rng.between(1, 3), static_cast<Index>(env.type_bindings()), 2));
    }
    const auto x = static_cast<Index>(rng.below(env.term_bindings()));
    const Env outer = remove_var(env, x);
    const auto u = gen_inhabitant(rng, outer, *get_var(env, x), 6);
    if (!u) continue;
    const TypedTerm tt = gen_well_typed(mix(seed, 5, i), 10, env);
    r.record(check_subst_lemmas(env, x, tt.term, *u), [&] {
      return show(env, tt.term) + " [" + std::to_string(x) + " := " + to_sexp(*u) + "]";
    });
  }
  return r;
}

PropertyResult substitution_type(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"type substitution preserves typing"};
  Rng rng(seed);
  std::size_t i = 0;
  while (r.instances < cases) {
    ++i;
    const Env env = random_env(rng, 3);
    const auto k = static_cast<Kind>(rng.below(3));
    const auto p = gen_type_at_kind(rng, env, k);
    if (!p) continue;
    const TypedTerm tt = gen_well_typed(mix(seed, 6, i), 10, env.with_tvar(k));
    r.record(check_subst_typ_lemma(env, k, tt.term, *p), [&] {
      return show(env.with_tvar(k), tt.term) + " [0 := " + to_sexp(*p) + "]";
    });
  }
  return r;
}

PropertyResult narrowing(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"typing survives lowering a type binding's kind"};
  Rng rng(seed);
  std::size_t i = 0;
  while (r.instances < cases) {
    ++i;
    const Env env = random_env(rng, 4);
    const auto nw = gen_narrow(rng, env);
    if (!nw) continue;
    const TypedTerm tt = gen_well_typed(mix(seed, 7, i), 10, env);
    r.record(is_valid(*nw) && check_narrowing(*nw, tt.term, tt.type),
             [&] { return show(env, tt.term) + " narrowed to " + to_sexp(nw->after); });
  }
  return r;
}

PropertyResult env_subst_coherence(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"typing survives substituting a type binding away"};
  Rng rng(seed);
  std::size_t i = 0;
  while (r.instances < cases) {
    ++i;
    const Env env = random_env(rng, 4);
    const auto es = gen_env_subst(rng, env, {});
    if (!es) continue;
    const TypedTerm tt = gen_well_typed(mix(seed, 8, i), 10, env);
    r.record(check_env_subst(*es, tt.term, tt.type), [&] {
      return show(env, tt.term) + " [" + std::to_string(es->position) +
             " := " + to_sexp(es->replacement) + "]";
    });
  }
  return r;
}

PropertyResult kinding_transitive(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"derivable kinds are upward closed"};
  Rng rng(seed);
  while (r.instances < cases) {
    const Env env = random_env(rng, 3);
    const Typ t = gen_wf_type(rng, rng.between(1, 5), static_cast<Index>(env.type_bindings()), 2);
    const auto least = infer_kind(env, t);
    if (!least) continue;
    const Kind k = *least + static_cast<Kind>(rng.below(2));
    const Kind up = k + static_cast<Kind>(rng.below(3));
    if (!kinding_search_oracle(env, t, k, k)) continue;
    r.record(check_kinding_transitive(env, t, k, up), [&] {
      return to_sexp(env) + " |- " + to_sexp(t) + " : " + std::to_string(k) + " -> " +
             std::to_string(up);
    });
  }
  return r;
}

PropertyResult kinding_wf(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"kindable types live in well-formed contexts"};
  Rng rng(seed);
  while (r.instances < cases) {
    Env env = random_env(rng, 3);
    // Sometimes break the context with a dangling annotation.
    if (rng.chance(1, 3)) {
      env = env.with_var(Typ::tvar(static_cast<Index>(env.type_bindings() + rng.below(2))));
    }
    const Typ t = gen_raw_type(rng, rng.between(1, 5), static_cast<Index>(env.type_bindings()), 2);
    if (!infer_kind(env, t)) continue;
    r.record(check_kinding_wf(env, t), [&] { return to_sexp(env) + " |- " + to_sexp(t); });
  }
  return r;
}

PropertyResult regularity(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"types of well-typed terms are kindable"};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Env env = random_env(rng, 4);
    const TypedTerm tt = gen_well_typed(mix(seed, 9, i), 10, env);
    r.record(check_regularity(env, tt.term), [&] { return show(env, tt.term); });
  }
  return r;
}

PropertyResult neutral_tvar(std::size_t max_size) {
  PropertyResult r{"no neutral term types under a lone type binding (size <= " +
                   std::to_string(max_size) + ")"};
  for (Kind k = 0; k <= 2; ++k) {
    r.record(check_neutral_tvar(k, max_size),
             [&] { return "neutral term found under kind " + std::to_string(k); });
    // With a term binding in scope the search must find one.
    const Env mutant = Env().with_tvar(k).with_var(Typ::tvar(0));
    const auto found = find_neutral(mutant, max_size);
    r.record(found && found->term == Term::var(0),
             [&] { return "no neutral term found in " + to_sexp(mutant); });
  }
  return r;
}

PropertyResult consistency(std::size_t max_size, Kind max_kind) {
  PropertyResult r{"All k X is uninhabited up to size " + std::to_string(max_size)};
  for (Kind k = 0; k <= max_kind; ++k) {
    const Typ goal = Typ::all(k, Typ::tvar(0));
    const std::vector<Term> found = enumerate_terms(Env(), goal, max_size);
    r.record(found.empty(), [&] { return "inhabitant " + to_sexp(found.front()); });
    const Env probe = Env().with_var(goal);
    const std::vector<Term> sane = enumerate_terms(probe, goal, max_size);
    r.record(!sane.empty() && sane.front() == Term::var(0),
             [&] { return "probe did not find (var 0) in " + to_sexp(probe); });
  }
  return r;
}

PropertyResult shift_subst_cancel(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"substituting into a fresh shift is the identity"};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Term t = gen_raw_term(rng, rng.between(1, 10), 2, 2, 2);
    const Term u = gen_raw_term(rng, rng.between(1, 4), 2, 2, 2);
    const Typ ty = gen_raw_type(rng, rng.between(1, 5), 2, 2);
    const Typ p = gen_raw_type(rng, rng.between(1, 3), 2, 2);
    const auto c = static_cast<Index>(rng.below(3));
    r.record(subst(shift(c, t), c, u) == t,
             [&] { return "term " + to_sexp(t) + " cutoff " + std::to_string(c); });
    r.record(subst_typ(shift_typ(c, t), c, p) == t,
             [&] { return "term types " + to_sexp(t) + " cutoff " + std::to_string(c); });
    r.record(tsubst(tshift(c, ty), c, p) == ty,
             [&] { return "type " + to_sexp(ty) + " cutoff " + std::to_string(c); });
  }
  return r;
}

PropertyResult parallel_commute(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"term and type index operations commute"};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Term t = gen_raw_term(rng, rng.between(1, 10), 2, 2, 2);
    const Term u = gen_raw_term(rng, rng.between(1, 4), 2, 2, 2);
    const Typ p = gen_raw_type(rng, rng.between(1, 3), 2, 2);
    const auto c = static_cast<Index>(rng.below(3));
    const auto d = static_cast<Index>(rng.below(3));
    r.record(shift(c, shift_typ(d, t)) == shift_typ(d, shift(c, t)),
             [&] { return "shift/shift_typ on " + to_sexp(t); });
    r.record(subst_typ(shift(c, t), d, p) == shift(c, subst_typ(t, d, p)),
             [&] { return "shift/subst_typ on " + to_sexp(t); });
    r.record(subst(shift_typ(d, t), c, shift_typ(d, u)) == shift_typ(d, subst(t, c, u)),
             [&] { return "subst/shift_typ on " + to_sexp(t) + " with " + to_sexp(u); });
  }
  return r;
}

PropertyResult named_subst_oracle(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"subst and subst_typ agree with named substitution"};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const std::size_t vars = rng.between(2, 4);
    const std::size_t tvars = rng.between(2, 4);
    const Term t = gen_raw_term(rng, rng.between(1, 12), static_cast<Index>(vars - 1),
                                static_cast<Index>(tvars - 1), 2);
    const Term u = gen_raw_term(rng, rng.between(1, 5), static_cast<Index>(vars - 2),
                                static_cast<Index>(tvars - 1), 2);
    const auto x = static_cast<Index>(rng.below(vars));
    const Term fast = subst(t, x, u);
    const Term slow = named::oracle_subst(rng, t, x, u, vars, tvars);
    r.record(fast == slow, [&] {
      return to_sexp(t) + " [" + std::to_string(x) + " := " + to_sexp(u) + "]: " +
             to_sexp(fast) + " vs " + to_sexp(slow);
    });

    const Typ p = gen_raw_type(rng, rng.between(1, 4), static_cast<Index>(tvars - 2), 2);
    const auto y = static_cast<Index>(rng.below(tvars));
    const Term fast_t = subst_typ(t, y, p);
    const Term slow_t = named::oracle_subst_typ(rng, t, y, p, vars, tvars);
    r.record(fast_t == slow_t, [&] {
      return to_sexp(t) + " [" + std::to_string(y) + " := " + to_sexp(p) + "]: " +
             to_sexp(fast_t) + " vs " + to_sexp(slow_t);
    });
  }
  return r;
}

PropertyResult normal_iff_no_step(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"is_normal holds exactly when no step applies to a well-typed term"};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    // Raw terms can be stuck without being normal, so only one direction.
    const Term raw = gen_raw_term(rng, rng.between(1, 12), 2, 2, 2);
    r.record(!is_normal(raw) || !step(raw).has_value(), [&] { return to_sexp(raw); });
    const Env env = random_env(rng, 3);
    const TypedTerm tt = gen_well_typed(mix(seed, 11, i), 12, env);
    r.record(is_normal(tt.term) == !step(tt.term).has_value(),
             [&] { return show(env, tt.term); });
  }
  return r;
}

PropertyResult subject_reduction(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"every reduction step preserves the type"};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const Env env = random_env(rng, 3);
    const TypedTerm tt = gen_well_typed(mix(seed, 12, i), 12, env);
    Term t = tt.term;
    bool ok = true;
    for (int n = 0; n < 64 && ok; ++n) {
      ok = !is_neutral(t) || is_normal(t);
      const auto next = step(t);
      if (!next) break;
      t = *next;
      const auto ty = infer_type(env, t);
      ok = ok && ty.ok() && ty.value() == tt.type;
    }
    r.record(ok, [&] { return show(env, tt.term) + " reaching " + to_sexp(t); });
  }
  return r;
}

PropertyResult pruned_matches_unpruned(std::size_t max_size) {
  PropertyResult r{"goal-directed enumeration matches filtered raw enumeration up to size " +
                   std::to_string(max_size)};
  const EnumBounds bounds{2, 1};
  const Typ x0 = Typ::tvar(0);
  const std::vector<Env> envs = {
      Env(),
      Env().with_tvar(0),
      Env().with_tvar(1).with_var(x0),
      Env().with_tvar(0).with_var(Typ::arrow(x0, x0)).with_var(x0),
  };
  for (const Env& env : envs) {
    TermEnumerator en(bounds);
    const auto scope = static_cast<Index>(env.type_bindings());
    for (std::size_t n = 0; n <= max_size; ++n) {
      std::map<std::string, std::set<std::string>> by_type;
      for (const Term& t : en.raw(env, n)) {
        const auto ty = infer_type(env, t);
        if (ty.ok()) by_type[to_sexp(ty.value())].insert(to_sexp(t));
      }
      std::vector<Typ> goals = type_universe(scope, {3, bounds.max_kind});
      goals.push_back(Typ::all(0, Typ::arrow(x0, x0)));
      goals.push_back(Typ::all(1, Typ::arrow(x0, x0)));
      for (const Typ& goal : goals) {
        std::set<std::string> pruned;
        for (const Term& t : en.check(env, goal, n)) pruned.insert(to_sexp(t));
        const auto it = by_type.find(to_sexp(goal));
        const std::set<std::string> expected = it == by_type.end() ? std::set<std::string>{}
                                                                   : it->second;
        r.record(pruned == expected, [&] {
          return to_sexp(env) + " goal " + to_sexp(goal) + " size " + std::to_string(n) +
                 ": pruned " + std::to_string(pruned.size()) + ", raw " +
                 std::to_string(expected.size());
        });
      }
    }
  }
  return r;
}

PropertyResult generator_determinism(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"generators are deterministic and diverse"};
  std::unordered_set<Term> distinct;
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint64_t s = mix(seed, 10, i);
    const TypedTerm a = gen_well_typed(s, 8, Env());
    const TypedTerm b = gen_well_typed(s, 8, Env());
    distinct.insert(a.term);
    r.record(a.term == b.term && a.type == b.type,
             [&] { return "seed " + std::to_string(s) + " is not reproducible"; });
  }
  // At least one distinct term per ten draws.
  r.record(distinct.size() * 10 >= cases, [&] {
    return std::to_string(distinct.size()) + " distinct terms in " + std::to_string(cases);
  });
  return r;
}

std::vector<PropertyResult> run_selftest(const SelftestOptions& o) {
  const std::uint64_t s = o.seed;
  const std::size_t n = o.cases;
  MeasureTally tally;
  std::vector<PropertyResult> out;
  out.push_back(normalization_exhaustive(5, {1, 2}, &tally));
  out.push_back(normalization_generated(s, n, 12, &tally));
  out.push_back(hsubst_contract(s, n, 8, &tally));
  out.push_back(measure_decrease(tally));
  out.push_back(multiset_order_exhaustive(3, 3));
  out.push_back(order_laws_exhaustive());
  out.push_back(kinds_of_kinded(s, n));
  out.push_back(kinds_of_tshift(s, n));
  out.push_back(kinds_of_tsubst(s, n));
  out.push_back(kinds_of_tsubst_all(s, n));
  out.push_back(kinding_exhaustive(4, 3, 2));
  out.push_back(weakening_kind(s, n));
  out.push_back(weakening_var(s, n));
  out.push_back(substitution_term(s, n));
  out.push_back(substitution_type(s, n));
  out.push_back(narrowing(s, n));
  out.push_back(env_subst_coherence(s, n));
  out.push_back(kinding_transitive(s, n));
  out.push_back(kinding_wf(s, n));
  out.push_back(regularity(s, n));
  out.push_back(neutral_tvar(4));
  out.push_back(consistency(5, 2));
  out.push_back(shift_subst_cancel(s, n));
  out.push_back(parallel_commute(s, n));
  out.push_back(named_subst_oracle(s, n));
  out.push_back(normal_iff_no_step(s, n));
  out.push_back(subject_reduction(s, n));
  out.push_back(pruned_matches_unpruned(3));
  out.push_back(generator_determinism(s, n));
  return out;
}

}  // namespace fpred::testkit
