#include "fpred/testkit/lemmas.hpp"

#include <vector>

#include "fpred/typecheck.hpp"

namespace fpred::testkit {

InsertKind ik_top(const Env& env, Kind k) { return {0, env, env.with_tvar(k)}; }

InsertKind ik_kind(const InsertKind& iw, Kind k) {
  return {iw.position + 1, iw.before.with_tvar(k), iw.after.with_tvar(k)};
}

InsertKind ik_var(const InsertKind& iw, const Typ& type) {
  return {iw.position, iw.before.with_var(type), iw.after.with_var(tshift(iw.position, type))};
}

bool is_valid(const InsertKind& iw) {
  Index x = iw.position;
  Env before = iw.before;
  Env after = iw.after;
  while (true) {
    if (x == 0 && after.tag() == Env::Tag::ETVar && after.rest() == before) return true;
    if (after.tag() != before.tag() || after.is_empty()) return false;
    if (after.tag() == Env::Tag::ETVar) {
      if (x == 0 || after.bound() != before.bound()) return false;
      --x;
    } else if (!(after.annot() == tshift(x, before.annot()))) {
      return false;
    }
    before = before.rest();
    after = after.rest();
  }
}

std::optional<EnvSubst> es_here(const Env& env, const Typ& replacement, Kind k) {
  if (!check_kinding(env, replacement, k)) return std::nullopt;
  return EnvSubst{0, replacement, env.with_tvar(k), env};
}

EnvSubst es_var(const EnvSubst& es, const Typ& type) {
  return {es.position, es.replacement, es.before.with_var(type),
          es.after.with_var(tsubst(type, es.position, es.replacement))};
}

EnvSubst es_kind(const EnvSubst& es, Kind k) {
  return {es.position + 1, tshift(0, es.replacement), es.before.with_tvar(k),
          es.after.with_tvar(k)};
}

std::optional<Narrow> narrow_0(const Env& env, Kind k, Kind lowered) {
  if (!(lowered < k)) return std::nullopt;
  return Narrow{0, env.with_tvar(k), env.with_tvar(lowered)};
}

Narrow narrow_extend_kind(const Narrow& nw, Kind k) {
  return {nw.position + 1, nw.before.with_tvar(k), nw.after.with_tvar(k)};
}

std::optional<Narrow> narrow_extend_var(const Narrow& nw, const Typ& type) {
  if (!wf_typ(nw.after, type)) return std::nullopt;
  return Narrow{nw.position, nw.before.with_var(type), nw.after.with_var(type)};
}

bool is_valid(const Narrow& nw) {
  Index x = nw.position;
  Env before = nw.before;
  Env after = nw.after;
  while (true) {
    if (after.tag() != before.tag() || after.is_empty()) return false;
    if (after.tag() == Env::Tag::ETVar) {
      if (x == 0) return after.rest() == before.rest() && after.bound() < before.bound();
      if (after.bound() != before.bound()) return false;
      --x;
    } else if (!(after.annot() == before.annot())) {
      return false;
    }
    before = before.rest();
    after = after.rest();
  }
}

namespace {

// Bindings of env, innermost first.
std::vector<Env> spine_of(const Env& env) {
  std::vector<Env> out;
  for (Env e = env; !e.is_empty(); e = e.rest()) out.push_back(e);
  return out;
}

}  // namespace

InsertKind gen_insert_kind(Rng& rng, const Env& before, Kind max_kind) {
  const std::vector<Env> nodes = spine_of(before);
  // Peel nodes[0 .. depth), insert, then put the peeled bindings back.
  const std::size_t depth = rng.below(nodes.size() + 1);
  InsertKind iw = ik_top(depth < nodes.size() ? nodes[depth] : Env(),
                         static_cast<Kind>(rng.below(max_kind + 1)));
  for (std::size_t i = depth; i-- > 0;) {
    const Env& b = nodes[i];
    iw = b.tag() == Env::Tag::ETVar ? ik_kind(iw, b.bound()) : ik_var(iw, b.annot());
  }
  return iw;
}

std::optional<EnvSubst> gen_env_subst(Rng& rng, const Env& before, const GenConfig& config) {
  const std::vector<Env> nodes = spine_of(before);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].tag() == Env::Tag::ETVar) candidates.push_back(i);
  }
  while (!candidates.empty()) {
    const std::size_t pick = rng.below(candidates.size());
    const std::size_t at = candidates[pick];
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
    const Env& prefix = nodes[at].rest();
    const Kind k = nodes[at].bound();
    std::optional<EnvSubst> es;
    for (int attempt = 0; attempt < 16 && !es; ++attempt) {
      const Typ t = gen_wf_type(rng, rng.between(1, config.max_type_nodes),
                                static_cast<Index>(prefix.type_bindings()), config.max_kind);
      es = es_here(prefix, t, k);
    }
    if (!es) continue;
    for (std::size_t i = at; i-- > 0;) {
      const Env& b = nodes[i];
      *es = b.tag() == Env::Tag::ETVar ? es_kind(*es, b.bound()) : es_var(*es, b.annot());
    }
    return es;
  }
  return std::nullopt;
}

std::optional<Narrow> gen_narrow(Rng& rng, const Env& before) {
  const std::vector<Env> nodes = spine_of(before);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].tag() == Env::Tag::ETVar && nodes[i].bound() > 0) candidates.push_back(i);
  }
  if (candidates.empty()) return std::nullopt;
  const std::size_t at = candidates[rng.below(candidates.size())];
  const Kind k = nodes[at].bound();
  auto nw = narrow_0(nodes[at].rest(), k, static_cast<Kind>(rng.below(k)));
  for (std::size_t i = at; nw && i-- > 0;) {
    const Env& b = nodes[i];
    nw = b.tag() == Env::Tag::ETVar ? narrow_extend_kind(*nw, b.bound())
                                    : narrow_extend_var(*nw, b.annot());
  }
  return nw;
}

namespace {

bool typed_as(const Env& env, const Term& t, const Typ& expected) {
  const auto r = infer_type(env, t);
  return r.ok() && r.value() == expected;
}

bool type_redexes_ok(const Env& env, const Term& t) {
  switch (t.tag()) {
    case Term::Tag::Var:
      return true;
    case Term::Tag::Abs:
      return type_redexes_ok(env.with_var(t.annot()), t.body());
    case Term::Tag::TAbs:
      return type_redexes_ok(env.with_tvar(t.bound()), t.body());
    case Term::Tag::App:
      return type_redexes_ok(env, t.fn()) && type_redexes_ok(env, t.arg());
    case Term::Tag::TApp:
      if (t.fn().is_tabs() &&
          !check_subst_typ_lemma(env, t.fn().bound(), t.fn().body(), t.type_arg())) {
        return false;
      }
      return type_redexes_ok(env, t.fn());
  }
  return true;
}

}  // namespace

bool check_weakening(const InsertKind& iw, const Term& t, const Typ& type) {
  return typed_as(iw.after, shift_typ(iw.position, t), tshift(iw.position, type));
}

bool check_weakening_var(const Env& env, const Typ& extra, const Term& t, const Typ& type) {
  return typed_as(env.with_var(extra), shift(0, t), type);
}

bool check_subst_lemmas(const Env& env, Index x, const Term& t, const Term& u) {
  const auto declared = get_var(env, x);
  const auto t_type = infer_type(env, t);
  if (!t_type.ok()) return true;
  if (!type_redexes_ok(env, t)) return false;
  if (!declared) return true;
  const Env outer = remove_var(env, x);
  if (!typed_as(outer, u, *declared)) return true;
  return typed_as(outer, subst(t, x, u), t_type.value());
}

bool check_subst_typ_lemma(const Env& env, Kind k, const Term& t, const Typ& replacement) {
  const auto t_type = infer_type(env.with_tvar(k), t);
  if (!t_type.ok() || !check_kinding(env, replacement, k)) return true;
  return typed_as(env, subst_typ(t, 0, replacement), tsubst(t_type.value(), 0, replacement));
}

bool check_narrowing(const Narrow& nw, const Term& t, const Typ& type) {
  return typed_as(nw.after, t, type);
}

bool check_env_subst(const EnvSubst& es, const Term& t, const Typ& type) {
  return typed_as(es.after, subst_typ(t, es.position, es.replacement),
                  tsubst(type, es.position, es.replacement));
}

bool check_kinding_transitive(const Env& env, const Typ& type, Kind k, Kind k_up) {
  if (k_up < k || !kinding_search_oracle(env, type, k, k)) return true;
  return kinding_search_oracle(env, type, k_up, k_up);
}

bool check_kinding_wf(const Env& env, const Typ& type) {
  if (!infer_kind(env, type)) return true;
  return wf_env(env) && wf_typ(env, type);
}

bool check_regularity(const Env& env, const Term& t) {
  const auto r = infer_type(env, t);
  if (!r.ok()) return true;
  return infer_kind(env, r.value()).has_value();
}

}  // namespace fpred::testkit
