#ifndef FPRED_TESTKIT_LEMMAS_HPP
#define FPRED_TESTKIT_LEMMAS_HPP

#include <optional>

#include "fpred/env.hpp"
#include "fpred/syntax.hpp"
#include "fpred/testkit/generate.hpp"

namespace fpred::testkit {

/// `after` is `before` with one ETVar inserted so that it becomes type
/// variable `position`.
struct InsertKind {
  Index position;
  Env before;
  Env after;
};

InsertKind ik_top(const Env& env, Kind k);
InsertKind ik_kind(const InsertKind& iw, Kind k);
InsertKind ik_var(const InsertKind& iw, const Typ& type);

/// Structural validation of the invariant, independent of the constructors.
bool is_valid(const InsertKind& iw);

/// `after` is `before` with type variable `position` removed and replaced by
/// `replacement` in every later binding.
struct EnvSubst {
  Index position;
  Typ replacement;
  Env before;
  Env after;
};

/// nullopt unless `replacement` has kind `k` in `env`.
std::optional<EnvSubst> es_here(const Env& env, const Typ& replacement, Kind k);
EnvSubst es_var(const EnvSubst& es, const Typ& type);
EnvSubst es_kind(const EnvSubst& es, Kind k);

/// `after` is `before` with the bound of type variable `position` strictly
/// lowered.
struct Narrow {
  Index position;
  Env before;
  Env after;
};

/// nullopt unless lowered < k.
std::optional<Narrow> narrow_0(const Env& env, Kind k, Kind lowered);
Narrow narrow_extend_kind(const Narrow& nw, Kind k);
/// nullopt unless `type` is well formed in nw.after.
std::optional<Narrow> narrow_extend_var(const Narrow& nw, const Typ& type);

bool is_valid(const Narrow& nw);

// Random instances over a given context. The insertion/substitution/narrowing
// point is drawn uniformly among the admissible positions.
InsertKind gen_insert_kind(Rng& rng, const Env& before, Kind max_kind);
std::optional<EnvSubst> gen_env_subst(Rng& rng, const Env& before, const GenConfig& config);
std::optional<Narrow> gen_narrow(Rng& rng, const Env& before);

// Lemma checks. Each returns whether the conclusion holds, given that the
// caller established the hypotheses listed with it.

/// Hyp: infer_type(iw.before, t) = U.
bool check_weakening(const InsertKind& iw, const Term& t, const Typ& type);

/// Hyp: infer_type(env, t) = U and wf_typ(env, V).
bool check_weakening_var(const Env& env, const Typ& extra, const Term& t, const Typ& type);

/// Term substitution: when x is bound in env, t is well typed in env and u has
/// type get_var(env, x) in remove_var(env, x), then subst(t, x, u) keeps the
/// type of t in remove_var(env, x). Also checks the type-substitution lemma at
/// every type-application redex of t. Unmet hypotheses make it vacuously true.
bool check_subst_lemmas(const Env& env, Index x, const Term& t, const Term& u);

/// Type substitution: when t has type U in ETVar(env, k) and P has kind k in
/// env, subst_typ(t, 0, P) has type tsubst(U, 0, P) in env. Vacuously true
/// otherwise.
bool check_subst_typ_lemma(const Env& env, Kind k, const Term& t, const Typ& replacement);

/// Hyp: infer_type(nw.before, t) = U.
bool check_narrowing(const Narrow& nw, const Term& t, const Typ& type);

/// Hyp: infer_type(es.before, t) = U.
bool check_env_subst(const EnvSubst& es, const Term& t, const Typ& type);

/// If the search oracle derives kind k, it derives every k' >= k.
bool check_kinding_transitive(const Env& env, const Typ& type, Kind k, Kind k_up);

/// A kindable type lives in a well-formed context and is itself well formed.
bool check_kinding_wf(const Env& env, const Typ& type);

/// A well-typed term's type is kindable.
bool check_regularity(const Env& env, const Term& t);

}  // namespace fpred::testkit

#endif  // FPRED_TESTKIT_LEMMAS_HPP
