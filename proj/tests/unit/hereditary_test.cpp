#include <gtest/gtest.h>

#include "builders.hpp"
#include "fpred/hereditary.hpp"
#include "fpred/testkit/generate.hpp"
#include "fpred/typecheck.hpp"

namespace fpred {
namespace {

using namespace build;

// Context with one type variable T of kind 0, so T = TVar 0 at the top.
const Env kBase = Env().with_tvar(0);
const Typ kT = X(0);

TEST(IsAbs, Examples) {
  EXPECT_TRUE(is_abs(lam(kT, v(0))));
  EXPECT_TRUE(is_abs(tlam(0, v(0))));
  EXPECT_FALSE(is_abs(v(0)));
  EXPECT_FALSE(is_abs(tapp(v(0), kT)));
  EXPECT_FALSE(is_abs(app(lam(kT, v(0)), v(0))));
}

TEST(Hsubst, VariableClauses) {
  const Term u = lam(kT, v(0));
  EXPECT_EQ(hsubst({kT, v(0), u, 0}), u);
  EXPECT_EQ(hsubst({kT, v(0), u, 1}), v(0));
  EXPECT_EQ(hsubst({kT, v(2), u, 1}), v(1));
}

TEST(Hsubst, Examples) {
  EXPECT_EQ(hsubst({arr(kT, kT), app(v(0), v(1)), lam(kT, v(0)), 0}), v(0));
  const Typ poly_id = all(0, arr(X(0), X(0)));
  EXPECT_EQ(hsubst({poly_id, tapp(v(0), kT), tlam(0, lam(X(0), v(0))), 0}), lam(kT, v(0)));
}

TEST(Hsubst, BinderClauses) {
  // Under an abstraction the substituend is shifted and the index bumped.
  EXPECT_EQ(hsubst({kT, lam(kT, v(1)), v(3), 0}), lam(kT, v(4)));
  // Under a type abstraction the substituend's types are shifted.
  EXPECT_EQ(hsubst({kT, tlam(0, v(0)), lam(X(0), v(0)), 0}), tlam(0, lam(X(1), v(0))));
}

TEST(HsubstTraced, ReportsEveryCall) {
  const auto tr = hsubst_traced({arr(kT, kT), app(v(0), v(1)), lam(kT, v(0)), 0});
  EXPECT_EQ(tr.result, v(0));
  ASSERT_FALSE(tr.calls.empty());
  EXPECT_EQ(tr.calls.front().depth, 0u);
  for (const auto& c : tr.calls) EXPECT_TRUE(c.decreased);
  const std::string report = format_calls(tr.calls);
  EXPECT_EQ(report.rfind("CALL depth=0 bag={} tydepth=2 tsize=1 DECREASE=yes\n", 0), 0u)
      << report;
}

TEST(HsubstGuarded, ThrowsWhenTheMeasureGrows) {
  // Ill-typed on purpose: the created redex sits at a type deeper than the
  // substituted variable's.
  const HsubstInput in{kT, app(v(0), v(0)), lam(arr(kT, kT), app(v(0), v(0))), 0};
  EXPECT_THROW(hsubst_guarded(in), InternalInvariantViolation);
}

TEST(HsubstChecked, Green) {
  // x : T -> T, y : T, target x y, substituend the identity on T.
  const Env env = kBase.with_var(kT).with_var(arr(kT, kT));
  const HsubstInput in{arr(kT, kT), app(v(0), v(1)), lam(kT, v(0)), 0};
  ASSERT_TRUE(precondition_holds(env, kT, in));
  const auto r = hsubst_checked(env, kT, in);
  ASSERT_TRUE(r.ok()) << r.error().detail;
  EXPECT_EQ(r.value(), v(0));
}

TEST(HsubstChecked, PreViolated) {
  const Env env = kBase.with_var(kT).with_var(arr(kT, kT));
  // No variable 5.
  auto r = hsubst_checked(env, kT, {arr(kT, kT), app(v(0), v(1)), lam(kT, v(0)), 5});
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().kind, CheckErrorKind::PreViolated);
  // Non-normal target.
  const Term redex = app(lam(kT, v(0)), app(v(0), v(1)));
  r = hsubst_checked(env, kT, {arr(kT, kT), redex, lam(kT, v(0)), 0});
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().kind, CheckErrorKind::PreViolated);
  // Declared type disagrees with the context.
  r = hsubst_checked(env, kT, {kT, app(v(0), v(1)), v(0), 0});
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().kind, CheckErrorKind::PreViolated);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(v(4)), v(4));
  EXPECT_EQ(normalize(app(lam(kT, v(0)), v(0))), v(0));
  const Typ poly = all(0, X(0));
  EXPECT_EQ(normalize(tapp(tlam(1, lam(X(0), v(0))), poly)), lam(poly, v(0)));
  // Redexes under binders and in arguments.
  EXPECT_EQ(normalize(lam(kT, app(lam(kT, v(0)), v(0)))), lam(kT, v(0)));
  EXPECT_EQ(normalize(app(v(1), app(lam(kT, v(0)), v(0)))), app(v(1), v(0)));
}

TEST(Normalize, Idempotent) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto tt = testkit::gen_well_typed(seed, 12, kBase.with_var(kT));
    const Term once = normalize(tt.term);
    EXPECT_EQ(normalize(once), once) << tt.term;
  }
}

TEST(NormalizeChecked, Green) {
  const Env env = kBase.with_var(kT);
  const Typ poly = all(0, X(0));
  auto r = normalize_checked(env, kT, app(lam(kT, v(0)), v(0)));
  ASSERT_TRUE(r.ok()) << r.error().detail;
  EXPECT_EQ(r.value(), v(0));
  r = normalize_checked(Env(), arr(poly, poly), tapp(tlam(1, lam(X(0), v(0))), poly));
  ASSERT_TRUE(r.ok()) << r.error().detail;
  EXPECT_EQ(r.value(), lam(poly, v(0)));
}

TEST(NormalizeChecked, IllTypedIsPreViolated) {
  const auto r = normalize_checked(kBase.with_var(kT), kT, app(v(0), v(0)));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().kind, CheckErrorKind::PreViolated);
  const auto wrong_goal = normalize_checked(kBase.with_var(kT), arr(kT, kT), v(0));
  ASSERT_FALSE(wrong_goal.ok());
  EXPECT_EQ(wrong_goal.error().kind, CheckErrorKind::PreViolated);
}

// hsubst with the hereditary call in the application clause removed: it
// leaves the redex it creates.
Term lazy_hsubst(const HsubstInput& in) {
  const Term& t = in.target;
  switch (t.tag()) {
    case Term::Tag::Var:
      if (t.index() < in.index) return t;
      if (t.index() == in.index) return in.substituend;
      return v(t.index() - 1);
    case Term::Tag::Abs:
      return lam(t.annot(),
                 lazy_hsubst({in.var_type, t.body(), shift(0, in.substituend), in.index + 1}));
    case Term::Tag::TAbs:
      return tlam(t.bound(), lazy_hsubst({tshift(0, in.var_type), t.body(),
                                          shift_typ(0, in.substituend), in.index}));
    case Term::Tag::TApp: {
      const Term fn = lazy_hsubst({in.var_type, t.fn(), in.substituend, in.index});
      if (fn.is_tabs()) return subst_typ(fn.body(), 0, t.type_arg());
      return tapp(fn, t.type_arg());
    }
    case Term::Tag::App:
      return app(lazy_hsubst({in.var_type, t.fn(), in.substituend, in.index}),
                 lazy_hsubst({in.var_type, t.arg(), in.substituend, in.index}));
  }
  return t;
}

TEST(NormalizeChecked, CatchesAMutantHsubst) {
  // y : T |- (\f:T->T. f y) (\z:T. z)
  const Env env = kBase.with_var(kT);
  const Term t = app(lam(arr(kT, kT), app(v(0), v(1))), lam(kT, v(0)));
  ASSERT_TRUE(normalize_checked(env, kT, t).ok());
  CheckOptions options;
  options.hsubst = lazy_hsubst;
  const auto r = normalize_checked(env, kT, t, options);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().kind, CheckErrorKind::PostNotNormal);
}

TEST(CheckErrorKind, Names) {
  EXPECT_STREQ(to_string(CheckErrorKind::PreViolated), "PreViolated");
  EXPECT_STREQ(to_string(CheckErrorKind::PostOrdtypViolated), "PostOrdtypViolated");
}

}  // namespace
}  // namespace fpred
