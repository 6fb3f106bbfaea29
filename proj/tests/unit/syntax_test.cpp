#include <gtest/gtest.h>

#include "builders.hpp"
#include "fpred/sexp.hpp"

namespace fpred {
namespace {

using namespace build;

TEST(TShift, Examples) {
  EXPECT_EQ(tshift(0, X(0)), X(1));
  EXPECT_EQ(tshift(1, X(0)), X(0));
  EXPECT_EQ(tshift(0, all(2, X(0))), all(2, X(0)));
  EXPECT_EQ(tshift(0, arr(X(0), all(1, arr(X(0), X(1))))), arr(X(1), all(1, arr(X(0), X(2)))));
}

TEST(TSubst, Examples) {
  const Typ u = arr(X(3), X(0));
  EXPECT_EQ(tsubst(X(0), 0, u), u);
  EXPECT_EQ(tsubst(X(2), 0, u), X(1));
  EXPECT_EQ(tsubst(X(0), 1, u), X(0));
  EXPECT_EQ(tsubst(all(1, X(1)), 0, u), all(1, tshift(0, u)));
  EXPECT_EQ(tsubst(all(1, X(1)), 0, u), all(1, arr(X(4), X(1))));
}

TEST(Shift, Examples) {
  const Typ t = X(0);
  EXPECT_EQ(shift(0, v(0)), v(1));
  EXPECT_EQ(shift(0, lam(t, v(0))), lam(t, v(0)));
  EXPECT_EQ(shift(0, tlam(1, v(0))), tlam(1, v(1)));
  EXPECT_EQ(shift(2, app(v(1), v(2))), app(v(1), v(3)));
}

TEST(ShiftTyp, Examples) {
  EXPECT_EQ(shift_typ(0, v(3)), v(3));
  EXPECT_EQ(shift_typ(0, lam(X(0), v(0))), lam(X(1), v(0)));
  EXPECT_EQ(shift_typ(0, tlam(2, lam(X(0), v(0)))), tlam(2, lam(X(0), v(0))));
  EXPECT_EQ(shift_typ(0, tapp(v(0), X(0))), tapp(v(0), X(1)));
}

TEST(Subst, Examples) {
  const Term u = lam(X(0), v(0));
  const Typ t = X(0);
  EXPECT_EQ(subst(v(0), 0, u), u);
  EXPECT_EQ(subst(v(2), 1, u), v(1));
  EXPECT_EQ(subst(v(0), 1, u), v(0));
  EXPECT_EQ(subst(lam(t, v(1)), 0, v(5)), lam(t, v(6)));
  // Under a type abstraction the substituend's types are shifted.
  EXPECT_EQ(subst(tlam(0, v(0)), 0, lam(X(0), v(0))), tlam(0, lam(X(1), v(0))));
}

TEST(SubstTyp, Examples) {
  const Typ u = arr(X(1), X(1));
  EXPECT_EQ(subst_typ(v(0), 0, u), v(0));
  EXPECT_EQ(subst_typ(lam(X(0), v(0)), 0, u), lam(u, v(0)));
  EXPECT_EQ(subst_typ(tlam(1, lam(X(0), v(0))), 0, u), tlam(1, lam(X(0), v(0))));
  EXPECT_EQ(subst_typ(tlam(1, lam(X(1), v(0))), 0, u), tlam(1, lam(tshift(0, u), v(0))));
  EXPECT_EQ(subst_typ(tapp(v(0), X(2)), 0, u), tapp(v(0), X(1)));
}

TEST(Syntax, NodeCountAndEquality) {
  EXPECT_EQ(X(0).node_count(), 1u);
  EXPECT_EQ(all(0, arr(X(0), X(0))).node_count(), 4u);
  EXPECT_EQ(lam(X(0), v(0)).node_count(), 3u);
  EXPECT_NE(lam(X(0), v(0)), lam(X(1), v(0)));
  EXPECT_NE(tlam(0, v(0)), tlam(1, v(0)));
  EXPECT_EQ(app(v(0), v(1)).hash(), app(v(0), v(1)).hash());
}

TEST(Sexp, Printing) {
  EXPECT_EQ(to_sexp(all(0, arr(X(0), X(1)))), "(all 0 (arrow (tvar 0) (tvar 1)))");
  EXPECT_EQ(to_sexp(tapp(tlam(1, lam(X(0), v(0))), X(2))),
            "(tapp (tabs 1 (abs (tvar 0) (var 0))) (tvar 2))");
  EXPECT_EQ(to_sexp(app(v(0), v(1))), "(app (var 0) (var 1))");
  EXPECT_EQ(to_sexp(Env().with_tvar(2).with_var(X(0))), "(evar (etvar (empty) 2) (tvar 0))");
}

TEST(Sexp, RoundTrip) {
  const Term t = tapp(tlam(1, lam(arr(X(0), all(2, X(1))), app(v(0), v(3)))), all(0, X(0)));
  const auto parsed = parse_sexp_term(to_sexp(t));
  ASSERT_TRUE(parsed.ok());
  EXPECT_EQ(parsed.value(), t);
  const Env e = Env().with_tvar(1).with_var(arr(X(0), X(0)));
  const auto pe = parse_sexp_env(to_sexp(e));
  ASSERT_TRUE(pe.ok());
  EXPECT_EQ(pe.value(), e);
  const auto ws = parse_sexp_typ("  ( arrow (tvar 0)\n (tvar 1) ) ");
  ASSERT_TRUE(ws.ok());
  EXPECT_EQ(ws.value(), arr(X(0), X(1)));
}

TEST(Sexp, Errors) {
  EXPECT_FALSE(parse_sexp_typ("(tvar)").ok());
  EXPECT_FALSE(parse_sexp_typ("(tvar 0) junk").ok());
  EXPECT_FALSE(parse_sexp_term("(lam (tvar 0) (var 0))").ok());
  EXPECT_FALSE(parse_sexp_term("(var -1)").ok());
  EXPECT_FALSE(parse_sexp_env("(evar (empty))").ok());
}

}  // namespace
}  // namespace fpred
