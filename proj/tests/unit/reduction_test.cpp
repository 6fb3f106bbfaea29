#include <gtest/gtest.h>

#include "builders.hpp"
#include "fpred/reduction.hpp"
#include "fpred/testkit/enumerate.hpp"
#include "fpred/typecheck.hpp"

namespace fpred {
namespace {

using namespace build;

TEST(Step, Examples) {
  const Typ t = X(0);
  const Term u = lam(X(1), v(4));
  EXPECT_EQ(step(app(lam(t, v(0)), u)), u);
  EXPECT_EQ(step(tapp(tlam(1, v(0)), t)), v(0));
  EXPECT_EQ(step(v(3)), std::nullopt);
}

TEST(Step, LeftmostOutermost) {
  const Typ t = X(0);
  const Term inner = app(lam(t, v(0)), v(0));
  // The outer redex goes first.
  EXPECT_EQ(step(app(lam(t, inner), v(2))), app(lam(t, v(0)), v(2)));
  // Function side before argument side.
  const auto s = step_traced(app(app(v(0), inner), inner));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->path, (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(s->rule, RedexRule::AppAbs);
  EXPECT_EQ(s->after, app(app(v(0), v(0)), inner));
}

TEST(NormalizeFuel, Examples) {
  const Typ t = X(0);
  auto r = normalize_fuel(app(lam(t, v(0)), v(0)), 10);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value(), v(0));

  r = normalize_fuel(v(0), 0);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value(), v(0));

  // (\a. \b. a) x y, with x = Var 0 and y = Var 1 free: two steps give x.
  r = normalize_fuel(app(app(lam(t, lam(X(1), v(1))), v(0)), v(1)), 10);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value(), v(0));
}

TEST(NormalizeFuel, Exhaustion) {
  const Typ t = X(0);
  const Term delta = lam(t, app(v(0), v(0)));
  const auto r = normalize_fuel(app(delta, delta), 25);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().fuel, 25u);
  EXPECT_EQ(r.error().reached, app(delta, delta));
  // A redex with exactly enough fuel.
  EXPECT_TRUE(normalize_fuel(app(lam(t, v(0)), v(0)), 1).ok());
  EXPECT_FALSE(normalize_fuel(app(lam(t, v(0)), v(0)), 0).ok());
}

TEST(NormalForms, Examples) {
  const Typ t = X(0);
  EXPECT_TRUE(is_normal(lam(t, v(0))));
  EXPECT_FALSE(is_neutral(app(lam(t, v(0)), v(1))));
  EXPECT_TRUE(is_normal(tapp(v(0), t)));
  EXPECT_TRUE(is_neutral(tapp(v(0), t)));
  EXPECT_FALSE(is_neutral(lam(t, v(0))));
  EXPECT_TRUE(is_normal(tlam(0, app(v(0), lam(t, v(0))))));
  EXPECT_FALSE(is_normal(tapp(tlam(0, v(0)), t)));
  // Stuck but not normal: a type abstraction in function position.
  EXPECT_FALSE(is_normal(app(tlam(0, v(0)), v(0))));
  EXPECT_EQ(step(app(tlam(0, v(0)), v(0))), std::nullopt);
}

TEST(Trace, Format) {
  const Typ t = X(0);
  EXPECT_EQ(path_to_string({}), ".");
  EXPECT_EQ(path_to_string({0, 1, 0}), "0.1.0");
  const auto tr = normalize_traced(app(lam(t, app(lam(t, v(0)), v(0))), v(3)), 10);
  ASSERT_TRUE(tr.ok());
  EXPECT_EQ(format_trace(tr.value()),
            ". AppAbs (app (abs (tvar 0) (var 0)) (var 3))\n"
            ". AppAbs (var 3)\n");
  const auto tt = normalize_traced(lam(t, tapp(tlam(0, v(0)), t)), 10);
  ASSERT_TRUE(tt.ok());
  EXPECT_EQ(format_trace(tt.value()), "0 TappTabs (abs (tvar 0) (var 0))\n");
}

// On well-typed terms a step applies exactly when the term is not normal,
// and every step keeps the type.
TEST(Reduction, ProgressAndPreservationOnSmallClosedTerms) {
  testkit::TermEnumerator en({1, 1});
  std::size_t seen = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& tt : en.synth(Env(), n)) {
      ++seen;
      const auto next = step(tt.term);
      ASSERT_EQ(is_normal(tt.term), !next.has_value()) << tt.term;
      if (is_neutral(tt.term)) {
        EXPECT_TRUE(is_normal(tt.term));
      }
      if (next) {
        const auto ty = infer_type(Env(), *next);
        ASSERT_TRUE(ty.ok()) << *next;
        EXPECT_EQ(ty.value(), tt.type);
      }
    }
  }
  EXPECT_GT(seen, 1000u);
}

}  // namespace
}  // namespace fpred
