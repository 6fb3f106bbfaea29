#include <gtest/gtest.h>

#include "builders.hpp"
#include "fpred/typecheck.hpp"

namespace fpred {
namespace {

using namespace build;

TEST(InferKind, Examples) {
  EXPECT_EQ(infer_kind(empty(), all(0, X(0))), 1u);
  // T_All takes max(k + 1, k_body) at each quantifier: max(1, max(1, 0)).
  EXPECT_EQ(infer_kind(empty(), all(0, all(0, X(1)))), 1u);
  EXPECT_EQ(infer_kind(empty(), X(0)), std::nullopt);
  EXPECT_EQ(infer_kind(empty().with_tvar(3), arr(X(0), all(1, X(0)))), 3u);
  EXPECT_EQ(infer_kind(empty(), all(2, arr(X(0), all(0, X(0))))), 3u);
  EXPECT_EQ(infer_kind(empty().with_var(X(0)), all(0, X(0))), std::nullopt);
}

TEST(CheckKinding, Examples) {
  EXPECT_TRUE(check_kinding(empty().with_tvar(0), X(0), 5));
  EXPECT_FALSE(check_kinding(empty(), all(0, X(0)), 0));
  EXPECT_TRUE(check_kinding(empty(), arr(all(0, X(0)), all(1, X(0))), 2));
  EXPECT_FALSE(check_kinding(empty(), arr(all(0, X(0)), all(1, X(0))), 1));
  EXPECT_FALSE(check_kinding(empty().with_tvar(2), X(0), 1));
}

TEST(KindingSearchOracle, Examples) {
  EXPECT_TRUE(kinding_search_oracle(empty(), all(0, X(0)), 1, 4));
  EXPECT_FALSE(kinding_search_oracle(empty(), X(0), 0, 4));
  EXPECT_TRUE(kinding_search_oracle(empty(), all(0, X(0)), 3, 4));
  EXPECT_FALSE(kinding_search_oracle(empty(), all(0, X(0)), 0, 4));
  EXPECT_FALSE(kinding_search_oracle(empty(), all(0, X(0)), 5, 4));
}

TEST(InferType, Examples) {
  const Typ poly = all(0, X(0));
  auto r = infer_type(empty().with_var(poly), v(0));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value(), poly);

  const Term id = tlam(1, lam(X(0), v(0)));
  r = infer_type(empty(), id);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value(), all(1, arr(X(0), X(0))));

  r = infer_type(empty(), tapp(id, poly));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value(), arr(poly, poly));
}

TEST(InferType, ShiftsVariableTypesPastTypeBindings) {
  const Env e = empty().with_tvar(0).with_var(X(0));
  auto r = infer_type(e, tlam(0, v(0)));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value(), all(0, X(1)));
}

struct ErrorCase {
  const char* name;
  Env env;
  Term term;
  TypeErrorKind kind;
  std::vector<unsigned> location;
};

TEST(InferType, Errors) {
  const Typ poly = all(0, X(0));
  const Env with_x = empty().with_tvar(0).with_var(X(0));
  const std::vector<ErrorCase> cases = {
      {"unbound var", empty(), v(0), TypeErrorKind::UnboundTermVar, {}},
      {"unbound type in annotation", empty(), lam(X(0), v(0)), TypeErrorKind::UnboundTypeVar, {}},
      {"unbound type argument", empty().with_var(poly), tapp(v(0), X(3)),
       TypeErrorKind::UnboundTypeVar, {}},
      {"apply non-function", with_x, app(v(0), v(0)), TypeErrorKind::NotAnArrow, {}},
      {"instantiate non-forall", with_x, tapp(v(0), X(0)), TypeErrorKind::NotAForall, {}},
      {"argument mismatch", with_x.with_var(arr(poly, X(0))), app(v(0), v(1)),
       TypeErrorKind::ArgTypeMismatch, {}},
      // Predicativity: All 0 X has kind 1, too big for a bound of 0.
      {"impredicative instantiation", empty().with_var(poly), tapp(v(0), poly),
       TypeErrorKind::KindTooLarge, {}},
      {"nested", with_x, lam(X(0), app(v(1), v(0))), TypeErrorKind::NotAnArrow, {0}},
      {"right of app", with_x.with_var(arr(X(0), X(0))), app(v(0), app(v(1), v(1))),
       TypeErrorKind::NotAnArrow, {1}},
      {"ill-formed context", empty().with_var(X(0)), v(0), TypeErrorKind::IllFormedEnv, {}},
  };
  for (const auto& c : cases) {
    const auto r = infer_type(c.env, c.term);
    ASSERT_FALSE(r.ok()) << c.name;
    EXPECT_EQ(r.error().kind, c.kind) << c.name << ": " << r.error().detail;
    EXPECT_EQ(r.error().location, c.location) << c.name;
  }
}

TEST(InferType, InstantiationAtBoundIsAllowed) {
  // All 0 X has kind 1, so it instantiates a quantifier bounded by 1.
  const Env e = empty().with_var(all(1, X(0)));
  const auto r = infer_type(e, tapp(v(0), all(0, X(0))));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value(), all(0, X(0)));
}

}  // namespace
}  // namespace fpred
