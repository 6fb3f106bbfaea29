#include <gtest/gtest.h>

#include "builders.hpp"

namespace fpred {
namespace {

using namespace build;

TEST(GetKind, Examples) {
  EXPECT_EQ(get_kind(empty(), 0), std::nullopt);
  EXPECT_EQ(get_kind(empty().with_tvar(2), 0), 2u);
  EXPECT_EQ(get_kind(empty().with_tvar(2).with_var(X(0)), 0), 2u);
  EXPECT_EQ(get_kind(empty().with_tvar(3).with_tvar(1), 1), 3u);
  EXPECT_EQ(get_kind(empty().with_tvar(3).with_tvar(1), 2), std::nullopt);
}

TEST(GetVar, Examples) {
  const Typ t = all(0, X(0));
  EXPECT_EQ(get_var(empty().with_var(t), 0), t);
  EXPECT_EQ(get_var(empty().with_var(X(0)).with_tvar(1), 0), X(1));
  EXPECT_EQ(get_var(empty(), 3), std::nullopt);
  // Only the type bindings inside the requested one shift its type.
  const Env e = empty().with_tvar(0).with_var(X(0)).with_tvar(1).with_var(X(0)).with_tvar(2);
  EXPECT_EQ(get_var(e, 0), X(1));
  EXPECT_EQ(get_var(e, 1), X(2));
}

TEST(RemoveVar, Examples) {
  const Typ t0 = all(0, X(0));
  const Typ t1 = all(1, X(0));
  EXPECT_EQ(remove_var(empty().with_var(t0), 0), empty());
  EXPECT_EQ(remove_var(empty().with_var(t0).with_var(t1), 1), empty().with_var(t1));
  EXPECT_EQ(remove_var(empty().with_tvar(2), 0), empty().with_tvar(2));
  EXPECT_EQ(remove_var(empty().with_var(t0).with_tvar(1), 0), empty().with_tvar(1));
}

TEST(WfTyp, Examples) {
  EXPECT_FALSE(wf_typ(empty(), X(0)));
  EXPECT_TRUE(wf_typ(empty().with_tvar(0), X(0)));
  EXPECT_TRUE(wf_typ(empty(), all(0, X(0))));
  EXPECT_FALSE(wf_typ(empty(), all(0, X(1))));
  // Term bindings do not bind type variables.
  EXPECT_FALSE(wf_typ(empty().with_var(all(0, X(0))), X(0)));
}

TEST(WfEnv, Examples) {
  EXPECT_TRUE(wf_env(empty()));
  EXPECT_FALSE(wf_env(empty().with_var(X(0))));
  EXPECT_TRUE(wf_env(empty().with_tvar(0).with_var(X(0))));
  EXPECT_FALSE(wf_env(empty().with_var(X(0)).with_tvar(0)));
}

TEST(Env, Counts) {
  const Env e = empty().with_tvar(0).with_var(X(0)).with_tvar(1);
  EXPECT_EQ(e.term_bindings(), 1u);
  EXPECT_EQ(e.type_bindings(), 2u);
  EXPECT_EQ(e.length(), 3u);
}

}  // namespace
}  // namespace fpred
