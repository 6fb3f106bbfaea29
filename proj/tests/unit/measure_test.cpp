#include <gtest/gtest.h>

#include "builders.hpp"
#include "fpred/measure.hpp"

namespace fpred {
namespace {

using namespace build;

TEST(KindBag, CanonicalForm) {
  EXPECT_EQ(KindBag{}.to_string(), "{}");
  EXPECT_EQ((KindBag{2, 0, 2}).to_string(), "{0:1, 2:2}");
  EXPECT_EQ((KindBag{2, 0, 2}), (KindBag{2, 2, 0}));
  EXPECT_EQ((KindBag{1, 3, 1}).descending(), (std::vector<Kind>{3, 1, 1}));
  EXPECT_EQ((KindBag{1, 3, 1}).size(), 3u);
  EXPECT_EQ((KindBag{1} + KindBag{1, 2}), (KindBag{1, 1, 2}));
}

TEST(KindsOf, Examples) {
  EXPECT_EQ(kinds_of(X(3)), KindBag{});
  EXPECT_EQ(kinds_of(all(2, arr(X(0), all(1, X(0))))), (KindBag{2, 1}));
  EXPECT_EQ(kinds_of(all(0, all(0, X(1)))), (KindBag{0, 0}));
}

TEST(Depth, Examples) {
  EXPECT_EQ(depth(X(0)), 1u);
  EXPECT_EQ(depth(arr(X(0), X(1))), 2u);
  EXPECT_EQ(depth(all(0, X(0))), 2u);
  EXPECT_EQ(depth(all(0, arr(X(0), all(1, X(0))))), 4u);
}

TEST(TermSize, Examples) {
  EXPECT_EQ(term_size(v(7)), 0u);
  EXPECT_EQ(term_size(app(v(0), v(1))), 1u);
  EXPECT_EQ(term_size(lam(X(0), app(v(0), v(1)))), 2u);
  // Annotations and type arguments do not count.
  EXPECT_EQ(term_size(tapp(tlam(0, lam(all(0, arr(X(0), X(0))), v(0))), X(5))), 3u);
}

TEST(MulSum, Examples) {
  EXPECT_EQ(mul_sum(0, KindBag{1, 2}), KindBag{});
  EXPECT_EQ(mul_sum(2, KindBag{1}), (KindBag{1, 1}));
  EXPECT_EQ(mul_sum(3, KindBag{0, 0}), (KindBag{0, 0, 0, 0, 0, 0}));
}

TEST(MultisetLt, Examples) {
  EXPECT_TRUE(multiset_lt(KindBag{0, 0, 0}, KindBag{1}));
  EXPECT_FALSE(multiset_lt(KindBag{1}, KindBag{1}));
  EXPECT_TRUE(multiset_lt(KindBag{2, 1}, KindBag{2, 2}));
  EXPECT_TRUE(multiset_lt(KindBag{}, KindBag{0}));
  EXPECT_FALSE(multiset_lt(KindBag{0}, KindBag{}));
  EXPECT_TRUE(multiset_lt(KindBag{2}, KindBag{2, 0}));
  EXPECT_FALSE(multiset_lt(KindBag{3}, KindBag{2, 2, 2}));
}

TEST(TypeOrder, Examples) {
  const std::vector<Typ> samples = {X(0), all(1, X(0)), arr(X(0), X(1)),
                                    all(0, arr(X(0), all(2, X(0))))};
  for (const Typ& a : samples) {
    for (const Typ& b : samples) {
      EXPECT_TRUE(type_order(a, arr(a, b))) << a << " " << b;
      EXPECT_TRUE(type_order(b, arr(a, b))) << a << " " << b;
    }
    EXPECT_FALSE(type_order(a, a));
    EXPECT_TRUE(ordtyp(a, a));
  }
  EXPECT_FALSE(type_order(X(0), X(1)));
  EXPECT_FALSE(ordtyp(X(0), X(1)));
  // A bigger bag wins over depth.
  EXPECT_TRUE(type_order(arr(arr(X(0), X(0)), X(0)), all(0, X(0))));
  // Instantiation shrinks the bag.
  EXPECT_TRUE(type_order(arr(all(0, X(0)), X(0)), all(1, arr(X(0), X(0)))));
}

TEST(HerLess, Examples) {
  const Typ u = all(0, X(0));
  const Typ a = X(0);
  const Typ b = all(1, X(0));
  EXPECT_TRUE(her_less({u, v(0)}, {u, app(v(0), v(1))}));
  for (const Term& t : {v(0), lam(a, app(v(0), v(0)))}) {
    for (const Term& s : {v(0), app(v(0), v(1))}) {
      EXPECT_TRUE(her_less({a, t}, {arr(a, b), s}));
    }
  }
  EXPECT_FALSE(her_less({u, v(0)}, {u, v(0)}));
  // Equal measures, different types: neither is below the other.
  EXPECT_FALSE(her_less({X(0), v(0)}, {X(1), v(0)}));
}

}  // namespace
}  // namespace fpred
