#include <gtest/gtest.h>

#include "builders.hpp"
#include "fpred/frontend.hpp"
#include "fpred/testkit/enumerate.hpp"
#include "fpred/testkit/generate.hpp"

namespace fpred::frontend {
namespace {

using namespace build;

Term term_ok(std::string_view src, const Scope& scope = {}) {
  const auto r = parse_term(src, scope);
  EXPECT_TRUE(r.ok()) << src << ": " << (r.ok() ? "" : r.error().message);
  return r.ok() ? r.value() : v(999);
}

TEST(ParseType, Examples) {
  auto r = parse_type("forall X:0. X -> X");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value(), all(0, arr(X(0), X(0))));
  // Arrows associate to the right.
  r = parse_type("A -> B -> A", {{}, {"A", "B"}});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value(), arr(X(1), arr(X(0), X(1))));
  r = parse_type("(A -> B) -> A", {{}, {"A", "B"}});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value(), arr(arr(X(1), X(0)), X(1)));
  EXPECT_FALSE(parse_type("X").ok());
  EXPECT_FALSE(parse_type("forall X:0 X").ok());
  EXPECT_FALSE(parse_type("forall X:99999999999999999999999. X").ok());
}

TEST(ParseTerm, Examples) {
  EXPECT_EQ(term_ok("\\x: forall X:0. X . x"), lam(all(0, X(0)), v(0)));
  EXPECT_EQ(term_ok("/\\X:1. \\x:X. x"), tlam(1, lam(X(0), v(0))));
  EXPECT_EQ(term_ok("/\\X:0. /\\Y:0. \\x:X. \\y:Y. x"),
            tlam(0, tlam(0, lam(X(1), lam(X(0), v(1))))));
  // Application associates to the left and mixes with type application.
  const Scope s{{"f", "a"}, {"T"}};
  EXPECT_EQ(term_ok("f a a", s), app(app(v(1), v(0)), v(0)));
  EXPECT_EQ(term_ok("f [T] a", s), app(tapp(v(1), X(0)), v(0)));
  EXPECT_EQ(term_ok("f (a a)", s), app(v(1), app(v(0), v(0))));
  // Shadowing.
  EXPECT_EQ(term_ok("\\a:T. a", s), lam(X(0), v(0)));
}

TEST(ParseTerm, Errors) {
  const auto r = parse_term("\\x:X. x");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().span.start, (SourcePos{1, 4}));
  EXPECT_FALSE(parse_term("y").ok());
  EXPECT_FALSE(parse_term("(\\x:forall X:0. X. x").ok());
  EXPECT_FALSE(parse_term("").ok());
  EXPECT_FALSE(parse_term("\\x:forall X:0. X. x )").ok());
}

TEST(ParseProgram, DeclarationsAndComments) {
  const auto r = parse_program(
      "-- a context\n"
      "assume T :* 0\n"
      "assume y : T   -- trailing\n"
      "assume f : T -> T\n"
      "f y\n");
  ASSERT_TRUE(r.ok()) << r.error().message;
  const Program& p = r.value();
  ASSERT_EQ(p.decls.size(), 3u);
  EXPECT_EQ(p.env, empty().with_tvar(0).with_var(X(0)).with_var(arr(X(0), X(0))));
  EXPECT_EQ(p.scope.terms, (std::vector<std::string>{"y", "f"}));
  EXPECT_EQ(p.scope.types, (std::vector<std::string>{"T"}));
  ASSERT_TRUE(p.term.has_value());
  EXPECT_EQ(*p.term, app(v(0), v(1)));
  EXPECT_EQ(p.spans.span.start, (SourcePos{5, 1}));
  EXPECT_EQ(p.spans.at({1}).start, (SourcePos{5, 3}));
  // Paths past the tree fall back to the deepest node.
  EXPECT_EQ(p.spans.at({1, 0, 0}).start, (SourcePos{5, 3}));
}

TEST(ParseProgram, KindColonAccepted) {
  const auto r = parse_program("assume X : 2\nassume Y :* 1\n");
  ASSERT_TRUE(r.ok()) << r.error().message;
  EXPECT_EQ(r.value().env, empty().with_tvar(2).with_tvar(1));
  EXPECT_FALSE(r.value().term.has_value());
}

TEST(ParseProgram, ErrorSpan) {
  const auto r = parse_program("assume T :* 0\n\\x:T. z\n");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().span.start, (SourcePos{2, 7}));
  EXPECT_EQ(to_string(r.error().span), "2:7-2:8");
}

TEST(Print, Examples) {
  EXPECT_EQ(print_term(v(0), {{"x"}, {}}), "x");
  EXPECT_EQ(print_term(tlam(1, lam(X(0), v(0)))), "/\\X0:1. \\x0:X0. x0");
  EXPECT_EQ(print_type(all(0, arr(X(0), X(0)))), "forall Y0:0. Y0 -> Y0");
  EXPECT_EQ(print_type(arr(arr(X(0), X(0)), X(0)), {{}, {"T"}}), "(T -> T) -> T");
  EXPECT_EQ(print_term(lam(all(0, X(0)), v(0))), "\\x0: forall Y0:0. Y0 . x0");
  // Fresh names skip names in scope.
  EXPECT_EQ(print_term(lam(X(0), v(1)), {{"x0"}, {"T"}}), "\\x1:T. x0");
  EXPECT_EQ(print_term(v(3)), "?x3");
}

TEST(Print, Application) {
  const Scope s{{"f", "a"}, {"T"}};
  EXPECT_EQ(print_term(app(app(v(1), v(0)), v(0)), s), "f a a");
  EXPECT_EQ(print_term(app(v(1), app(v(0), v(0))), s), "f (a a)");
  EXPECT_EQ(print_term(app(tapp(v(1), X(0)), v(0)), s), "f [T] a");
  EXPECT_EQ(print_term(app(lam(X(0), v(0)), v(0)), s), "(\\x0:T. x0) a");
}

void expect_round_trip(const Term& t, const Scope& scope) {
  const std::string text = print_term(t, scope);
  const auto back = parse_term(text, scope);
  ASSERT_TRUE(back.ok()) << text << ": " << back.error().message;
  EXPECT_EQ(back.value(), t) << text;
}

TEST(RoundTrip, GeneratedTerms) {
  testkit::Rng rng(11);
  // The generator may use one index past its scope, so name one more.
  const Scope scope{{"a", "b", "c"}, {"R", "S", "T"}};
  for (int i = 0; i < 500; ++i) {
    const Term t = testkit::gen_raw_term(rng, 12, 2, 2, 3);
    expect_round_trip(t, scope);
  }
}

TEST(RoundTrip, EnumeratedTerms) {
  const Env env = empty().with_tvar(1).with_var(X(0));
  const Scope scope{{"y"}, {"A"}};
  const auto terms = testkit::enumerate_terms(env, arr(X(0), X(0)), 4);
  ASSERT_FALSE(terms.empty());
  for (const Term& t : terms) expect_round_trip(t, scope);
}

TEST(RemoveTermName, DropsByIndex) {
  const Scope s = remove_term_name({{"a", "b", "c"}, {"T"}}, 0);
  EXPECT_EQ(s.terms, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(remove_term_name({{"a", "b", "c"}, {}}, 2).terms,
            (std::vector<std::string>{"b", "c"}));
}

}  // namespace
}  // namespace fpred::frontend
