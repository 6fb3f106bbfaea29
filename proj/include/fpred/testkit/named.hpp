#ifndef FPRED_TESTKIT_NAMED_HPP
#define FPRED_TESTKIT_NAMED_HPP

#include <memory>
#include <string>
#include <vector>

#include "fpred/syntax.hpp"
#include "fpred/testkit/generate.hpp"

namespace fpred::testkit::named {

// A deliberately naive named representation with textbook capture-avoiding
// substitution. It shares no code with the de Bruijn kernel and serves as an
// oracle for subst and subst_typ.

struct NTyp;
struct NTerm;
using NTypPtr = std::shared_ptr<const NTyp>;
using NTermPtr = std::shared_ptr<const NTerm>;

struct NTyp {
  enum class Tag { Var, Arrow, All } tag;
  std::string name;  // Var, All
  Kind bound = 0;    // All
  NTypPtr left, right;
};

struct NTerm {
  enum class Tag { Var, Abs, App, TAbs, TApp } tag;
  std::string name;  // Var, Abs, TAbs
  Kind bound = 0;    // TAbs
  NTypPtr type;      // Abs annotation, TApp argument
  NTermPtr left, right;
};

/// Innermost binding last.
using Names = std::vector<std::string>;

/// Converts to named form. Binder names are drawn at random from a small pool
/// so that shadowing and capture actually occur; a name is never chosen when
/// it would capture a variable the body refers to.
NTypPtr to_named(Rng& rng, const Typ& t, const Names& tctx);
NTermPtr to_named(Rng& rng, const Term& t, const Names& ctx, const Names& tctx);

Typ from_named(const NTypPtr& t, const Names& tctx);
Term from_named(const NTermPtr& t, const Names& ctx, const Names& tctx);

/// [x := u] t
NTermPtr substitute(const NTermPtr& t, const std::string& x, const NTermPtr& u);
/// [X := T] t, acting on the types inside t.
NTermPtr substitute_type(const NTermPtr& t, const std::string& x, const NTypPtr& replacement);

/// subst(t, x, u) computed through the named oracle, for t scoped in a context
/// of `vars` term and `tvars` type variables and u scoped in that context
/// minus x.
Term oracle_subst(Rng& rng, const Term& t, Index x, const Term& u, std::size_t vars,
                  std::size_t tvars);
Term oracle_subst_typ(Rng& rng, const Term& t, Index x, const Typ& replacement,
                      std::size_t vars, std::size_t tvars);

}  // namespace fpred::testkit::named

#endif  // FPRED_TESTKIT_NAMED_HPP
