#include "fpred/syntax.hpp"

#include <cassert>
#include <ostream>

#include "fpred/sexp.hpp"

namespace fpred {

namespace {

inline std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

////////////////////////////////////////////////////////////////////////////////
// Typ

struct Typ::Node {
  Tag tag;
  std::uint32_t number;  // index for TVar, bound for All
  std::size_t nodes;
  std::size_t hash;
  Typ left;   // dom, or body of All
  Typ right;  // cod
};

Typ Typ::tvar(Index index) {
  return Typ(std::shared_ptr<Node>(
      new Node{Tag::TVar, index, 1, mix(0x11, index), Typ(nullptr), Typ(nullptr)}));
}

Typ Typ::arrow(Typ dom, Typ cod) {
  const std::size_t nodes = 1 + dom.node_count() + cod.node_count();
  const std::size_t h = mix(mix(0x22, dom.hash()), cod.hash());
  return Typ(std::shared_ptr<Node>(
      new Node{Tag::Arrow, 0, nodes, h, std::move(dom), std::move(cod)}));
}

Typ Typ::all(Kind bound, Typ body) {
  const std::size_t nodes = 1 + body.node_count();
  const std::size_t h = mix(mix(0x33, bound), body.hash());
  return Typ(std::shared_ptr<Node>(
      new Node{Tag::All, bound, nodes, h, std::move(body), Typ(nullptr)}));
}

Typ::Tag Typ::tag() const noexcept { return node_->tag; }
Index Typ::index() const noexcept { return node_->number; }
Kind Typ::bound() const noexcept { return node_->number; }
std::size_t Typ::node_count() const noexcept { return node_->nodes; }
std::size_t Typ::hash() const noexcept { return node_->hash; }
const Typ& Typ::dom() const noexcept { return node_->left; }
const Typ& Typ::cod() const noexcept { return node_->right; }
const Typ& Typ::body() const noexcept { return node_->left; }

bool operator==(const Typ& a, const Typ& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Typ::Tag::TVar:
      return a.index() == b.index();
    case Typ::Tag::Arrow:
      return a.dom() == b.dom() && a.cod() == b.cod();
    case Typ::Tag::All:
      return a.bound() == b.bound() && a.body() == b.body();
  }
  return false;
}

////////////////////////////////////////////////////////////////////////////////
// Term

struct Term::Node {
  Tag tag;
  std::uint32_t number;  // index for Var, bound for TAbs
  std::size_t nodes;
  std::size_t hash;
  Typ type;    // annotation of Abs, argument of TApp
  Term left;   // body of Abs/TAbs, fn of App/TApp
  Term right;  // arg of App
};

namespace {

// Placeholder used to fill unused Term/Typ slots; never observed.
const Typ& dummy_typ() {
  static const Typ t = Typ::tvar(0);
  return t;
}

}  // namespace

Term Term::var(Index index) {
  auto n = std::shared_ptr<Node>(new Node{Tag::Var, index, 1, mix(0x44, index), dummy_typ(),
                                          Term(nullptr), Term(nullptr)});
  return Term(std::move(n));
}

Term Term::abs(Typ annot, Term body) {
  const std::size_t nodes = 1 + annot.node_count() + body.node_count();
  const std::size_t h = mix(mix(0x55, annot.hash()), body.hash());
  return Term(std::shared_ptr<Node>(
      new Node{Tag::Abs, 0, nodes, h, std::move(annot), std::move(body), Term(nullptr)}));
}

Term Term::app(Term fn, Term arg) {
  const std::size_t nodes = 1 + fn.node_count() + arg.node_count();
  const std::size_t h = mix(mix(0x66, fn.hash()), arg.hash());
  return Term(std::shared_ptr<Node>(
      new Node{Tag::App, 0, nodes, h, dummy_typ(), std::move(fn), std::move(arg)}));
}

Term Term::tabs(Kind bound, Term body) {
  const std::size_t nodes = 1 + body.node_count();
  const std::size_t h = mix(mix(0x77, bound), body.hash());
  return Term(std::shared_ptr<Node>(
      new Node{Tag::TAbs, bound, nodes, h, dummy_typ(), std::move(body), Term(nullptr)}));
}

Term Term::tapp(Term fn, Typ arg) {
  const std::size_t nodes = 1 + fn.node_count() + arg.node_count();
  const std::size_t h = mix(mix(0x88, fn.hash()), arg.hash());
  return Term(std::shared_ptr<Node>(
      new Node{Tag::TApp, 0, nodes, h, std::move(arg), std::move(fn), Term(nullptr)}));
}

Term::Tag Term::tag() const noexcept { return node_->tag; }
Index Term::index() const noexcept { return node_->number; }
Kind Term::bound() const noexcept { return node_->number; }
const Typ& Term::annot() const noexcept { return node_->type; }
const Typ& Term::type_arg() const noexcept { return node_->type; }
const Term& Term::body() const noexcept { return node_->left; }
const Term& Term::fn() const noexcept { return node_->left; }
const Term& Term::arg() const noexcept { return node_->right; }
std::size_t Term::node_count() const noexcept { return node_->nodes; }
std::size_t Term::hash() const noexcept { return node_->hash; }

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Term::Tag::Var:
      return a.index() == b.index();
    case Term::Tag::Abs:
      return a.annot() == b.annot() && a.body() == b.body();
    case Term::Tag::App:
      return a.fn() == b.fn() && a.arg() == b.arg();
    case Term::Tag::TAbs:
      return a.bound() == b.bound() && a.body() == b.body();
    case Term::Tag::TApp:
      return a.fn() == b.fn() && a.type_arg() == b.type_arg();
  }
  return false;
}

////////////////////////////////////////////////////////////////////////////////
// Shifting and substitution

Typ tshift(Index cutoff, const Typ& type) {
  switch (type.tag()) {
    case Typ::Tag::TVar:
      return type.index() >= cutoff ? Typ::tvar(type.index() + 1) : type;
    case Typ::Tag::Arrow:
      return Typ::arrow(tshift(cutoff, type.dom()), tshift(cutoff, type.cod()));
    case Typ::Tag::All:
      return Typ::all(type.bound(), tshift(cutoff + 1, type.body()));
  }
  return type;
}

Typ tsubst(const Typ& type, Index index, const Typ& replacement) {
  switch (type.tag()) {
    case Typ::Tag::TVar: {
      const Index y = type.index();
      if (y < index) return type;
      if (y == index) return replacement;
      return Typ::tvar(y - 1);
    }
    case Typ::Tag::Arrow:
      return Typ::arrow(tsubst(type.dom(), index, replacement),
                        tsubst(type.cod(), index, replacement));
    case Typ::Tag::All:
      return Typ::all(type.bound(), tsubst(type.body(), index + 1, tshift(0, replacement)));
  }
  return type;
}

Term shift(Index cutoff, const Term& term) {
  switch (term.tag()) {
    case Term::Tag::Var:
      return term.index() >= cutoff ? Term::var(term.index() + 1) : term;
    case Term::Tag::Abs:
      return Term::abs(term.annot(), shift(cutoff + 1, term.body()));
    case Term::Tag::App:
      return Term::app(shift(cutoff, term.fn()), shift(cutoff, term.arg()));
    case Term::Tag::TAbs:
      return Term::tabs(term.bound(), shift(cutoff, term.body()));
    case Term::Tag::TApp:
      return Term::tapp(shift(cutoff, term.fn()), term.type_arg());
  }
  return term;
}

Term shift_typ(Index cutoff, const Term& term) {
  switch (term.tag()) {
    case Term::Tag::Var:
      return term;
    case Term::Tag::Abs:
      return Term::abs(tshift(cutoff, term.annot()), shift_typ(cutoff, term.body()));
    case Term::Tag::App:
      return Term::app(shift_typ(cutoff, term.fn()), shift_typ(cutoff, term.arg()));
    case Term::Tag::TAbs:
      return Term::tabs(term.bound(), shift_typ(cutoff + 1, term.body()));
    case Term::Tag::TApp:
      return Term::tapp(shift_typ(cutoff, term.fn()), tshift(cutoff, term.type_arg()));
  }
  return term;
}

Term subst(const Term& term, Index index, const Term& replacement) {
  switch (term.tag()) {
    case Term::Tag::Var: {
      const Index y = term.index();
      if (y < index) return term;
      if (y == index) return replacement;
      assert(y > 0);
      return Term::var(y - 1);
    }
    case Term::Tag::Abs:
      return Term::abs(term.annot(), subst(term.body(), index + 1, shift(0, replacement)));
    case Term::Tag::App:
      return Term::app(subst(term.fn(), index, replacement),
                       subst(term.arg(), index, replacement));
    case Term::Tag::TAbs:
      return Term::tabs(term.bound(), subst(term.body(), index, shift_typ(0, replacement)));
    case Term::Tag::TApp:
      return Term::tapp(subst(term.fn(), index, replacement), term.type_arg());
  }
  return term;
}

Term subst_typ(const Term& term, Index index, const Typ& replacement) {
  switch (term.tag()) {
    case Term::Tag::Var:
      return term;
    case Term::Tag::Abs:
      return Term::abs(tsubst(term.annot(), index, replacement),
                       subst_typ(term.body(), index, replacement));
    case Term::Tag::App:
      return Term::app(subst_typ(term.fn(), index, replacement),
                       subst_typ(term.arg(), index, replacement));
    case Term::Tag::TAbs:
      return Term::tabs(term.bound(),
                        subst_typ(term.body(), index + 1, tshift(0, replacement)));
    case Term::Tag::TApp:
      return Term::tapp(subst_typ(term.fn(), index, replacement),
                        tsubst(term.type_arg(), index, replacement));
  }
  return term;
}

std::ostream& operator<<(std::ostream& os, const Typ& type) { return os << to_sexp(type); }
std::ostream& operator<<(std::ostream& os, const Term& term) { return os << to_sexp(term); }

}  // namespace fpred
