#include "fpred/env.hpp"

#include <cassert>
#include <ostream>

#include "fpred/sexp.hpp"

namespace fpred {

struct Env::Node {
  Tag tag;
  Kind bound;
  std::size_t term_bindings;
  std::size_t type_bindings;
  std::size_t hash;
  Typ annot;
  Env rest;
};

namespace {

inline std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Env::Env() {
  static const std::shared_ptr<const Node> empty_node(
      new Node{Tag::Empty, 0, 0, 0, 0xe, Typ::tvar(0), Env(std::shared_ptr<const Node>())});
  node_ = empty_node;
}

Env Env::evar(Env rest, Typ annot) {
  const std::size_t h = mix(mix(0xe1, rest.hash()), annot.hash());
  const std::size_t terms = rest.term_bindings() + 1;
  const std::size_t types = rest.type_bindings();
  return Env(std::shared_ptr<const Node>(
      new Node{Tag::EVar, 0, terms, types, h, std::move(annot), std::move(rest)}));
}

Env Env::etvar(Env rest, Kind bound) {
  const std::size_t h = mix(mix(0xe2, rest.hash()), bound);
  const std::size_t terms = rest.term_bindings();
  const std::size_t types = rest.type_bindings() + 1;
  return Env(std::shared_ptr<const Node>(
      new Node{Tag::ETVar, bound, terms, types, h, Typ::tvar(0), std::move(rest)}));
}

Env::Tag Env::tag() const noexcept { return node_->tag; }
const Env& Env::rest() const noexcept { return node_->rest; }
const Typ& Env::annot() const noexcept { return node_->annot; }
Kind Env::bound() const noexcept { return node_->bound; }
std::size_t Env::term_bindings() const noexcept { return node_->term_bindings; }
std::size_t Env::type_bindings() const noexcept { return node_->type_bindings; }
std::size_t Env::hash() const noexcept { return node_->hash; }

bool operator==(const Env& a, const Env& b) noexcept {
  const Env* x = &a;
  const Env* y = &b;
  while (true) {
    if (x->node_ == y->node_) return true;
    if (x->hash() != y->hash() || x->tag() != y->tag()) return false;
    switch (x->tag()) {
      case Env::Tag::Empty:
        return true;
      case Env::Tag::EVar:
        if (!(x->annot() == y->annot())) return false;
        break;
      case Env::Tag::ETVar:
        if (x->bound() != y->bound()) return false;
        break;
    }
    x = &x->rest();
    y = &y->rest();
  }
}

std::optional<Kind> get_kind(const Env& env, Index index) {
  const Env* e = &env;
  while (!e->is_empty()) {
    if (e->tag() == Env::Tag::ETVar) {
      if (index == 0) return e->bound();
      --index;
    }
    e = &e->rest();
  }
  return std::nullopt;
}

std::optional<Typ> get_var(const Env& env, Index index) {
  const Env* e = &env;
  std::size_t crossed = 0;
  while (!e->is_empty()) {
    if (e->tag() == Env::Tag::ETVar) {
      ++crossed;
    } else if (index == 0) {
      Typ t = e->annot();
      for (std::size_t i = 0; i < crossed; ++i) t = tshift(0, t);
      return t;
    } else {
      --index;
    }
    e = &e->rest();
  }
  return std::nullopt;
}

Env remove_var(const Env& env, Index index) {
  switch (env.tag()) {
    case Env::Tag::Empty:
      // Out of range: identity.
      return env;
    case Env::Tag::ETVar: {
      Env rest = remove_var(env.rest(), index);
      if (rest == env.rest()) return env;
      return Env::etvar(std::move(rest), env.bound());
    }
    case Env::Tag::EVar:
      if (index == 0) return env.rest();
      return Env::evar(remove_var(env.rest(), index - 1), env.annot());
  }
  return env;
}

bool wf_typ(const Env& env, const Typ& type) {
  // Equivalent to extending env with an ETVar per binder: only the number of
  // type bindings matters for whether get_kind succeeds.
  struct Walk {
    std::size_t available;
    bool operator()(const Typ& t, std::size_t binders) const {
      switch (t.tag()) {
        case Typ::Tag::TVar:
          return t.index() < available + binders;
        case Typ::Tag::Arrow:
          return (*this)(t.dom(), binders) && (*this)(t.cod(), binders);
        case Typ::Tag::All:
          return (*this)(t.body(), binders + 1);
      }
      return false;
    }
  };
  return Walk{env.type_bindings()}(type, 0);
}

bool wf_env(const Env& env) {
  const Env* e = &env;
  while (!e->is_empty()) {
    if (e->tag() == Env::Tag::EVar && !wf_typ(e->rest(), e->annot())) return false;
    e = &e->rest();
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Env& env) { return os << to_sexp(env); }

}  // namespace fpred
