#include "fpred/testkit/named.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fpred::testkit::named {

namespace {

const std::vector<std::string> kTermPool = {"a", "b", "c", "d"};
const std::vector<std::string> kTypePool = {"A", "B", "C", "D"};

std::string fresh(const char* prefix) {
  thread_local std::size_t counter = 0;
  return prefix + std::to_string(counter++);
}

NTypPtr mk_tvar(std::string name) {
  return std::make_shared<const NTyp>(NTyp{NTyp::Tag::Var, std::move(name), 0, nullptr, nullptr});
}

NTermPtr mk_var(std::string name) {
  return std::make_shared<const NTerm>(
      NTerm{NTerm::Tag::Var, std::move(name), 0, nullptr, nullptr, nullptr});
}

const std::string& lookup_name(const Names& ctx, Index i) {
  if (i >= ctx.size()) throw std::logic_error("named oracle: index out of scope");
  return ctx[ctx.size() - 1 - i];
}

Index lookup_index(const Names& ctx, const std::string& name) {
  for (std::size_t pos = ctx.size(); pos-- > 0;) {
    if (ctx[pos] == name) return static_cast<Index>(ctx.size() - 1 - pos);
  }
  throw std::logic_error("named oracle: unbound name " + name);
}

// Free type indices of a type, relative to `cutoff` binders.
void free_tindices(const Typ& t, Index cutoff, std::set<Index>& out) {
  switch (t.tag()) {
    case Typ::Tag::TVar:
      if (t.index() >= cutoff) out.insert(t.index() - cutoff);
      return;
    case Typ::Tag::Arrow:
      free_tindices(t.dom(), cutoff, out);
      free_tindices(t.cod(), cutoff, out);
      return;
    case Typ::Tag::All:
      free_tindices(t.body(), cutoff + 1, out);
      return;
  }
}

void free_indices(const Term& t, Index cutoff, Index tcutoff, std::set<Index>& vars,
                  std::set<Index>& tvars) {
  switch (t.tag()) {
    case Term::Tag::Var:
      if (t.index() >= cutoff) vars.insert(t.index() - cutoff);
      return;
    case Term::Tag::Abs:
      free_tindices(t.annot(), tcutoff, tvars);
      free_indices(t.body(), cutoff + 1, tcutoff, vars, tvars);
      return;
    case Term::Tag::TAbs:
      free_indices(t.body(), cutoff, tcutoff + 1, vars, tvars);
      return;
    case Term::Tag::App:
      free_indices(t.fn(), cutoff, tcutoff, vars, tvars);
      free_indices(t.arg(), cutoff, tcutoff, vars, tvars);
      return;
    case Term::Tag::TApp:
      free_indices(t.fn(), cutoff, tcutoff, vars, tvars);
      free_tindices(t.type_arg(), tcutoff, tvars);
      return;
  }
}

// A pool name that is not the name of any index in `used`.
std::string pick_binder(Rng& rng, const std::vector<std::string>& pool, const Names& ctx,
                        const std::set<Index>& used, const char* fallback) {
  std::set<std::string> forbidden;
  for (Index i : used) forbidden.insert(lookup_name(ctx, i));
  std::vector<std::string> options;
  for (const auto& n : pool) {
    if (!forbidden.contains(n)) options.push_back(n);
  }
  if (options.empty()) return fresh(fallback);
  return options[rng.below(options.size())];
}

void ftv(const NTypPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->tag) {
    case NTyp::Tag::Var:
      if (!bound.contains(t->name)) out.insert(t->name);
      return;
    case NTyp::Tag::Arrow:
      ftv(t->left, bound, out);
      ftv(t->right, bound, out);
      return;
    case NTyp::Tag::All: {
      const bool had = bound.contains(t->name);
      bound.insert(t->name);
      ftv(t->left, bound, out);
      if (!had) bound.erase(t->name);
      return;
    }
  }
}

std::set<std::string> ftv(const NTypPtr& t) {
  std::set<std::string> bound, out;
  ftv(t, bound, out);
  return out;
}

void fv(const NTermPtr& t, std::set<std::string>& bound, std::set<std::string>& tbound,
        std::set<std::string>& vars, std::set<std::string>& tvars) {
  switch (t->tag) {
    case NTerm::Tag::Var:
      if (!bound.contains(t->name)) vars.insert(t->name);
      return;
    case NTerm::Tag::Abs: {
      ftv(t->type, tbound, tvars);
      const bool had = bound.contains(t->name);
      bound.insert(t->name);
      fv(t->left, bound, tbound, vars, tvars);
      if (!had) bound.erase(t->name);
      return;
    }
    case NTerm::Tag::TAbs: {
      const bool had = tbound.contains(t->name);
      tbound.insert(t->name);
      fv(t->left, bound, tbound, vars, tvars);
      if (!had) tbound.erase(t->name);
      return;
    }
    case NTerm::Tag::App:
      fv(t->left, bound, tbound, vars, tvars);
      fv(t->right, bound, tbound, vars, tvars);
      return;
    case NTerm::Tag::TApp:
      fv(t->left, bound, tbound, vars, tvars);
      ftv(t->type, tbound, tvars);
      return;
  }
}

struct FreeNames {
  std::set<std::string> vars, tvars;
};

FreeNames free_names(const NTermPtr& t) {
  std::set<std::string> bound, tbound;
  FreeNames out;
  fv(t, bound, tbound, out.vars, out.tvars);
  return out;
}

NTypPtr tsub(const NTypPtr& t, const std::string& x, const NTypPtr& r) {
  switch (t->tag) {
    case NTyp::Tag::Var:
      return t->name == x ? r : t;
    case NTyp::Tag::Arrow:
      return std::make_shared<const NTyp>(
          NTyp{NTyp::Tag::Arrow, "", 0, tsub(t->left, x, r), tsub(t->right, x, r)});
    case NTyp::Tag::All: {
      if (t->name == x) return t;
      std::string name = t->name;
      NTypPtr body = t->left;
      if (ftv(r).contains(name)) {
        name = fresh("Z");
        body = tsub(body, t->name, mk_tvar(name));
      }
      return std::make_shared<const NTyp>(
          NTyp{NTyp::Tag::All, name, t->bound, tsub(body, x, r), nullptr});
    }
  }
  return t;
}

}  // namespace

NTypPtr to_named(Rng& rng, const Typ& t, const Names& tctx) {
  switch (t.tag()) {
    case Typ::Tag::TVar:
      return mk_tvar(lookup_name(tctx, t.index()));
    case Typ::Tag::Arrow:
      return std::make_shared<const NTyp>(NTyp{NTyp::Tag::Arrow, "", 0, to_named(rng, t.dom(), tctx),
                                               to_named(rng, t.cod(), tctx)});
    case Typ::Tag::All: {
      std::set<Index> used;
      free_tindices(t.body(), 1, used);
      std::string name = pick_binder(rng, kTypePool, tctx, used, "Y");
      Names inner = tctx;
      inner.push_back(name);
      return std::make_shared<const NTyp>(
          NTyp{NTyp::Tag::All, std::move(name), t.bound(), to_named(rng, t.body(), inner), nullptr});
    }
  }
  return nullptr;
}

NTermPtr to_named(Rng& rng, const Term& t, const Names& ctx, const Names& tctx) {
  switch (t.tag()) {
    case Term::Tag::Var:
      return mk_var(lookup_name(ctx, t.index()));
    case Term::Tag::Abs: {
      std::set<Index> used, tused;
      free_indices(t.body(), 1, 0, used, tused);
      std::string name = pick_binder(rng, kTermPool, ctx, used, "y");
      Names inner = ctx;
      inner.push_back(name);
      return std::make_shared<const NTerm>(NTerm{NTerm::Tag::Abs, std::move(name), 0,
                                                 to_named(rng, t.annot(), tctx),
                                                 to_named(rng, t.body(), inner, tctx), nullptr});
    }
    case Term::Tag::TAbs: {
      std::set<Index> used, tused;
      free_indices(t.body(), 0, 1, used, tused);
      std::string name = pick_binder(rng, kTypePool, tctx, tused, "Y");
      Names inner = tctx;
      inner.push_back(name);
      return std::make_shared<const NTerm>(NTerm{NTerm::Tag::TAbs, std::move(name), t.bound(),
                                                 nullptr, to_named(rng, t.body(), ctx, inner),
                                                 nullptr});
    }
    case Term::Tag::App:
      return std::make_shared<const NTerm>(NTerm{NTerm::Tag::App, "", 0, nullptr,
                                                 to_named(rng, t.fn(), ctx, tctx),
                                                 to_named(rng, t.arg(), ctx, tctx)});
    case Term::Tag::TApp:
      return std::make_shared<const NTerm>(NTerm{NTerm::Tag::TApp, "", 0,
                                                 to_named(rng, t.type_arg(), tctx),
                                                 to_named(rng, t.fn(), ctx, tctx), nullptr});
  }
  return nullptr;
}

Typ from_named(const NTypPtr& t, const Names& tctx) {
  switch (t->tag) {
    case NTyp::Tag::Var:
      return Typ::tvar(lookup_index(tctx, t->name));
    case NTyp::Tag::Arrow:
      return Typ::arrow(from_named(t->left, tctx), from_named(t->right, tctx));
    case NTyp::Tag::All: {
      Names inner = tctx;
      inner.push_back(t->name);
      return Typ::all(t->bound, from_named(t->left, inner));
    }
  }
  return Typ::tvar(0);
}

Term from_named(const NTermPtr& t, const Names& ctx, const Names& tctx) {
  switch (t->tag) {
    case NTerm::Tag::Var:
      return Term::var(lookup_index(ctx, t->name));
    case NTerm::Tag::Abs: {
      Names inner = ctx;
      inner.push_back(t->name);
      return Term::abs(from_named(t->type, tctx), from_named(t->left, inner, tctx));
    }
    case NTerm::Tag::TAbs: {
      Names inner = tctx;
      inner.push_back(t->name);
      return Term::tabs(t->bound, from_named(t->left, ctx, inner));
    }
    case NTerm::Tag::App:
      return Term::app(from_named(t->left, ctx, tctx), from_named(t->right, ctx, tctx));
    case NTerm::Tag::TApp:
      return Term::tapp(from_named(t->left, ctx, tctx), from_named(t->type, tctx));
  }
  return Term::var(0);
}

NTermPtr substitute(const NTermPtr& t, const std::string& x, const NTermPtr& u) {
  switch (t->tag) {
    case NTerm::Tag::Var:
      return t->name == x ? u : t;
    case NTerm::Tag::App:
      return std::make_shared<const NTerm>(
          NTerm{NTerm::Tag::App, "", 0, nullptr, substitute(t->left, x, u), substitute(t->right, x, u)});
    case NTerm::Tag::TApp:
      return std::make_shared<const NTerm>(
          NTerm{NTerm::Tag::TApp, "", 0, t->type, substitute(t->left, x, u), nullptr});
    case NTerm::Tag::Abs: {
      if (t->name == x) return t;
      std::string name = t->name;
      NTermPtr body = t->left;
      if (free_names(u).vars.contains(name)) {
        name = fresh("z");
        body = substitute(body, t->name, mk_var(name));
      }
      return std::make_shared<const NTerm>(
          NTerm{NTerm::Tag::Abs, name, 0, t->type, substitute(body, x, u), nullptr});
    }
    case NTerm::Tag::TAbs: {
      std::string name = t->name;
      NTermPtr body = t->left;
      if (free_names(u).tvars.contains(name)) {
        name = fresh("Z");
        body = substitute_type(body, t->name, mk_tvar(name));
      }
      return std::make_shared<const NTerm>(
          NTerm{NTerm::Tag::TAbs, name, t->bound, nullptr, substitute(body, x, u), nullptr});
    }
  }
  return t;
}

NTermPtr substitute_type(const NTermPtr& t, const std::string& x, const NTypPtr& r) {
  switch (t->tag) {
    case NTerm::Tag::Var:
      return t;
    case NTerm::Tag::App:
      return std::make_shared<const NTerm>(NTerm{NTerm::Tag::App, "", 0, nullptr,
                                                 substitute_type(t->left, x, r),
                                                 substitute_type(t->right, x, r)});
    case NTerm::Tag::TApp:
      return std::make_shared<const NTerm>(NTerm{NTerm::Tag::TApp, "", 0, tsub(t->type, x, r),
                                                 substitute_type(t->left, x, r), nullptr});
    case NTerm::Tag::Abs:
      return std::make_shared<const NTerm>(NTerm{NTerm::Tag::Abs, t->name, 0, tsub(t->type, x, r),
                                                 substitute_type(t->left, x, r), nullptr});
    case NTerm::Tag::TAbs: {
      if (t->name == x) return t;
      std::string name = t->name;
      NTermPtr body = t->left;
      if (ftv(r).contains(name)) {
        name = fresh("Z");
        body = substitute_type(body, t->name, mk_tvar(name));
      }
      return std::make_shared<const NTerm>(
          NTerm{NTerm::Tag::TAbs, name, t->bound, nullptr, substitute_type(body, x, r), nullptr});
    }
  }
  return t;
}

namespace {

// Free variable i is named pool[i]; innermost (index 0) last.
Names free_context(const std::vector<std::string>& pool, std::size_t n) {
  Names ctx;
  for (std::size_t i = n; i-- > 0;) ctx.push_back(i < pool.size() ? pool[i] : fresh("f"));
  return ctx;
}

Names without(Names ctx, Index i) {
  ctx.erase(ctx.end() - 1 - static_cast<std::ptrdiff_t>(i));
  return ctx;
}

}  // namespace

Term oracle_subst(Rng& rng, const Term& t, Index x, const Term& u, std::size_t vars,
                  std::size_t tvars) {
  const Names ctx = free_context(kTermPool, vars);
  const Names tctx = free_context(kTypePool, tvars);
  const Names outer = without(ctx, x);
  const NTermPtr result =
      substitute(to_named(rng, t, ctx, tctx), lookup_name(ctx, x), to_named(rng, u, outer, tctx));
  return from_named(result, outer, tctx);
}

Term oracle_subst_typ(Rng& rng, const Term& t, Index x, const Typ& replacement,
                      std::size_t vars, std::size_t tvars) {
  const Names ctx = free_context(kTermPool, vars);
  const Names tctx = free_context(kTypePool, tvars);
  const Names outer = without(tctx, x);
  const NTermPtr result = substitute_type(to_named(rng, t, ctx, tctx), lookup_name(tctx, x),
                                          to_named(rng, replacement, outer));
  return from_named(result, ctx, outer);
}

}  // namespace fpred::testkit::named
