#include "fpred/typecheck.hpp"

#include <algorithm>

#include "fpred/sexp.hpp"

namespace fpred {

const char* to_string(TypeErrorKind kind) {
  switch (kind) {
    case TypeErrorKind::UnboundTermVar:
      return "UnboundTermVar";
    case TypeErrorKind::UnboundTypeVar:
      return "UnboundTypeVar";
    case TypeErrorKind::NotAnArrow:
      return "NotAnArrow";
    case TypeErrorKind::NotAForall:
      return "NotAForall";
    case TypeErrorKind::ArgTypeMismatch:
      return "ArgTypeMismatch";
    case TypeErrorKind::KindTooLarge:
      return "KindTooLarge";
    case TypeErrorKind::IllFormedEnv:
      return "IllFormedEnv";
  }
  return "?";
}

namespace {

// Variables bound by quantifiers inside the type resolve to `inner`
// (innermost last); the rest are looked up in `env`, assumed well formed.
std::optional<Kind> minimal_kind(const Env& env, std::vector<Kind>& inner, const Typ& t) {
  switch (t.tag()) {
    case Typ::Tag::TVar: {
      const Index x = t.index();
      if (x < inner.size()) return inner[inner.size() - 1 - x];
      return get_kind(env, static_cast<Index>(x - inner.size()));
    }
    case Typ::Tag::Arrow: {
      const auto a = minimal_kind(env, inner, t.dom());
      if (!a) return std::nullopt;
      const auto b = minimal_kind(env, inner, t.cod());
      if (!b) return std::nullopt;
      return std::max(*a, *b);
    }
    case Typ::Tag::All: {
      inner.push_back(t.bound());
      const auto b = minimal_kind(env, inner, t.body());
      inner.pop_back();
      if (!b) return std::nullopt;
      return std::max(t.bound() + 1, *b);
    }
  }
  return std::nullopt;
}

class Checker {
 public:
  Checker(const Env& root) : root_(root) {}

  Result<Typ, TypeError> run(const Term& t) {
    if (!wf_env(root_)) return error(TypeErrorKind::IllFormedEnv, "context is not well formed");
    return infer(root_, t);
  }

 private:
  Failure<TypeError> error(TypeErrorKind kind, std::string detail) const {
    return fail(TypeError{kind, path_, std::move(detail)});
  }

  Result<Typ, TypeError> descend(const Env& env, const Term& t, unsigned child) {
    path_.push_back(child);
    auto r = infer(env, t);
    if (r) path_.pop_back();
    return r;
  }

  Result<Typ, TypeError> infer(const Env& env, const Term& t) {
    switch (t.tag()) {
      case Term::Tag::Var: {
        auto type = get_var(env, t.index());
        if (!type) {
          return error(TypeErrorKind::UnboundTermVar,
                       "term variable " + std::to_string(t.index()) + " is not bound");
        }
        return *type;
      }
      case Term::Tag::Abs: {
        // The extended context must stay well formed.
        if (!wf_typ(env, t.annot())) {
          return error(TypeErrorKind::UnboundTypeVar,
                       "annotation " + to_sexp(t.annot()) + " mentions an unbound type variable");
        }
        auto body = descend(env.with_var(t.annot()), t.body(), 0);
        if (!body) return body;
        return Typ::arrow(t.annot(), std::move(body).value());
      }
      case Term::Tag::App: {
        auto fn = descend(env, t.fn(), 0);
        if (!fn) return fn;
        auto arg = descend(env, t.arg(), 1);
        if (!arg) return arg;
        const Typ& f = fn.value();
        if (!f.is_arrow()) {
          return error(TypeErrorKind::NotAnArrow, "applied term has type " + to_sexp(f));
        }
        if (!(f.dom() == arg.value())) {
          return error(TypeErrorKind::ArgTypeMismatch, "expected argument of type " +
                                                           to_sexp(f.dom()) + ", got " +
                                                           to_sexp(arg.value()));
        }
        return f.cod();
      }
      case Term::Tag::TAbs: {
        auto body = descend(env.with_tvar(t.bound()), t.body(), 0);
        if (!body) return body;
        return Typ::all(t.bound(), std::move(body).value());
      }
      case Term::Tag::TApp: {
        auto fn = descend(env, t.fn(), 0);
        if (!fn) return fn;
        const Typ& f = fn.value();
        if (!f.is_all()) {
          return error(TypeErrorKind::NotAForall,
                       "type-applied term has type " + to_sexp(f));
        }
        std::vector<Kind> inner;
        const auto k = minimal_kind(env, inner, t.type_arg());
        if (!k) {
          return error(TypeErrorKind::UnboundTypeVar,
                       "type argument " + to_sexp(t.type_arg()) + " is not well formed");
        }
        if (*k > f.bound()) {
          return error(TypeErrorKind::KindTooLarge,
                       "type argument has kind " + std::to_string(*k) + ", quantifier allows " +
                           std::to_string(f.bound()));
        }
        return tsubst(f.body(), 0, t.type_arg());
      }
    }
    return error(TypeErrorKind::IllFormedEnv, "unreachable");
  }

  const Env& root_;
  std::vector<unsigned> path_;
};

bool search(const Env& env, const Typ& t, Kind k, Kind bound) {
  switch (t.tag()) {
    case Typ::Tag::TVar: {
      if (!wf_env(env)) return false;
      const auto declared = get_kind(env, t.index());
      return declared && *declared <= k;
    }
    case Typ::Tag::Arrow:
      // max(k1, k2) = k: one side is exactly k, the other anything <= k.
      for (Kind k1 = 0; k1 <= bound; ++k1) {
        for (Kind k2 = 0; k2 <= bound; ++k2) {
          if (std::max(k1, k2) != k) continue;
          if (search(env, t.dom(), k1, bound) && search(env, t.cod(), k2, bound)) return true;
        }
      }
      return false;
    case Typ::Tag::All:
      for (Kind k2 = 0; k2 <= bound; ++k2) {
        if (std::max(t.bound() + 1, k2) != k) continue;
        if (search(env.with_tvar(t.bound()), t.body(), k2, bound)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace

std::optional<Kind> infer_kind(const Env& env, const Typ& type) {
  if (!wf_env(env)) return std::nullopt;
  std::vector<Kind> inner;
  return minimal_kind(env, inner, type);
}

bool check_kinding(const Env& env, const Typ& type, Kind kind) {
  const auto k = infer_kind(env, type);
  return k && *k <= kind;
}

Result<Typ, TypeError> infer_type(const Env& env, const Term& term) {
  return Checker(env).run(term);
}

bool kinding_search_oracle(const Env& env, const Typ& type, Kind kind, Kind bound) {
  if (kind > bound) return false;
  return search(env, type, kind, bound);
}

}  // namespace fpred
