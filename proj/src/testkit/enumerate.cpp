#include "fpred/testkit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "fpred/measure.hpp"
#include "fpred/reduction.hpp"
#include "fpred/typecheck.hpp"

namespace fpred::testkit {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

Kind max_bound(const Typ& t) {
  const KindBag bag = kinds_of(t);
  return bag.empty() ? 0 : bag.entries().back().first;
}

// Exact-size type lists, keyed by (nodes, scope).
class TypeTable {
 public:
  TypeTable(Kind max_kind, bool wf_only, Index free_limit)
      : max_kind_(max_kind), wf_only_(wf_only), free_limit_(free_limit) {}

  const std::vector<Typ>& exact(std::size_t nodes, Index scope) {
    const auto key = std::make_pair(nodes, scope);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Typ> out;
    if (nodes == 1) {
      const Index limit = wf_only_ ? scope : scope + free_limit_;
      for (Index i = 0; i < limit; ++i) out.push_back(Typ::tvar(i));
    } else if (nodes >= 2) {
      for (std::size_t left = 1; left + 2 <= nodes; ++left) {
        const auto& doms = exact(left, scope);
        const auto& cods = exact(nodes - 1 - left, scope);
        for (const auto& d : doms) {
          for (const auto& c : cods) out.push_back(Typ::arrow(d, c));
        }
      }
      for (Kind k = 0; k <= max_kind_; ++k) {
        for (const auto& b : exact(nodes - 1, scope + 1)) out.push_back(Typ::all(k, b));
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  std::vector<Typ> up_to(std::size_t max_nodes, Index scope) {
    std::vector<Typ> out;
    for (std::size_t n = 1; n <= max_nodes; ++n) {
      const auto& layer = exact(n, scope);
      out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
  }

 private:
  Kind max_kind_;
  bool wf_only_;
  Index free_limit_;
  std::map<std::pair<std::size_t, Index>, std::vector<Typ>> memo_;
};

struct EnvSize {
  Env env;
  std::size_t size;
  friend bool operator==(const EnvSize&, const EnvSize&) = default;
};

struct EnvGoalSize {
  Env env;
  Typ goal;
  std::size_t size;
  friend bool operator==(const EnvGoalSize&, const EnvGoalSize&) = default;
};

struct KeyHash {
  std::size_t operator()(const EnvSize& k) const { return mix(k.env.hash(), k.size); }
  std::size_t operator()(const EnvGoalSize& k) const {
    return mix(mix(k.env.hash(), k.goal.hash()), k.size);
  }
};

}  // namespace

std::vector<Typ> type_universe(Index scope, const EnumBounds& bounds) {
  return TypeTable(bounds.max_kind, true, 0).up_to(bounds.max_type_nodes, scope);
}

std::vector<Typ> enumerate_raw_types(std::size_t max_nodes, Index free_limit, Kind max_kind) {
  return TypeTable(max_kind, false, free_limit).up_to(max_nodes, 0);
}

using TermList = std::shared_ptr<const std::vector<Term>>;
using TypedList = std::shared_ptr<const std::vector<TypedTerm>>;

struct TermEnumerator::Impl {
  explicit Impl(EnumBounds b) : bounds(b) {}

  EnumBounds bounds;
  std::map<Index, std::vector<Typ>> universes;
  // Minimal kinds of the universe members, per context.
  std::unordered_map<Env, std::vector<std::optional<Kind>>> universe_kinds;

  // Layer caches. Callers hold a shared_ptr while iterating, so the caches
  // can be dropped wholesale once they hold more than `cache_budget` terms.
  std::unordered_map<EnvGoalSize, TermList, KeyHash> checked;
  std::unordered_map<EnvSize, TypedList, KeyHash> synthesized;
  std::size_t cached = 0;
  std::size_t cache_budget = 4'000'000;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<Term>> raws;

  template <class T>
  std::shared_ptr<const std::vector<T>> seal(std::vector<T>&& out) {
    if (cached + out.size() > cache_budget) {
      checked.clear();
      synthesized.clear();
      cached = 0;
    }
    cached += out.size();
    return std::make_shared<const std::vector<T>>(std::move(out));
  }

  const std::vector<Typ>& universe(Index scope) {
    auto it = universes.find(scope);
    if (it == universes.end()) it = universes.emplace(scope, type_universe(scope, bounds)).first;
    return it->second;
  }

  const std::vector<std::optional<Kind>>& kinds(const Env& env) {
    auto it = universe_kinds.find(env);
    if (it != universe_kinds.end()) return it->second;
    std::vector<std::optional<Kind>> ks;
    for (const auto& t : universe(static_cast<Index>(env.type_bindings()))) {
      ks.push_back(infer_kind(env, t));
    }
    return universe_kinds.emplace(env, std::move(ks)).first->second;
  }

  bool in_universe(const Env& env, const Typ& t) const {
    return t.node_count() <= bounds.max_type_nodes && max_bound(t) <= bounds.max_kind &&
           wf_typ(env, t);
  }

  // Calls f(T) for every universe member of kind at most `bound` in env.
  template <class F>
  void for_instances(const Env& env, Kind bound, F&& f) {
    const auto& types = universe(static_cast<Index>(env.type_bindings()));
    const auto& ks = kinds(env);
    for (std::size_t i = 0; i < types.size(); ++i) {
      if (ks[i] && *ks[i] <= bound) f(types[i]);
    }
  }

  // Extends `acc : cur` by application/type-application arguments spending
  // exactly `remaining`, keeping those whose final type is `goal`.
  void spine(const Env& env, const Typ& goal, const Term& acc, const Typ& cur,
             std::size_t remaining, bool need_more, std::vector<Term>& out) {
    if (remaining == 0) {
      if (!need_more && cur == goal) out.push_back(acc);
      return;
    }
    if (cur.is_arrow()) {
      for (std::size_t j = 0; j < remaining; ++j) {
        const TermList args = check(env, cur.dom(), j);
        for (const auto& a : *args) {
          spine(env, goal, Term::app(acc, a), cur.cod(), remaining - 1 - j, false, out);
        }
      }
    } else if (cur.is_all()) {
      for_instances(env, cur.bound(), [&](const Typ& t) {
        spine(env, goal, Term::tapp(acc, t), tsubst(cur.body(), 0, t), remaining - 1, false, out);
      });
    }
  }

  // As spine, without a goal and with normal arguments only.
  void neutral_spine(const Env& env, const Term& acc, const Typ& cur, std::size_t remaining,
                     std::vector<TypedTerm>& out) {
    if (remaining == 0) {
      out.push_back(TypedTerm{acc, cur});
      return;
    }
    if (cur.is_arrow()) {
      for (std::size_t j = 0; j < remaining; ++j) {
        const TermList args = check(env, cur.dom(), j);
        for (const auto& a : *args) {
          if (is_normal(a)) neutral_spine(env, Term::app(acc, a), cur.cod(), remaining - 1 - j, out);
        }
      }
    } else if (cur.is_all()) {
      for_instances(env, cur.bound(), [&](const Typ& t) {
        neutral_spine(env, Term::tapp(acc, t), tsubst(cur.body(), 0, t), remaining - 1, out);
      });
    }
  }

  TermList check(const Env& env, const Typ& goal, std::size_t n) {
    EnvGoalSize key{env, goal, n};
    if (auto it = checked.find(key); it != checked.end()) return it->second;
    std::vector<Term> out;
    const auto vars = static_cast<Index>(env.term_bindings());
    if (n == 0) {
      for (Index x = 0; x < vars; ++x) {
        if (*get_var(env, x) == goal) out.push_back(Term::var(x));
      }
      return checked[key] = seal(std::move(out));
    }

    // Introduction forms.
    if (goal.is_arrow() && in_universe(env, goal.dom())) {
      const TermList bodies = check(env.with_var(goal.dom()), goal.cod(), n - 1);
      for (const auto& b : *bodies) out.push_back(Term::abs(goal.dom(), b));
    }
    if (goal.is_all() && goal.bound() <= bounds.max_kind) {
      const TermList bodies = check(env.with_tvar(goal.bound()), goal.body(), n - 1);
      for (const auto& b : *bodies) out.push_back(Term::tabs(goal.bound(), b));
    }

    // Eliminations, split by the head of the spine.
    for (Index x = 0; x < vars; ++x) {
      spine(env, goal, Term::var(x), *get_var(env, x), n, true, out);
    }
    const auto& annots = universe(static_cast<Index>(env.type_bindings()));
    for (const auto& a_type : annots) {
      const Env inner = env.with_var(a_type);
      // (\x:A. b) a, with the goal pushed into b.
      for (std::size_t i = 0; i + 2 <= n; ++i) {
        const TermList bodies = check(inner, goal, i);
        if (bodies->empty()) continue;
        const TermList args = check(env, a_type, n - 2 - i);
        for (const auto& a : *args) {
          for (const auto& b : *bodies) out.push_back(Term::app(Term::abs(a_type, b), a));
        }
      }
      // (\x:A. b) a s1 ... sm with m >= 1.
      for (std::size_t i = 0; i + 3 <= n; ++i) {
        const TypedList bodies = synth(inner, i);
        for (const auto& b : *bodies) {
          const Term head = Term::abs(a_type, b.term);
          for (std::size_t j = 0; i + j + 3 <= n; ++j) {
            const TermList args = check(env, a_type, j);
            for (const auto& a : *args) {
              spine(env, goal, Term::app(head, a), b.type, n - 2 - i - j, true, out);
            }
          }
        }
      }
    }
    // (/\X:k. b) [T] s1 ... sm with m >= 0.
    for (Kind k = 0; k <= bounds.max_kind; ++k) {
      const Env inner = env.with_tvar(k);
      for (std::size_t i = 0; i + 2 <= n; ++i) {
        const TypedList bodies = synth(inner, i);
        for (const auto& b : *bodies) {
          const Term head = Term::tabs(k, b.term);
          for_instances(env, k, [&](const Typ& t) {
            spine(env, goal, Term::tapp(head, t), tsubst(b.type, 0, t), n - 2 - i, false, out);
          });
        }
      }
    }
    return checked[key] = seal(std::move(out));
  }

  TypedList synth(const Env& env, std::size_t n) {
    std::vector<TypedTerm> out;
    EnvSize key{env, n};
    if (auto it = synthesized.find(key); it != synthesized.end()) return it->second;
    if (n == 0) {
      for (Index x = 0; x < env.term_bindings(); ++x) {
        out.push_back(TypedTerm{Term::var(x), *get_var(env, x)});
      }
    } else {
      produce(env, n, [this](const Env& e, std::size_t m, const auto& f) {
        const TypedList layer = synth(e, m);
        for (const auto& tt : *layer) f(tt);
      }, [&](TypedTerm tt) { out.push_back(std::move(tt)); });
    }
    return synthesized[key] = seal(std::move(out));
  }

  // The clauses of synth at size n >= 1, with sub-layers obtained through
  // `sub(env, size, f)` and results passed to `emit`.
  template <class Sub, class Emit>
  void produce(const Env& env, std::size_t n, Sub&& sub, Emit&& emit) {
    for (const auto& a : universe(static_cast<Index>(env.type_bindings()))) {
      sub(env.with_var(a), n - 1, [&](const TypedTerm& b) {
        emit(TypedTerm{Term::abs(a, b.term), Typ::arrow(a, b.type)});
      });
    }
    for (Kind k = 0; k <= bounds.max_kind; ++k) {
      sub(env.with_tvar(k), n - 1, [&](const TypedTerm& b) {
        emit(TypedTerm{Term::tabs(k, b.term), Typ::all(k, b.type)});
      });
    }
    for (std::size_t i = 0; i < n; ++i) {
      sub(env, i, [&](const TypedTerm& f) {
        if (!f.type.is_arrow()) return;
        const TermList args = check(env, f.type.dom(), n - 1 - i);
        for (const auto& a : *args) emit(TypedTerm{Term::app(f.term, a), f.type.cod()});
      });
    }
    sub(env, n - 1, [&](const TypedTerm& f) {
      if (!f.type.is_all()) return;
      for_instances(env, f.type.bound(), [&](const Typ& t) {
        emit(TypedTerm{Term::tapp(f.term, t), tsubst(f.type.body(), 0, t)});
      });
    });
  }

  void stream(const Env& env, std::size_t n, std::size_t limit,
              const std::function<void(const TypedTerm&)>& visit) {
    if (n <= limit) {
      const TypedList layer = synth(env, n);
      for (const auto& tt : *layer) visit(tt);
      return;
    }
    produce(env, n, [this, limit](const Env& e, std::size_t m, const auto& f) {
      stream(e, m, limit, f);
    }, visit);
  }

  const std::vector<Term>& raw(std::size_t vars, std::size_t scope, std::size_t n) {
    const auto key = std::make_tuple(vars, scope, n);
    if (auto it = raws.find(key); it != raws.end()) return it->second;
    std::vector<Term> out;
    if (n == 0) {
      for (Index x = 0; x <= vars; ++x) out.push_back(Term::var(x));
      return raws.emplace(key, std::move(out)).first->second;
    }
    const std::vector<Typ> types = universe(static_cast<Index>(scope));
    for (const auto& a : types) {
      for (const auto& b : raw(vars + 1, scope, n - 1)) out.push_back(Term::abs(a, b));
    }
    for (Kind k = 0; k <= bounds.max_kind; ++k) {
      for (const auto& b : raw(vars, scope + 1, n - 1)) out.push_back(Term::tabs(k, b));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::vector<Term> fns = raw(vars, scope, i);
      for (const auto& f : fns) {
        for (const auto& a : raw(vars, scope, n - 1 - i)) out.push_back(Term::app(f, a));
      }
    }
    {
      const std::vector<Term> fns = raw(vars, scope, n - 1);
      for (const auto& f : fns) {
        for (const auto& t : types) out.push_back(Term::tapp(f, t));
      }
    }
    return raws.emplace(key, std::move(out)).first->second;
  }
};

TermEnumerator::TermEnumerator(EnumBounds bounds) : impl_(std::make_unique<Impl>(bounds)) {}
TermEnumerator::~TermEnumerator() = default;

const EnumBounds& TermEnumerator::bounds() const { return impl_->bounds; }

std::vector<Term> TermEnumerator::check(const Env& env, const Typ& goal, std::size_t size) {
  return *impl_->check(env, goal, size);
}

std::vector<TypedTerm> TermEnumerator::synth(const Env& env, std::size_t size) {
  return *impl_->synth(env, size);
}

void TermEnumerator::for_each_typed(const Env& env, std::size_t size, std::size_t memo_limit,
                                    const std::function<void(const TypedTerm&)>& visit) {
  impl_->stream(env, size, memo_limit, visit);
}

const std::vector<Term>& TermEnumerator::raw(const Env& env, std::size_t size) {
  return impl_->raw(env.term_bindings(), env.type_bindings(), size);
}

std::vector<TypedTerm> TermEnumerator::neutral(const Env& env, std::size_t size) {
  std::vector<TypedTerm> out;
  for (Index x = 0; x < env.term_bindings(); ++x) {
    impl_->neutral_spine(env, Term::var(x), *get_var(env, x), size, out);
  }
  return out;
}

namespace {

EnumBounds widen(EnumBounds bounds, const Env& env, const Typ& goal) {
  bounds.max_kind = std::max(bounds.max_kind, max_bound(goal));
  for (Env e = env; !e.is_empty(); e = e.rest()) {
    if (e.tag() == Env::Tag::ETVar) {
      bounds.max_kind = std::max(bounds.max_kind, e.bound());
    } else {
      bounds.max_kind = std::max(bounds.max_kind, max_bound(e.annot()));
    }
  }
  return bounds;
}

}  // namespace

std::vector<Term> enumerate_terms(const Env& env, const Typ& goal, std::size_t max_size,
                                  EnumBounds bounds) {
  TermEnumerator e(widen(bounds, env, goal));
  std::vector<Term> out;
  for (std::size_t n = 0; n <= max_size; ++n) {
    const auto layer = e.check(env, goal, n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Term> enumerate_terms_unpruned(const Env& env, const Typ& goal, std::size_t max_size,
                                           EnumBounds bounds) {
  TermEnumerator e(widen(bounds, env, goal));
  std::vector<Term> out;
  for (std::size_t n = 0; n <= max_size; ++n) {
    for (const auto& t : e.raw(env, n)) {
      const auto r = infer_type(env, t);
      if (r.ok() && r.value() == goal) out.push_back(t);
    }
  }
  return out;
}

std::optional<TypedTerm> find_neutral(const Env& env, std::size_t max_size, EnumBounds bounds) {
  TermEnumerator e(bounds);
  for (std::size_t n = 0; n <= max_size; ++n) {
    for (auto& tt : e.neutral(env, n)) {
      if (tt.type.node_count() <= 4 && max_bound(tt.type) <= 2) return tt;
    }
  }
  return std::nullopt;
}

bool check_neutral_tvar(Kind k, std::size_t max_size) {
  return !find_neutral(Env().with_tvar(k), max_size).has_value();
}

}  // namespace fpred::testkit
