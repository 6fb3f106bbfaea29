#ifndef FPRED_TESTKIT_ENUMERATE_HPP
#define FPRED_TESTKIT_ENUMERATE_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "fpred/env.hpp"
#include "fpred/syntax.hpp"
#include "fpred/testkit/generate.hpp"

namespace fpred::testkit {

/// Abstraction annotations and type-application arguments are unbounded in
/// general, so enumeration draws them from a finite universe: the types well
/// formed in the current scope with at most `max_type_nodes` nodes and no
/// quantifier bound above `max_kind`. Type-abstraction bounds range over
/// [0, max_kind].
struct EnumBounds {
  std::size_t max_type_nodes = 2;
  Kind max_kind = 2;
};

/// Every type well formed in a scope of `scope` type variables, within bounds.
/// Ordered by node count, then structurally.
std::vector<Typ> type_universe(Index scope, const EnumBounds& bounds);

/// Every type with at most `max_nodes` nodes whose free indices lie in
/// [0, free_limit), quantifier bounds in [0, max_kind]. Types with indices
/// unbound in a given context are included on purpose.
std::vector<Typ> enumerate_raw_types(std::size_t max_nodes, Index free_limit, Kind max_kind);

/// Memoizing enumerator over the bounded domain. All results are for an exact
/// term_size; layers are cached per context (up to a memory budget), so one
/// instance should be reused across queries.
class TermEnumerator {
 public:
  explicit TermEnumerator(EnumBounds bounds);
  ~TermEnumerator();
  TermEnumerator(const TermEnumerator&) = delete;
  TermEnumerator& operator=(const TermEnumerator&) = delete;

  const EnumBounds& bounds() const;

  /// Terms of type `goal`, goal directed: only head constructors compatible
  /// with the typing rules are expanded.
  std::vector<Term> check(const Env& env, const Typ& goal, std::size_t size);

  /// Every well-typed term with its type.
  std::vector<TypedTerm> synth(const Env& env, std::size_t size);

  /// Same terms as synth, streamed: layers above `memo_limit` are produced
  /// on the fly instead of cached, trading time for memory.
  void for_each_typed(const Env& env, std::size_t size, std::size_t memo_limit,
                      const std::function<void(const TypedTerm&)>& visit);

  /// Every term of the domain, typed or not. Variable indices range over the
  /// bound term variables plus one unbound index.
  const std::vector<Term>& raw(const Env& env, std::size_t size);

  /// Normal, non-abstraction terms with a variable head, with their types.
  std::vector<TypedTerm> neutral(const Env& env, std::size_t size);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// All terms with term_size <= max_size and type `goal` in `env`, smallest
/// first. max_kind is widened to cover the bounds occurring in env and goal.
std::vector<Term> enumerate_terms(const Env& env, const Typ& goal, std::size_t max_size,
                                  EnumBounds bounds = {});

/// Same domain, by filtering the raw enumeration through infer_type. For
/// validating the pruned search at small sizes.
std::vector<Term> enumerate_terms_unpruned(const Env& env, const Typ& goal, std::size_t max_size,
                                           EnumBounds bounds = {});

/// Searches for a neutral term of size <= max_size typed in `env` at a type
/// with at most four nodes and kinds at most two. Returns a counterexample to
/// "no neutral term types in env", or nullopt.
std::optional<TypedTerm> find_neutral(const Env& env, std::size_t max_size,
                                      EnumBounds bounds = {});

/// No neutral term of size <= max_size types in ETVar(Empty, k).
bool check_neutral_tvar(Kind k, std::size_t max_size);

}  // namespace fpred::testkit

#endif  // FPRED_TESTKIT_ENUMERATE_HPP
