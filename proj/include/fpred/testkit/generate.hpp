#ifndef FPRED_TESTKIT_GENERATE_HPP
#define FPRED_TESTKIT_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "fpred/env.hpp"
#include "fpred/hereditary.hpp"
#include "fpred/syntax.hpp"

namespace fpred::testkit {

/// Deterministic across platforms: mt19937_64 is fully specified and the
/// bounded draw below does not go through std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

// Raw generators: no typing discipline. Indices range over [0, scope], so one
// index past the scope (an unbound variable) is possible.
Typ gen_raw_type(Rng& rng, std::size_t max_nodes, Index scope, Kind max_kind);
Term gen_raw_term(Rng& rng, std::size_t max_nodes, Index term_scope, Index type_scope,
                  Kind max_kind);

/// A type well formed in a scope of `type_scope` type variables.
Typ gen_wf_type(Rng& rng, std::size_t max_nodes, Index type_scope, Kind max_kind);

/// A well-formed context with `length` bindings.
Env gen_env(Rng& rng, std::size_t length, Kind max_kind);

struct GenConfig {
  std::size_t max_type_nodes = 4;
  Kind max_kind = 2;
};

struct TypedTerm {
  Term term;
  Typ type;
};

/// A term well typed in `env`, with term_size at most `budget` unless the
/// budget is too small for anything but the fallback (a variable if one is
/// bound, else the polymorphic identity). Deterministic in `seed`.
TypedTerm gen_well_typed(std::uint64_t seed, std::size_t budget, const Env& env,
                         const GenConfig& config = {});

/// Attempts to build a term of type `goal` in `env`; may fail when no
/// inhabitant is found within the budget.
std::optional<Term> gen_inhabitant(Rng& rng, const Env& env, const Typ& goal, std::size_t budget,
                                   const GenConfig& config = {});

/// A generated input for hsubst_checked together with its ghost context.
/// By construction it satisfies the precondition.
struct HsubstInstance {
  Env env;
  Typ goal;
  HsubstInput input;
};

HsubstInstance gen_hsubst_instance(std::uint64_t seed, std::size_t budget,
                                   const GenConfig& config = {});

}  // namespace fpred::testkit

#endif  // FPRED_TESTKIT_GENERATE_HPP
