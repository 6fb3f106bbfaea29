#ifndef FPRED_TESTKIT_SUITES_HPP
#define FPRED_TESTKIT_SUITES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fpred/hereditary.hpp"
#include "fpred/testkit/enumerate.hpp"

namespace fpred::testkit {

/// Outcome of one property over many instances. Only instances whose
/// hypotheses held are counted.
struct PropertyResult {
  PropertyResult() = default;
  explicit PropertyResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string counterexample;  // the first failure, if any

  bool ok() const { return failures == 0 && instances > 0; }
  void record(bool pass, const std::function<std::string()>& describe);
};

/// Accumulates the measure at every recursive hsubst call.
struct MeasureTally {
  std::size_t runs = 0;
  std::size_t calls = 0;
  std::size_t violations = 0;
  std::string first_violation;
};

/// hsubst that records every call into `tally`. The tally must outlive the
/// returned function.
HsubstFn tallying_hsubst(MeasureTally& tally);

// Normalization against the reduction oracle. Checks, for each well-typed t,
// that normalize(t) equals the oracle normal form, keeps the type, and is
// normal. `tally` may be null.
PropertyResult normalization_exhaustive(std::size_t max_size, const EnumBounds& bounds,
                                        MeasureTally* tally);
PropertyResult normalization_generated(std::uint64_t seed, std::size_t cases, std::size_t budget,
                                       MeasureTally* tally);

/// hsubst_checked on generated precondition-satisfying instances.
PropertyResult hsubst_contract(std::uint64_t seed, std::size_t cases, std::size_t budget,
                               MeasureTally* tally);

/// A tally as a property: at least one call seen, no violation.
PropertyResult measure_decrease(const MeasureTally& tally);

// Multiset order.
PropertyResult multiset_order_exhaustive(std::size_t max_elems, Kind max_kind);
PropertyResult order_laws_exhaustive();

// Lemmas about kinds_of.
PropertyResult kinds_of_kinded(std::uint64_t seed, std::size_t cases);
PropertyResult kinds_of_tshift(std::uint64_t seed, std::size_t cases);
PropertyResult kinds_of_tsubst(std::uint64_t seed, std::size_t cases);
PropertyResult kinds_of_tsubst_all(std::uint64_t seed, std::size_t cases);

/// check_kinding against the search oracle on every type with at most
/// `max_nodes` nodes and every context of at most `max_type_bindings` type
/// bindings, with kinds in [0, max_kind]. Contexts may also carry one term
/// binding, well formed or not.
PropertyResult kinding_exhaustive(std::size_t max_nodes, Kind max_kind,
                                  std::size_t max_type_bindings);

// Metatheory.
PropertyResult weakening_kind(std::uint64_t seed, std::size_t cases);
PropertyResult weakening_var(std::uint64_t seed, std::size_t cases);
PropertyResult substitution_term(std::uint64_t seed, std::size_t cases);
PropertyResult substitution_type(std::uint64_t seed, std::size_t cases);
PropertyResult narrowing(std::uint64_t seed, std::size_t cases);
PropertyResult env_subst_coherence(std::uint64_t seed, std::size_t cases);
PropertyResult kinding_transitive(std::uint64_t seed, std::size_t cases);
PropertyResult kinding_wf(std::uint64_t seed, std::size_t cases);
PropertyResult regularity(std::uint64_t seed, std::size_t cases);
PropertyResult neutral_tvar(std::size_t max_size);

/// No closed inhabitant of All k (TVar 0) up to max_size for each k in
/// [0, max_kind], and the probe with one extra term binding does find Var 0.
PropertyResult consistency(std::size_t max_size, Kind max_kind);

// Syntax.
PropertyResult shift_subst_cancel(std::uint64_t seed, std::size_t cases);
PropertyResult parallel_commute(std::uint64_t seed, std::size_t cases);
PropertyResult named_subst_oracle(std::uint64_t seed, std::size_t cases);

// Reduction and enumeration.
PropertyResult normal_iff_no_step(std::uint64_t seed, std::size_t cases);
/// Also checks that neutral terms met along the way are normal.
PropertyResult subject_reduction(std::uint64_t seed, std::size_t cases);
PropertyResult pruned_matches_unpruned(std::size_t max_size);
PropertyResult generator_determinism(std::uint64_t seed, std::size_t cases);

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 300;
};

/// Every suite above at selftest scale.
std::vector<PropertyResult> run_selftest(const SelftestOptions& options);

}  // namespace fpred::testkit

#endif  // FPRED_TESTKIT_SUITES_HPP
