#ifndef FPRED_REDUCTION_HPP
#define FPRED_REDUCTION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fpred/result.hpp"
#include "fpred/syntax.hpp"

namespace fpred {

// Small-step beta reduction, used as the ground truth for the hereditary
// normalizer. Independent of hereditary.hpp by construction.

enum class RedexRule { AppAbs, TappTabs };

const char* to_string(RedexRule rule);

struct ReductionStep {
  std::vector<unsigned> path;  // child indices from the root to the redex
  RedexRule rule;
  Term after;
};

struct ReductionTrace {
  Term initial;
  std::vector<ReductionStep> steps;

  const Term& final_term() const { return steps.empty() ? initial : steps.back().after; }
};

/// Renders a redex path as dot-separated child indices; the root is ".".
std::string path_to_string(const std::vector<unsigned>& path);

/// One line per step: `PATH TAG SEXP`.
std::string format_trace(const ReductionTrace& trace);

/// Contracts the leftmost-outermost redex, or nullopt if `term` is normal.
std::optional<Term> step(const Term& term);
std::optional<ReductionStep> step_traced(const Term& term);

struct FuelExhausted {
  std::size_t fuel;
  Term reached;
};

inline constexpr std::size_t kDefaultFuel = 100000;

/// Iterates `step` until normal or `fuel` steps have been taken. Normality is
/// tested before each step, so an already-normal term needs no fuel.
Result<Term, FuelExhausted> normalize_fuel(const Term& term, std::size_t fuel);
Result<ReductionTrace, FuelExhausted> normalize_traced(const Term& term, std::size_t fuel);

bool is_normal(const Term& term);
bool is_neutral(const Term& term);

}  // namespace fpred

#endif  // FPRED_REDUCTION_HPP
