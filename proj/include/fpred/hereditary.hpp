#ifndef FPRED_HEREDITARY_HPP
#define FPRED_HEREDITARY_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpred/env.hpp"
#include "fpred/measure.hpp"
#include "fpred/reduction.hpp"
#include "fpred/result.hpp"
#include "fpred/syntax.hpp"

namespace fpred {

/// Substitute `substituend` for term variable `index` in `target`, where
/// `var_type` is the type of that variable. The type drives termination:
/// every redex created by the substitution is reduced by a recursive call at
/// a strictly smaller type.
struct HsubstInput {
  Typ var_type;
  Term target;
  Term substituend;
  Index index;
};

/// True exactly for Abs and TAbs.
bool is_abs(const Term& term);

/// Hereditary substitution. Defined on raw inputs; when the input is
/// well typed and both terms are normal the result is the normal form of
/// subst(target, index, substituend). On ill-typed input it may not terminate.
Term hsubst(const HsubstInput& in);

/// One recursive invocation of hsubst, as seen by the measure instrumentation.
struct HsubstCall {
  std::size_t depth;  // 0 for the root call
  HerMeasure measure;
  bool decreased;  // her_less against the parent call; true for the root
};

struct HsubstTrace {
  Term result;
  std::vector<HsubstCall> calls;
};

/// hsubst, recording the measure at every call.
HsubstTrace hsubst_traced(const HsubstInput& in);

/// One report line per call:
/// `CALL depth=N bag={...} tydepth=N tsize=N DECREASE=yes|no`.
std::string format_calls(const std::vector<HsubstCall>& calls);

/// Raised when a recursive call fails to decrease the termination measure.
class InternalInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// hsubst that throws InternalInvariantViolation as soon as a recursive call
/// does not decrease the measure, instead of possibly diverging.
Term hsubst_guarded(const HsubstInput& in);

using HsubstFn = std::function<Term(const HsubstInput&)>;

/// Normalizer built on hereditary substitution. Every beta-redex met while
/// walking the term is discharged by a call to `hs` at the abstraction's
/// annotation type.
Term normalize(const Term& term, const HsubstFn& hs = hsubst);

enum class CheckErrorKind {
  PreViolated,
  PostNotNormal,
  PostTypeMismatch,
  PostNotReachable,
  PostOrdtypViolated,
};

const char* to_string(CheckErrorKind kind);

struct CheckError {
  CheckErrorKind kind;
  std::string detail;
};

struct CheckOptions {
  std::size_t fuel = kDefaultFuel;
  HsubstFn hsubst = hsubst_guarded;
};

// The checked variants take the ghost (env, goal) explicitly and verify the
// pre- and postconditions around the computation:
//
//   pre:  get_var(env, index) = var_type,
//         target is normal and has type goal in env,
//         substituend is normal and has type var_type in remove_var(env, index)
//   post: result is normal, has type goal in remove_var(env, index),
//         equals the oracle normal form of subst(target, index, substituend),
//         and if target is not an abstraction but the result is, then
//         ordtyp(goal, var_type).

bool precondition_holds(const Env& env, const Typ& goal, const HsubstInput& in);

Result<Term, CheckError> hsubst_checked(const Env& env, const Typ& goal, const HsubstInput& in,
                                        const CheckOptions& options = {});

/// Checks that `term` has type `goal` in `env`, normalizes it while checking
/// the precondition of every hereditary call, then checks that the result is
/// normal, has type `goal`, and agrees with the reduction oracle.
Result<Term, CheckError> normalize_checked(const Env& env, const Typ& goal, const Term& term,
                                           const CheckOptions& options = {});

}  // namespace fpred

#endif  // FPRED_HEREDITARY_HPP
