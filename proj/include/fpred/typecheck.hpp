#ifndef FPRED_TYPECHECK_HPP
#define FPRED_TYPECHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "fpred/env.hpp"
#include "fpred/result.hpp"
#include "fpred/syntax.hpp"

namespace fpred {

enum class TypeErrorKind {
  UnboundTermVar,
  UnboundTypeVar,
  NotAnArrow,
  NotAForall,
  ArgTypeMismatch,
  KindTooLarge,
  IllFormedEnv,
};

const char* to_string(TypeErrorKind kind);

/// A failed typing premise. `location` is a path of child indices from the
/// root of the checked term: 0 is the left (or only) term child, 1 the right.
struct TypeError {
  TypeErrorKind kind;
  std::vector<unsigned> location;
  std::string detail;
};

/// Least kind k such that `type` is kindable at k in `env`; nullopt when the
/// environment is ill formed or a type variable is unbound.
///
/// Kinding is upward closed, so this decides the full relation: `type` has
/// kind k' exactly when infer_kind returns some k <= k'.
std::optional<Kind> infer_kind(const Env& env, const Typ& type);

bool check_kinding(const Env& env, const Typ& type, Kind kind);

/// Syntax-directed typing. Application requires the argument type to equal
/// the arrow domain syntactically; type application requires the argument to
/// be kindable at the quantifier's bound.
Result<Typ, TypeError> infer_type(const Env& env, const Term& term);

/// Brute-force derivation search over the three kinding rules, with every
/// intermediate kind drawn from [0, bound]. Exponential; for cross-checking
/// infer_kind on small inputs only.
bool kinding_search_oracle(const Env& env, const Typ& type, Kind kind, Kind bound);

}  // namespace fpred

#endif  // FPRED_TYPECHECK_HPP
