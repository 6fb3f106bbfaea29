#include "fpred/hereditary.hpp"

#include <optional>

#include "fpred/sexp.hpp"
#include "fpred/typecheck.hpp"

namespace fpred {

bool is_abs(const Term& term) { return term.is_abs() || term.is_tabs(); }

namespace {

// Observers see every call before its clause runs. The plain observer
// computes nothing, so hsubst pays nothing for the instrumentation.
struct Unobserved {
  struct Frame {};
  Frame enter(const Typ&, const Term&, const Frame*, std::size_t) { return {}; }
};

struct MeasureWatch {
  struct Frame {
    HerMeasure measure;
  };

  bool record = false;
  bool throw_on_violation = false;
  std::vector<HsubstCall> calls;

  Frame enter(const Typ& type, const Term& target, const Frame* parent, std::size_t depth) {
    Frame frame{HerMeasure::of(type, target)};
    const bool decreased = parent == nullptr || measure_lt(frame.measure, parent->measure);
    if (record) calls.push_back(HsubstCall{depth, frame.measure, decreased});
    if (!decreased && throw_on_violation) {
      throw InternalInvariantViolation(
          "hsubst measure did not decrease at depth " + std::to_string(depth) + ": (" +
          frame.measure.ty.bag.to_string() + ", " + std::to_string(frame.measure.ty.depth) +
          ", " + std::to_string(frame.measure.tsize) + ") vs parent (" +
          parent->measure.ty.bag.to_string() + ", " + std::to_string(parent->measure.ty.depth) +
          ", " + std::to_string(parent->measure.tsize) + ")");
    }
    return frame;
  }
};

template <class Observer>
class Hereditary {
 public:
  using Frame = typename Observer::Frame;

  explicit Hereditary(Observer& observer) : observer_(observer) {}

  Term run(const Typ& type, const Term& t, const Term& u, Index x, const Frame* parent,
           std::size_t depth) {
    const Frame frame = observer_.enter(type, t, parent, depth);
    const std::size_t next = depth + 1;
    switch (t.tag()) {
      case Term::Tag::Var: {
        const Index i = t.index();
        if (i < x) return t;
        if (i == x) return u;
        return Term::var(i - 1);
      }
      case Term::Tag::Abs:
        return Term::abs(t.annot(), run(type, t.body(), shift(0, u), x + 1, &frame, next));
      case Term::Tag::TAbs:
        return Term::tabs(t.bound(),
                          run(tshift(0, type), t.body(), shift_typ(0, u), x, &frame, next));
      case Term::Tag::TApp: {
        Term r = run(type, t.fn(), u, x, &frame, next);
        if (r.is_tabs()) return subst_typ(r.body(), 0, t.type_arg());
        return Term::tapp(std::move(r), t.type_arg());
      }
      case Term::Tag::App: {
        // Argument first, then function.
        Term r2 = run(type, t.arg(), u, x, &frame, next);
        Term r1 = run(type, t.fn(), u, x, &frame, next);
        if (r1.is_abs()) return run(r1.annot(), r1.body(), r2, 0, &frame, next);
        return Term::app(std::move(r1), std::move(r2));
      }
    }
    return t;
  }

 private:
  Observer& observer_;
};

template <class Observer>
Term run_hsubst(const HsubstInput& in, Observer& observer) {
  return Hereditary<Observer>(observer).run(in.var_type, in.target, in.substituend, in.index,
                                            nullptr, 0);
}

}  // namespace

Term hsubst(const HsubstInput& in) {
  Unobserved observer;
  return run_hsubst(in, observer);
}

HsubstTrace hsubst_traced(const HsubstInput& in) {
  MeasureWatch watch;
  watch.record = true;
  Term result = run_hsubst(in, watch);
  return HsubstTrace{std::move(result), std::move(watch.calls)};
}

Term hsubst_guarded(const HsubstInput& in) {
  MeasureWatch watch;
  watch.throw_on_violation = true;
  return run_hsubst(in, watch);
}

std::string format_calls(const std::vector<HsubstCall>& calls) {
  std::string out;
  for (const auto& c : calls) {
    out += "CALL depth=" + std::to_string(c.depth) + " bag=" + c.measure.ty.bag.to_string() +
           " tydepth=" + std::to_string(c.measure.ty.depth) +
           " tsize=" + std::to_string(c.measure.tsize) +
           " DECREASE=" + (c.decreased ? "yes" : "no") + "\n";
  }
  return out;
}

Term normalize(const Term& term, const HsubstFn& hs) {
  switch (term.tag()) {
    case Term::Tag::Var:
      return term;
    case Term::Tag::Abs:
      return Term::abs(term.annot(), normalize(term.body(), hs));
    case Term::Tag::TAbs:
      return Term::tabs(term.bound(), normalize(term.body(), hs));
    case Term::Tag::App: {
      Term arg = normalize(term.arg(), hs);
      Term fn = normalize(term.fn(), hs);
      if (fn.is_abs()) return hs(HsubstInput{fn.annot(), fn.body(), std::move(arg), 0});
      return Term::app(std::move(fn), std::move(arg));
    }
    case Term::Tag::TApp: {
      Term fn = normalize(term.fn(), hs);
      if (fn.is_tabs()) return subst_typ(fn.body(), 0, term.type_arg());
      return Term::tapp(std::move(fn), term.type_arg());
    }
  }
  return term;
}

////////////////////////////////////////////////////////////////////////////////
// Checked variants

const char* to_string(CheckErrorKind kind) {
  switch (kind) {
    case CheckErrorKind::PreViolated:
      return "PreViolated";
    case CheckErrorKind::PostNotNormal:
      return "PostNotNormal";
    case CheckErrorKind::PostTypeMismatch:
      return "PostTypeMismatch";
    case CheckErrorKind::PostNotReachable:
      return "PostNotReachable";
    case CheckErrorKind::PostOrdtypViolated:
      return "PostOrdtypViolated";
  }
  return "?";
}

namespace {

struct PreFailure {
  bool normality;  // false: a typing clause failed
  std::string detail;
};

bool has_type(const Env& env, const Term& t, const Typ& expected) {
  const auto r = infer_type(env, t);
  return r.ok() && r.value() == expected;
}

std::optional<PreFailure> pre_failure(const Env& env, const Typ& goal, const HsubstInput& in) {
  const auto declared = get_var(env, in.index);
  if (!declared) {
    return PreFailure{false, "variable " + std::to_string(in.index) + " is not bound"};
  }
  if (!(*declared == in.var_type)) {
    return PreFailure{false, "variable " + std::to_string(in.index) + " has type " +
                                 to_sexp(*declared) + ", not " + to_sexp(in.var_type)};
  }
  if (!has_type(env, in.target, goal)) {
    return PreFailure{false, "target does not have type " + to_sexp(goal)};
  }
  if (!is_normal(in.target)) return PreFailure{true, "target is not normal"};
  if (!has_type(remove_var(env, in.index), in.substituend, in.var_type)) {
    return PreFailure{false, "substituend does not have type " + to_sexp(in.var_type)};
  }
  if (!is_normal(in.substituend)) return PreFailure{true, "substituend is not normal"};
  return std::nullopt;
}

std::optional<CheckError> post_failure(const Env& env, const Typ& goal, const Term& source,
                                       const Term& result, std::size_t fuel) {
  if (!is_normal(result)) {
    return CheckError{CheckErrorKind::PostNotNormal, "result " + to_sexp(result) + " is not normal"};
  }
  const auto type = infer_type(env, result);
  if (!type.ok() || !(type.value() == goal)) {
    return CheckError{CheckErrorKind::PostTypeMismatch,
                      "result " + to_sexp(result) + " does not have type " + to_sexp(goal)};
  }
  const auto oracle = normalize_fuel(source, fuel);
  if (!oracle.ok()) {
    return CheckError{CheckErrorKind::PostNotReachable,
                      "reduction oracle ran out of fuel after " + std::to_string(fuel) + " steps"};
  }
  if (!(oracle.value() == result)) {
    return CheckError{CheckErrorKind::PostNotReachable,
                      "oracle normal form " + to_sexp(oracle.value()) + " differs from result " +
                          to_sexp(result)};
  }
  return std::nullopt;
}

}  // namespace

bool precondition_holds(const Env& env, const Typ& goal, const HsubstInput& in) {
  return !pre_failure(env, goal, in).has_value();
}

Result<Term, CheckError> hsubst_checked(const Env& env, const Typ& goal, const HsubstInput& in,
                                        const CheckOptions& options) {
  if (auto pre = pre_failure(env, goal, in)) {
    return fail(CheckError{CheckErrorKind::PreViolated, std::move(pre->detail)});
  }
  Term result = options.hsubst(in);
  const Env outer = remove_var(env, in.index);
  const Term source = subst(in.target, in.index, in.substituend);
  if (auto post = post_failure(outer, goal, source, result, options.fuel)) {
    return fail(std::move(*post));
  }
  if (!is_abs(in.target) && is_abs(result) && !ordtyp(goal, in.var_type)) {
    return fail(CheckError{CheckErrorKind::PostOrdtypViolated,
                           "result is an abstraction but " + to_sexp(goal) +
                               " is not below " + to_sexp(in.var_type)});
  }
  return result;
}

namespace {

// normalize, with the typing context tracked so that every hereditary call
// can be run through hsubst_checked.
class CheckedNormalizer {
 public:
  explicit CheckedNormalizer(const CheckOptions& options) : options_(options) {}

  Result<Term, CheckError> run(const Env& env, const Term& t) {
    switch (t.tag()) {
      case Term::Tag::Var:
        return t;
      case Term::Tag::Abs: {
        auto body = run(env.with_var(t.annot()), t.body());
        if (!body) return body;
        return Term::abs(t.annot(), std::move(body).value());
      }
      case Term::Tag::TAbs: {
        auto body = run(env.with_tvar(t.bound()), t.body());
        if (!body) return body;
        return Term::tabs(t.bound(), std::move(body).value());
      }
      case Term::Tag::App: {
        auto arg = run(env, t.arg());
        if (!arg) return arg;
        auto fn = run(env, t.fn());
        if (!fn) return fn;
        const Term& f = fn.value();
        if (!f.is_abs()) return Term::app(f, std::move(arg).value());
        const auto fn_type = infer_type(env, t.fn());
        if (!fn_type.ok() || !fn_type.value().is_arrow()) {
          return fail(CheckError{CheckErrorKind::PreViolated,
                                 "function position of " + to_sexp(t) + " is not an arrow"});
        }
        const Env inner = env.with_var(f.annot());
        const HsubstInput in{f.annot(), f.body(), std::move(arg).value(), 0};
        // A broken precondition here means an earlier normalization step
        // produced a wrong result.
        if (auto pre = pre_failure(inner, fn_type.value().cod(), in)) {
          return fail(CheckError{
              pre->normality ? CheckErrorKind::PostNotNormal : CheckErrorKind::PostTypeMismatch,
              "at hereditary call for " + to_sexp(t) + ": " + pre->detail});
        }
        return hsubst_checked(inner, fn_type.value().cod(), in, options_);
      }
      case Term::Tag::TApp: {
        auto fn = run(env, t.fn());
        if (!fn) return fn;
        const Term& f = fn.value();
        if (f.is_tabs()) return subst_typ(f.body(), 0, t.type_arg());
        return Term::tapp(f, t.type_arg());
      }
    }
    return t;
  }

 private:
  const CheckOptions& options_;
};

}  // namespace

Result<Term, CheckError> normalize_checked(const Env& env, const Typ& goal, const Term& term,
                                           const CheckOptions& options) {
  const auto type = infer_type(env, term);
  if (!type.ok()) {
    return fail(CheckError{CheckErrorKind::PreViolated,
                           std::string("term is ill typed: ") + to_string(type.error().kind) +
                               ": " + type.error().detail});
  }
  if (!(type.value() == goal)) {
    return fail(CheckError{CheckErrorKind::PreViolated, "term has type " +
                                                            to_sexp(type.value()) + ", not " +
                                                            to_sexp(goal)});
  }
  auto result = CheckedNormalizer(options).run(env, term);
  if (!result) return result;
  if (auto post = post_failure(env, goal, term, result.value(), options.fuel)) {
    return fail(std::move(*post));
  }
  return result;
}

}  // namespace fpred
