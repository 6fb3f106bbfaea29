#include "fpred/reduction.hpp"

#include "fpred/sexp.hpp"

namespace fpred {

const char* to_string(RedexRule rule) {
  switch (rule) {
    case RedexRule::AppAbs:
      return "AppAbs";
    case RedexRule::TappTabs:
      return "TappTabs";
  }
  return "?";
}

std::string path_to_string(const std::vector<unsigned>& path) {
  if (path.empty()) return ".";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

std::string format_trace(const ReductionTrace& trace) {
  std::string out;
  for (const auto& s : trace.steps) {
    out += path_to_string(s.path);
    out += ' ';
    out += to_string(s.rule);
    out += ' ';
    out += to_sexp(s.after);
    out += '\n';
  }
  return out;
}

namespace {

struct Contraction {
  Term result;
  RedexRule rule;
};

// Leftmost-outermost: the node itself, then children left to right.
std::optional<Contraction> contract(const Term& t, std::vector<unsigned>& path) {
  switch (t.tag()) {
    case Term::Tag::Var:
      return std::nullopt;
    case Term::Tag::Abs: {
      path.push_back(0);
      auto r = contract(t.body(), path);
      if (!r) {
        path.pop_back();
        return std::nullopt;
      }
      return Contraction{Term::abs(t.annot(), std::move(r->result)), r->rule};
    }
    case Term::Tag::TAbs: {
      path.push_back(0);
      auto r = contract(t.body(), path);
      if (!r) {
        path.pop_back();
        return std::nullopt;
      }
      return Contraction{Term::tabs(t.bound(), std::move(r->result)), r->rule};
    }
    case Term::Tag::App: {
      if (t.fn().is_abs()) {
        return Contraction{subst(t.fn().body(), 0, t.arg()), RedexRule::AppAbs};
      }
      path.push_back(0);
      if (auto r = contract(t.fn(), path)) {
        return Contraction{Term::app(std::move(r->result), t.arg()), r->rule};
      }
      path.back() = 1;
      if (auto r = contract(t.arg(), path)) {
        return Contraction{Term::app(t.fn(), std::move(r->result)), r->rule};
      }
      path.pop_back();
      return std::nullopt;
    }
    case Term::Tag::TApp: {
      if (t.fn().is_tabs()) {
        return Contraction{subst_typ(t.fn().body(), 0, t.type_arg()), RedexRule::TappTabs};
      }
      path.push_back(0);
      if (auto r = contract(t.fn(), path)) {
        return Contraction{Term::tapp(std::move(r->result), t.type_arg()), r->rule};
      }
      path.pop_back();
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ReductionStep> step_traced(const Term& term) {
  std::vector<unsigned> path;
  auto r = contract(term, path);
  if (!r) return std::nullopt;
  return ReductionStep{std::move(path), r->rule, std::move(r->result)};
}

std::optional<Term> step(const Term& term) {
  std::vector<unsigned> path;
  auto r = contract(term, path);
  if (!r) return std::nullopt;
  return std::move(r->result);
}

Result<Term, FuelExhausted> normalize_fuel(const Term& term, std::size_t fuel) {
  Term current = term;
  for (std::size_t used = 0;; ++used) {
    auto next = step(current);
    if (!next) return current;
    if (used == fuel) return fail(FuelExhausted{fuel, current});
    current = std::move(*next);
  }
}

Result<ReductionTrace, FuelExhausted> normalize_traced(const Term& term, std::size_t fuel) {
  ReductionTrace trace{term, {}};
  for (std::size_t used = 0;; ++used) {
    auto next = step_traced(trace.final_term());
    if (!next) return trace;
    if (used == fuel) return fail(FuelExhausted{fuel, trace.final_term()});
    trace.steps.push_back(std::move(*next));
  }
}

bool is_neutral(const Term& term) {
  const Term* t = &term;
  while (true) {
    switch (t->tag()) {
      case Term::Tag::Var:
        return true;
      case Term::Tag::App:
        if (!is_normal(t->arg())) return false;
        t = &t->fn();
        break;
      case Term::Tag::TApp:
        t = &t->fn();
        break;
      case Term::Tag::Abs:
      case Term::Tag::TAbs:
        return false;
    }
  }
}

bool is_normal(const Term& term) {
  const Term* t = &term;
  while (t->is_abs() || t->is_tabs()) t = &t->body();
  return is_neutral(*t);
}

}  // namespace fpred
