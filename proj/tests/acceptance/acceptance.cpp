// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fpred/frontend.hpp"
#include "fpred/testkit/enumerate.hpp"
#include "fpred/testkit/generate.hpp"
#include "fpred/testkit/suites.hpp"
#include "fpred/typecheck.hpp"
#include "golden.hpp"

namespace {

using namespace fpred;
using namespace fpred::testkit;

constexpr std::uint64_t kSeed = 20240601;

// Limits and scales, fixed here.
constexpr double kOracleSeconds = 60.0;
constexpr double kMultisetSeconds = 5.0;
constexpr double kConsistencySeconds = 120.0;
constexpr std::size_t kGeneratedCases = 1000;
constexpr std::size_t kGeneratedBudget = 12;
constexpr std::size_t kHsubstCases = 1000;
constexpr std::size_t kHsubstBudget = 12;
constexpr std::size_t kKindsOfCases = 500;
constexpr std::size_t kMetatheoryCases = 300;

// Exhaustive closed-term domain for criterion 1. The two bound settings
// together cover size 7 with small annotation types and size 6 with larger
// ones; bounds (2, 1) at size 7 do not fit in memory.
struct ExhaustiveDomain {
  std::size_t max_size;
  EnumBounds bounds;
};
const std::vector<ExhaustiveDomain> kExhaustive = {{7, {1, 2}}, {6, {2, 1}}};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  std::size_t instances = 0;

  void add(const PropertyResult& r) {
    instances += r.instances;
    if (!r.ok()) {
      pass = false;
      notes.push_back(r.name + ": " + std::to_string(r.failures) + " failures, e.g. " +
                      r.counterexample);
    }
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool report(int id, const std::string& title, const std::function<Outcome()>& body,
            double limit_seconds = 0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = body();
  const double secs = seconds_since(start);
  if (limit_seconds > 0 && secs >= limit_seconds) {
    o.pass = false;
    std::ostringstream s;
    s << "took " << secs << " s, limit " << limit_seconds << " s";
    o.notes.push_back(s.str());
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << title << " (" << o.instances
            << " instances, " << std::fixed;
  std::cout.precision(2);
  std::cout << secs << " s)\n";
  for (const auto& n : o.notes) std::cout << "  " << n << "\n";
  std::cout.flush();
  return o.pass;
}

// Round trip of print then parse over one scope.
bool round_trips(const Term& t, const frontend::Scope& scope) {
  const auto back = frontend::parse_term(frontend::print_term(t, scope), scope);
  return back.ok() && back.value() == t;
}

bool type_round_trips(const Typ& t, const frontend::Scope& scope) {
  const auto back = frontend::parse_type(frontend::print_type(t, scope), scope);
  return back.ok() && back.value() == t;
}

// Names for every binding of env: a0, a1, ... and T0, T1, ...
frontend::Scope scope_for(const Env& env) {
  frontend::Scope s;
  for (std::size_t i = 0; i < env.term_bindings(); ++i) s.terms.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < env.type_bindings(); ++i) s.types.push_back("T" + std::to_string(i));
  return s;
}

Outcome frontend_corpus() {
  Outcome o;
  PropertyResult terms{"parse(print(t)) = t on the criterion 1 corpus"};
  for (const auto& d : kExhaustive) {
    TermEnumerator en(d.bounds);
    for (std::size_t n = 0; n <= d.max_size; ++n) {
      en.for_each_typed(Env(), n, d.max_size - 1, [&](const TypedTerm& tt) {
        terms.record(round_trips(tt.term, {}), [&] { return frontend::print_term(tt.term); });
      });
    }
  }
  o.add(terms);

  PropertyResult generated{"parse(print(t)) = t on generated terms"};
  const frontend::Scope named{{"a", "b", "c"}, {"R", "S", "T"}};
  Rng rng(kSeed);
  for (std::size_t i = 0; i < kGeneratedCases; ++i) {
    const Term raw = gen_raw_term(rng, kGeneratedBudget, 2, 2, 3);
    generated.record(round_trips(raw, named), [&] { return frontend::print_term(raw, named); });
    const TypedTerm tt = gen_well_typed(kSeed + i, kGeneratedBudget, Env());
    generated.record(round_trips(tt.term, {}), [&] { return frontend::print_term(tt.term); });
  }
  for (std::uint64_t i = 0; i < kHsubstCases; ++i) {
    const HsubstInstance inst = gen_hsubst_instance(kSeed + i, kHsubstBudget);
    const frontend::Scope scope = scope_for(inst.env);
    const frontend::Scope outer = frontend::remove_term_name(scope, inst.input.index);
    generated.record(
        round_trips(inst.input.target, scope) && round_trips(inst.input.substituend, outer),
        [&] { return frontend::print_term(inst.input.target, scope); });
  }
  o.add(generated);

  PropertyResult types{"parse(print(T)) = T on all types of <= 4 nodes"};
  for (const Typ& t : type_universe(2, {4, 3})) {
    types.record(type_round_trips(t, named), [&] { return frontend::print_type(t, named); });
    types.record(type_round_trips(t, {{}, {"Y0", "X"}}), [&] { return frontend::print_type(t); });
  }
  o.add(types);

  for (const auto& c : golden::run_cases(FPRED_GOLDEN_DIR)) {
    ++o.instances;
    o.require(c.pass, "golden " + c.name + ": " + c.message);
  }
  return o;
}

}  // namespace

int main() {
  bool all = true;
  MeasureTally tally;

  all &= report(1, "normalize agrees with the reduction oracle", [&] {
    Outcome o;
    for (const auto& d : kExhaustive) o.add(normalization_exhaustive(d.max_size, d.bounds, &tally));
    o.add(normalization_generated(kSeed, kGeneratedCases, kGeneratedBudget, &tally));
    return o;
  }, kOracleSeconds);

  all &= report(2, "hereditary substitution contract", [&] {
    Outcome o;
    o.add(hsubst_contract(kSeed, kHsubstCases, kHsubstBudget, &tally));
    o.require(o.instances >= kHsubstCases, "too few instances");
    return o;
  });

  all &= report(3, "her_less decreases at every recursive hsubst call", [&] {
    Outcome o;
    o.add(measure_decrease(tally));
    o.instances = tally.calls;
    o.require(tally.runs > 0 && tally.calls > 0, "no calls recorded");
    return o;
  });

  all &= report(4, "multiset_lt agrees with the Dershowitz-Manna closure", [] {
    Outcome o;
    o.add(multiset_order_exhaustive(4, 3));
    return o;
  }, kMultisetSeconds);

  all &= report(5, "kinds_of lemmas", [] {
    Outcome o;
    o.add(kinds_of_kinded(kSeed, kKindsOfCases));
    o.add(kinds_of_tshift(kSeed, kKindsOfCases));
    o.add(kinds_of_tsubst(kSeed, kKindsOfCases));
    o.add(kinds_of_tsubst_all(kSeed, kKindsOfCases));
    return o;
  });

  all &= report(6, "check_kinding agrees with the derivation search", [] {
    Outcome o;
    o.add(kinding_exhaustive(5, 3, 2));
    return o;
  });

  all &= report(7, "metatheory lemmas", [] {
    Outcome o;
    for (auto suite : {weakening_kind, weakening_var, substitution_term, substitution_type,
                       narrowing, kinding_transitive, kinding_wf, regularity}) {
      const PropertyResult r = suite(kSeed, kMetatheoryCases);
      o.add(r);
      o.require(r.instances >= kMetatheoryCases, r.name + ": too few instances");
    }
    return o;
  });

  all &= report(8, "no closed inhabitant of forall X:k. X", [] {
    Outcome o;
    o.add(consistency(6, 2));
    return o;
  }, kConsistencySeconds);

  all &= report(9, "minimal kinds of the quantifier examples", [] {
    Outcome o;
    const std::pair<const char*, Kind> expected[] = {{"forall X:0. X", 1},
                                                     {"forall X:0. forall Y:0. X", 1}};
    for (const auto& [src, k] : expected) {
      ++o.instances;
      const auto t = frontend::parse_type(src);
      const auto got = t.ok() ? infer_kind(Env(), t.value()) : std::nullopt;
      o.require(got == k, std::string(src) + ": got " +
                              (got ? std::to_string(*got) : std::string("none")) +
                              ", expected " + std::to_string(k));
    }
    return o;
  });

  all &= report(10, "frontend round trip and CLI golden cases", frontend_corpus);

  return all ? 0 : 1;
}
