#ifndef FPRED_TESTS_BUILDERS_HPP
#define FPRED_TESTS_BUILDERS_HPP

#include "fpred/env.hpp"
#include "fpred/syntax.hpp"

// Short constructors for writing ASTs in tests.
namespace fpred::build {

inline Typ X(Index i) { return Typ::tvar(i); }
inline Typ arr(Typ a, Typ b) { return Typ::arrow(std::move(a), std::move(b)); }
inline Typ all(Kind k, Typ body) { return Typ::all(k, std::move(body)); }

inline Term v(Index i) { return Term::var(i); }
inline Term lam(Typ t, Term body) { return Term::abs(std::move(t), std::move(body)); }
inline Term app(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }
inline Term tlam(Kind k, Term body) { return Term::tabs(k, std::move(body)); }
inline Term tapp(Term f, Typ t) { return Term::tapp(std::move(f), std::move(t)); }

inline Env empty() { return Env(); }

}  // namespace fpred::build

#endif  // FPRED_TESTS_BUILDERS_HPP
