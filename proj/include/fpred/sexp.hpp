#ifndef FPRED_SEXP_HPP
#define FPRED_SEXP_HPP

#include <string>
#include <string_view>

#include "fpred/env.hpp"
#include "fpred/result.hpp"
#include "fpred/syntax.hpp"

namespace fpred {

// Bit-exact s-expression forms:
//   (tvar N) (arrow T U) (all K T)
//   (var N) (abs T t) (app t u) (tabs K t) (tapp t T)
//   (empty) (evar E T) (etvar E K)

std::string to_sexp(const Typ& type);
std::string to_sexp(const Term& term);
std::string to_sexp(const Env& env);

struct SexpError {
  std::size_t offset;
  std::string message;
};

Result<Typ, SexpError> parse_sexp_typ(std::string_view text);
Result<Term, SexpError> parse_sexp_term(std::string_view text);
Result<Env, SexpError> parse_sexp_env(std::string_view text);

}  // namespace fpred

#endif  // FPRED_SEXP_HPP
