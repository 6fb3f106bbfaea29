#ifndef FPRED_FRONTEND_HPP
#define FPRED_FRONTEND_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fpred/env.hpp"
#include "fpred/result.hpp"
#include "fpred/syntax.hpp"

namespace fpred::frontend {

// Surface grammar:
//
//   Type  ::= 'forall' Ident ':' Nat '.' Type | ATy '->' Type | ATy
//   ATy   ::= Ident | '(' Type ')'
//   Term  ::= '\' Ident ':' Type '.' Term | '/\' Ident ':' Nat '.' Term | AppT
//   AppT  ::= AppT ATm | AppT '[' Type ']' | ATm
//   ATm   ::= Ident | '(' Term ')'
//   File  ::= Decl* Term?
//   Decl  ::= 'assume' Ident ':' Type | 'assume' Ident ':*' Nat
//
// '--' starts a comment running to the end of the line.

/// 1-based.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// `end` is the position just past the last character.
struct SourceSpan {
  SourcePos start;
  SourcePos end;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

std::string to_string(const SourceSpan& span);

struct ParseError {
  std::string message;
  SourceSpan span;
};

/// Names in scope, innermost last. Term and type names are separate.
struct Scope {
  std::vector<std::string> terms;
  std::vector<std::string> types;
};

/// Source spans of a parsed term, shaped like the term: children are indexed
/// the same way as TypeError locations.
struct SpanTree {
  SourceSpan span;
  std::vector<SpanTree> children;

  /// Span of the node at `path`, or of the deepest node on it that exists.
  const SourceSpan& at(const std::vector<unsigned>& path) const;
};

/// One `assume` line: a term variable's type or a type variable's kind.
struct SurfaceDecl {
  std::string name;
  std::variant<Typ, Kind> body;
  SourceSpan span;
};

struct Program {
  std::vector<SurfaceDecl> decls;
  Env env;      // the declarations, left to right, on top of the initial context
  Scope scope;  // names matching env
  std::optional<Term> term;
  SpanTree spans;  // meaningful only when term is set
};

Result<Typ, ParseError> parse_type(std::string_view src, const Scope& scope = {});
Result<Term, ParseError> parse_term(std::string_view src, const Scope& scope = {});

/// Parses declarations followed by an optional term, starting from `env`
/// whose names are `scope`.
Result<Program, ParseError> parse_program(std::string_view src, const Env& env = {},
                                          const Scope& scope = {});

/// Free variables are printed with the names in `scope`; binders get fresh
/// names x0, x1, ... (abstractions), X0, X1, ... (type abstractions) and
/// Y0, Y1, ... (quantifiers), numbered by nesting depth and bumped past any
/// name already in scope.
std::string print_type(const Typ& type, const Scope& scope = {});
std::string print_term(const Term& term, const Scope& scope = {});

/// Scope minus the x-th term name.
Scope remove_term_name(Scope scope, Index x);

}  // namespace fpred::frontend

#endif  // FPRED_FRONTEND_HPP
