#ifndef FPRED_SYNTAX_HPP
#define FPRED_SYNTAX_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>

namespace fpred {

/// Universe level. Kinds are plain naturals; level k+1 may quantify over level k.
using Kind = std::uint32_t;

/// De Bruijn index. Term and type variables live in separate index spaces.
using Index = std::uint32_t;

/// Types: type variables, arrows, and kinded universal quantification.
///
/// Values are immutable and share structure; copying a Typ copies a pointer.
/// Equality is structural (de Bruijn makes alpha-equivalence syntactic) and
/// short-circuits on a cached hash.
class Typ {
 public:
  enum class Tag : std::uint8_t { TVar, Arrow, All };

  static Typ tvar(Index index);
  static Typ arrow(Typ dom, Typ cod);
  static Typ all(Kind bound, Typ body);

  Tag tag() const noexcept;
  bool is_tvar() const noexcept { return tag() == Tag::TVar; }
  bool is_arrow() const noexcept { return tag() == Tag::Arrow; }
  bool is_all() const noexcept { return tag() == Tag::All; }

  // Accessors are only meaningful for the matching constructor.
  Index index() const noexcept;
  const Typ& dom() const noexcept;
  const Typ& cod() const noexcept;
  Kind bound() const noexcept;
  const Typ& body() const noexcept;

  /// Number of constructor nodes.
  std::size_t node_count() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Typ& a, const Typ& b) noexcept;

 private:
  struct Node;
  explicit Typ(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Terms: variables, typed abstraction, application, kinded type abstraction,
/// and type application.
class Term {
 public:
  enum class Tag : std::uint8_t { Var, Abs, App, TAbs, TApp };

  static Term var(Index index);
  static Term abs(Typ annot, Term body);
  static Term app(Term fn, Term arg);
  static Term tabs(Kind bound, Term body);
  static Term tapp(Term fn, Typ arg);

  Tag tag() const noexcept;
  bool is_var() const noexcept { return tag() == Tag::Var; }
  bool is_abs() const noexcept { return tag() == Tag::Abs; }
  bool is_app() const noexcept { return tag() == Tag::App; }
  bool is_tabs() const noexcept { return tag() == Tag::TAbs; }
  bool is_tapp() const noexcept { return tag() == Tag::TApp; }

  Index index() const noexcept;        // Var
  const Typ& annot() const noexcept;   // Abs
  const Term& body() const noexcept;   // Abs, TAbs
  const Term& fn() const noexcept;     // App, TApp
  const Term& arg() const noexcept;    // App
  Kind bound() const noexcept;         // TAbs
  const Typ& type_arg() const noexcept;  // TApp

  /// Constructor nodes, counting embedded type nodes too.
  std::size_t node_count() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Shifting and substitution. All six are total and pure.

/// Increments every type-variable index >= cutoff.
Typ tshift(Index cutoff, const Typ& type);
/// Replaces TVar `index` by `replacement`, decrementing indices above it.
Typ tsubst(const Typ& type, Index index, const Typ& replacement);

/// Increments every free term-variable index >= cutoff. Types are untouched.
Term shift(Index cutoff, const Term& term);
/// Shifts the type-variable indices embedded in a term.
Term shift_typ(Index cutoff, const Term& term);
/// Capture-avoiding substitution of `replacement` for term variable `index`.
Term subst(const Term& term, Index index, const Term& replacement);
/// Substitutes a type for type variable `index` in every embedded type.
Term subst_typ(const Term& term, Index index, const Typ& replacement);

std::ostream& operator<<(std::ostream& os, const Typ& type);
std::ostream& operator<<(std::ostream& os, const Term& term);

}  // namespace fpred

template <>
struct std::hash<fpred::Typ> {
  std::size_t operator()(const fpred::Typ& t) const noexcept { return t.hash(); }
};

template <>
struct std::hash<fpred::Term> {
  std::size_t operator()(const fpred::Term& t) const noexcept { return t.hash(); }
};

#endif  // FPRED_SYNTAX_HPP
