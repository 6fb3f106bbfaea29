#ifndef FPRED_ENV_HPP
#define FPRED_ENV_HPP

#include <cstddef>
#include <memory>
#include <optional>

#include "fpred/syntax.hpp"

namespace fpred {

/// Typing context: an interleaving of term-variable types (EVar) and
/// type-variable kinds (ETVar). The two kinds of binding are indexed
/// independently, innermost binding first.
class Env {
 public:
  enum class Tag : std::uint8_t { Empty, EVar, ETVar };

  Env();  // the empty context
  static Env empty() { return Env(); }
  static Env evar(Env rest, Typ annot);
  static Env etvar(Env rest, Kind bound);

  Env with_var(Typ annot) const { return evar(*this, std::move(annot)); }
  Env with_tvar(Kind bound) const { return etvar(*this, bound); }

  Tag tag() const noexcept;
  bool is_empty() const noexcept { return tag() == Tag::Empty; }
  const Env& rest() const noexcept;   // EVar, ETVar
  const Typ& annot() const noexcept;  // EVar
  Kind bound() const noexcept;        // ETVar

  std::size_t term_bindings() const noexcept;
  std::size_t type_bindings() const noexcept;
  std::size_t length() const noexcept { return term_bindings() + type_bindings(); }

  std::size_t hash() const noexcept;
  friend bool operator==(const Env& a, const Env& b) noexcept;

 private:
  struct Node;
  explicit Env(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Kind of the X-th type binding, skipping term bindings.
std::optional<Kind> get_kind(const Env& env, Index index);

/// Type of the x-th term binding, shifted once for every type binding that
/// sits between it and the end of the context.
std::optional<Typ> get_var(const Env& env, Index index);

/// Deletes the x-th term binding. Type bindings are kept. Out-of-range
/// indices leave the context unchanged.
Env remove_var(const Env& env, Index index);

/// Every type variable in `type` is bound in `env`.
bool wf_typ(const Env& env, const Typ& type);

/// Every term binding's type is well formed in the prefix before it.
bool wf_env(const Env& env);

std::ostream& operator<<(std::ostream& os, const Env& env);

}  // namespace fpred

template <>
struct std::hash<fpred::Env> {
  std::size_t operator()(const fpred::Env& e) const noexcept { return e.hash(); }
};

#endif  // FPRED_ENV_HPP
