#ifndef FPRED_MEASURE_HPP
#define FPRED_MEASURE_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fpred/syntax.hpp"

namespace fpred {

/// Finite multiset of kinds. Stored as an association list sorted by
/// ascending kind with strictly positive multiplicities, so == is bag
/// equality.
class KindBag {
 public:
  using Entry = std::pair<Kind, std::size_t>;

  KindBag() = default;
  KindBag(std::initializer_list<Kind> kinds);

  static KindBag singleton(Kind k) { return KindBag{k}; }

  void insert(Kind k, std::size_t multiplicity = 1);

  std::size_t count(Kind k) const;
  std::size_t size() const;  // total number of elements
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Elements in descending order, with repetition.
  std::vector<Kind> descending() const;

  /// Canonical text: `{k1:m1, k2:m2}` in ascending kind order, `{}` if empty.
  std::string to_string() const;

  friend KindBag operator+(const KindBag& a, const KindBag& b);
  friend bool operator==(const KindBag& a, const KindBag& b) = default;

 private:
  std::vector<Entry> entries_;
};

/// n-fold bag sum.
KindBag mul_sum(std::size_t n, const KindBag& bag);

/// Dershowitz-Manna extension of > on naturals, decided by comparing the
/// descending sequences lexicographically (a proper prefix is smaller).
bool multiset_lt(const KindBag& a, const KindBag& b);

/// Bag of quantifier bounds occurring in the type.
KindBag kinds_of(const Typ& type);

/// Number of quantifiers and type variables; always >= 1.
std::size_t depth(const Typ& type);

/// Non-variable term nodes; type annotations do not count.
std::size_t term_size(const Term& term);

struct TypeMeasure {
  KindBag bag;
  std::size_t depth;

  static TypeMeasure of(const Typ& type) { return {kinds_of(type), fpred::depth(type)}; }
  friend bool operator==(const TypeMeasure&, const TypeMeasure&) = default;
};

/// Measure of a hereditary substitution call: the substituted variable's
/// type and the size of the term being traversed.
struct HerMeasure {
  TypeMeasure ty;
  std::size_t tsize;

  static HerMeasure of(const Typ& type, const Term& term) {
    return {TypeMeasure::of(type), term_size(term)};
  }
};

/// Lexicographic: multiset order on bags, then depth under bag equality.
bool measure_lt(const TypeMeasure& a, const TypeMeasure& b);
/// Lexicographic: measure_lt on types, then term size under equal type measures.
bool measure_lt(const HerMeasure& a, const HerMeasure& b);

bool type_order(const Typ& a, const Typ& b);
/// Reflexive closure of type_order, reflexivity being syntactic equality.
bool ordtyp(const Typ& a, const Typ& b);

bool her_less(const std::pair<Typ, Term>& a, const std::pair<Typ, Term>& b);

}  // namespace fpred

#endif  // FPRED_MEASURE_HPP
