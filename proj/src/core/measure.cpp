#include "fpred/measure.hpp"

#include <algorithm>

namespace fpred {

KindBag::KindBag(std::initializer_list<Kind> kinds) {
  for (Kind k : kinds) insert(k);
}

void KindBag::insert(Kind k, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                             [](const Entry& e, Kind key) { return e.first < key; });
  if (it != entries_.end() && it->first == k) {
    it->second += multiplicity;
  } else {
    entries_.insert(it, Entry{k, multiplicity});
  }
}

std::size_t KindBag::count(Kind k) const {
  for (const auto& [kind, m] : entries_) {
    if (kind == k) return m;
  }
  return 0;
}

std::size_t KindBag::size() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.second;
  return n;
}

std::vector<Kind> KindBag::descending() const {
  std::vector<Kind> out;
  out.reserve(size());
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    out.insert(out.end(), it->second, it->first);
  }
  return out;
}

std::string KindBag::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(entries_[i].first);
    out += ':';
    out += std::to_string(entries_[i].second);
  }
  out += '}';
  return out;
}

KindBag operator+(const KindBag& a, const KindBag& b) {
  KindBag out = a;
  for (const auto& [k, m] : b.entries_) out.insert(k, m);
  return out;
}

KindBag mul_sum(std::size_t n, const KindBag& bag) {
  KindBag out;
  if (n == 0) return out;
  for (const auto& [k, m] : bag.entries()) out.insert(k, m * n);
  return out;
}

bool multiset_lt(const KindBag& a, const KindBag& b) {
  // Walk both bags from the largest kind down, comparing multiplicities.
  auto ia = a.entries().rbegin();
  auto ib = b.entries().rbegin();
  while (ia != a.entries().rend() && ib != b.entries().rend()) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) {
      // The bag with fewer copies runs out first at this kind; its next
      // element (if any) is smaller than the other's copy.
      return ia->second < ib->second;
    }
    ++ia;
    ++ib;
  }
  return ia == a.entries().rend() && ib != b.entries().rend();
}

KindBag kinds_of(const Typ& type) {
  KindBag bag;
  struct Walk {
    KindBag& bag;
    void operator()(const Typ& t) const {
      switch (t.tag()) {
        case Typ::Tag::TVar:
          return;
        case Typ::Tag::Arrow:
          (*this)(t.dom());
          (*this)(t.cod());
          return;
        case Typ::Tag::All:
          bag.insert(t.bound());
          (*this)(t.body());
          return;
      }
    }
  };
  Walk{bag}(type);
  return bag;
}

std::size_t depth(const Typ& type) {
  switch (type.tag()) {
    case Typ::Tag::TVar:
      return 1;
    case Typ::Tag::Arrow:
      return depth(type.dom()) + depth(type.cod());
    case Typ::Tag::All:
      return 1 + depth(type.body());
  }
  return 1;
}

std::size_t term_size(const Term& term) {
  switch (term.tag()) {
    case Term::Tag::Var:
      return 0;
    case Term::Tag::Abs:
    case Term::Tag::TAbs:
      return 1 + term_size(term.body());
    case Term::Tag::App:
      return 1 + term_size(term.fn()) + term_size(term.arg());
    case Term::Tag::TApp:
      return 1 + term_size(term.fn());
  }
  return 0;
}

bool measure_lt(const TypeMeasure& a, const TypeMeasure& b) {
  if (multiset_lt(a.bag, b.bag)) return true;
  return a.bag == b.bag && a.depth < b.depth;
}

bool measure_lt(const HerMeasure& a, const HerMeasure& b) {
  if (measure_lt(a.ty, b.ty)) return true;
  return a.ty == b.ty && a.tsize < b.tsize;
}

bool type_order(const Typ& a, const Typ& b) {
  return measure_lt(TypeMeasure::of(a), TypeMeasure::of(b));
}

bool ordtyp(const Typ& a, const Typ& b) { return a == b || type_order(a, b); }

bool her_less(const std::pair<Typ, Term>& a, const std::pair<Typ, Term>& b) {
  return measure_lt(HerMeasure::of(a.first, a.second), HerMeasure::of(b.first, b.second));
}

}  // namespace fpred
