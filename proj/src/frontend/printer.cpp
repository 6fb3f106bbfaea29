#include <algorithm>

#include "fpred/frontend.hpp"

namespace fpred::frontend {

namespace {

std::string fresh(const std::vector<std::string>& in_scope, const char* prefix, std::size_t n) {
  for (;; ++n) {
    std::string name = prefix + std::to_string(n);
    if (std::find(in_scope.begin(), in_scope.end(), name) == in_scope.end()) return name;
  }
}

std::string lookup(const std::vector<std::string>& names, Index i, const char* unbound) {
  if (i < names.size()) return names[names.size() - 1 - i];
  return unbound + std::to_string(i);
}

class Printer {
 public:
  explicit Printer(Scope scope) : scope_(std::move(scope)) {}

  void type(const Typ& t) {
    switch (t.tag()) {
      case Typ::Tag::TVar:
        out_ += lookup(scope_.types, t.index(), "?X");
        return;
      case Typ::Tag::Arrow:
        atomic_type(t.dom());
        out_ += " -> ";
        type(t.cod());
        return;
      case Typ::Tag::All: {
        const std::string name = fresh(scope_.types, "Y", foralls_);
        out_ += "forall " + name + ":" + std::to_string(t.bound()) + ". ";
        scope_.types.push_back(name);
        ++foralls_;
        type(t.body());
        --foralls_;
        scope_.types.pop_back();
        return;
      }
    }
  }

  void term(const Term& t) {
    switch (t.tag()) {
      case Term::Tag::Abs: {
        const std::string name = fresh(scope_.terms, "x", abs_depth_);
        out_ += "\\" + name + ":";
        // A compound annotation is set off by spaces so its end stays visible.
        if (t.annot().is_tvar()) {
          type(t.annot());
          out_ += ". ";
        } else {
          out_ += " ";
          type(t.annot());
          out_ += " . ";
        }
        scope_.terms.push_back(name);
        ++abs_depth_;
        term(t.body());
        --abs_depth_;
        scope_.terms.pop_back();
        return;
      }
      case Term::Tag::TAbs: {
        const std::string name = fresh(scope_.types, "X", tabs_depth_);
        out_ += "/\\" + name + ":" + std::to_string(t.bound()) + ". ";
        scope_.types.push_back(name);
        ++tabs_depth_;
        term(t.body());
        --tabs_depth_;
        scope_.types.pop_back();
        return;
      }
      default:
        application(t);
    }
  }

  std::string take() { return std::move(out_); }

 private:
  void atomic_type(const Typ& t) {
    if (t.is_tvar()) return type(t);
    out_ += "(";
    type(t);
    out_ += ")";
  }

  void application(const Term& t) {
    switch (t.tag()) {
      case Term::Tag::Var:
        out_ += lookup(scope_.terms, t.index(), "?x");
        return;
      case Term::Tag::App:
        application(t.fn());
        out_ += " ";
        atomic_term(t.arg());
        return;
      case Term::Tag::TApp:
        application(t.fn());
        out_ += " [";
        type(t.type_arg());
        out_ += "]";
        return;
      default:
        atomic_term(t);
    }
  }

  void atomic_term(const Term& t) {
    if (t.is_var()) return application(t);
    out_ += "(";
    term(t);
    out_ += ")";
  }

  Scope scope_;
  std::string out_;
  std::size_t abs_depth_ = 0;
  std::size_t tabs_depth_ = 0;
  std::size_t foralls_ = 0;
};

}  // namespace

std::string print_type(const Typ& type, const Scope& scope) {
  Printer p(scope);
  p.type(type);
  return p.take();
}

std::string print_term(const Term& term, const Scope& scope) {
  Printer p(scope);
  p.term(term);
  return p.take();
}

}  // namespace fpred::frontend
