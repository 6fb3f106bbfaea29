#include "fpred/sexp.hpp"

#include <cctype>
#include <limits>

namespace fpred {

namespace {

void write(std::string& out, const Typ& t) {
  switch (t.tag()) {
    case Typ::Tag::TVar:
      out += "(tvar ";
      out += std::to_string(t.index());
      out += ')';
      return;
    case Typ::Tag::Arrow:
      out += "(arrow ";
      write(out, t.dom());
      out += ' ';
      write(out, t.cod());
      out += ')';
      return;
    case Typ::Tag::All:
      out += "(all ";
      out += std::to_string(t.bound());
      out += ' ';
      write(out, t.body());
      out += ')';
      return;
  }
}

void write(std::string& out, const Term& t) {
  switch (t.tag()) {
    case Term::Tag::Var:
      out += "(var ";
      out += std::to_string(t.index());
      out += ')';
      return;
    case Term::Tag::Abs:
      out += "(abs ";
      write(out, t.annot());
      out += ' ';
      write(out, t.body());
      out += ')';
      return;
    case Term::Tag::App:
      out += "(app ";
      write(out, t.fn());
      out += ' ';
      write(out, t.arg());
      out += ')';
      return;
    case Term::Tag::TAbs:
      out += "(tabs ";
      out += std::to_string(t.bound());
      out += ' ';
      write(out, t.body());
      out += ')';
      return;
    case Term::Tag::TApp:
      out += "(tapp ";
      write(out, t.fn());
      out += ' ';
      write(out, t.type_arg());
      out += ')';
      return;
  }
}

void write(std::string& out, const Env& e) {
  switch (e.tag()) {
    case Env::Tag::Empty:
      out += "(empty)";
      return;
    case Env::Tag::EVar:
      out += "(evar ";
      write(out, e.rest());
      out += ' ';
      write(out, e.annot());
      out += ')';
      return;
    case Env::Tag::ETVar:
      out += "(etvar ";
      write(out, e.rest());
      out += ' ';
      out += std::to_string(e.bound());
      out += ')';
      return;
  }
}

// Recursive-descent reader. Tolerates arbitrary whitespace between tokens.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool failed() const { return error_.has_value(); }
  SexpError error() const { return *error_; }

  Typ typ() {
    open();
    const std::string head = symbol();
    Typ result = Typ::tvar(0);
    if (head == "tvar") {
      result = Typ::tvar(number());
    } else if (head == "arrow") {
      Typ a = typ();
      Typ b = typ();
      result = Typ::arrow(std::move(a), std::move(b));
    } else if (head == "all") {
      const Kind k = number();
      result = Typ::all(k, typ());
    } else {
      fail_at(start_, "unknown type form '" + head + "'");
    }
    close();
    return result;
  }

  Term term() {
    open();
    const std::string head = symbol();
    Term result = Term::var(0);
    if (head == "var") {
      result = Term::var(number());
    } else if (head == "abs") {
      Typ a = typ();
      result = Term::abs(std::move(a), term());
    } else if (head == "app") {
      Term f = term();
      result = Term::app(std::move(f), term());
    } else if (head == "tabs") {
      const Kind k = number();
      result = Term::tabs(k, term());
    } else if (head == "tapp") {
      Term f = term();
      result = Term::tapp(std::move(f), typ());
    } else {
      fail_at(start_, "unknown term form '" + head + "'");
    }
    close();
    return result;
  }

  Env env() {
    open();
    const std::string head = symbol();
    Env result;
    if (head == "empty") {
    } else if (head == "evar") {
      Env rest = env();
      result = Env::evar(std::move(rest), typ());
    } else if (head == "etvar") {
      Env rest = env();
      result = Env::etvar(std::move(rest), number());
    } else {
      fail_at(start_, "unknown env form '" + head + "'");
    }
    close();
    return result;
  }

  void finish() {
    skip();
    if (!failed() && pos_ != text_.size()) fail_at(pos_, "trailing input");
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void fail_at(std::size_t at, std::string msg) {
    if (!error_) error_ = SexpError{at, std::move(msg)};
    pos_ = text_.size();
  }

  void expect(char c) {
    skip();
    if (failed()) return;
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail_at(pos_, std::string("expected '") + c + "'");
      return;
    }
    ++pos_;
  }

  void open() {
    expect('(');
    start_ = pos_;
  }
  void close() { expect(')'); }

  std::string symbol() {
    skip();
    std::string s;
    while (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) {
      s += text_[pos_++];
    }
    if (s.empty()) fail_at(pos_, "expected a form name");
    return s;
  }

  std::uint32_t number() {
    skip();
    if (failed()) return 0;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail_at(pos_, "expected a natural number");
      return 0;
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (v > std::numeric_limits<std::uint32_t>::max()) {
        fail_at(pos_, "number out of range");
        return 0;
      }
    }
    return static_cast<std::uint32_t>(v);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
  std::optional<SexpError> error_;
};

template <class T, class F>
Result<T, SexpError> read_all(std::string_view text, F read) {
  Reader r(text);
  T value = read(r);
  r.finish();
  if (r.failed()) return fail(r.error());
  return value;
}

}  // namespace

std::string to_sexp(const Typ& type) {
  std::string out;
  write(out, type);
  return out;
}

std::string to_sexp(const Term& term) {
  std::string out;
  write(out, term);
  return out;
}

std::string to_sexp(const Env& env) {
  std::string out;
  write(out, env);
  return out;
}

Result<Typ, SexpError> parse_sexp_typ(std::string_view text) {
  return read_all<Typ>(text, [](Reader& r) { return r.typ(); });
}

Result<Term, SexpError> parse_sexp_term(std::string_view text) {
  return read_all<Term>(text, [](Reader& r) { return r.term(); });
}

Result<Env, SexpError> parse_sexp_env(std::string_view text) {
  return read_all<Env>(text, [](Reader& r) { return r.env(); });
}

}  // namespace fpred
