#include <cctype>
#include <limits>

#include "fpred/frontend.hpp"

namespace fpred::frontend {

std::string to_string(const SourceSpan& span) {
  return std::to_string(span.start.line) + ":" + std::to_string(span.start.column) + "-" +
         std::to_string(span.end.line) + ":" + std::to_string(span.end.column);
}

const SourceSpan& SpanTree::at(const std::vector<unsigned>& path) const {
  const SpanTree* node = this;
  for (unsigned child : path) {
    if (child >= node->children.size()) break;
    node = &node->children[child];
  }
  return node->span;
}

Scope remove_term_name(Scope scope, Index x) {
  if (x < scope.terms.size()) scope.terms.erase(scope.terms.end() - 1 - x);
  return scope;
}

namespace {

enum class Tok {
  Ident,
  Nat,
  Forall,
  Assume,
  Lambda,     // '\'
  TyLambda,   // '/\'
  Colon,
  ColonStar,  // ':*'
  Dot,
  Arrow,
  LParen,
  RParen,
  LBracket,
  RBracket,
  End,
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Nat: return "number";
    case Tok::Forall: return "'forall'";
    case Tok::Assume: return "'assume'";
    case Tok::Lambda: return "'\\'";
    case Tok::TyLambda: return "'/\\'";
    case Tok::Colon: return "':'";
    case Tok::ColonStar: return "':*'";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Result<std::vector<Token>, ParseError> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      const SourcePos start = pos_;
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, "", {start, start}});
        return out;
      }
      const char c = src_[i_];
      Tok kind;
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t j = i_;
        while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) ||
                                   src_[j] == '_')) {
          ++j;
        }
        const std::string word(src_.substr(i_, j - i_));
        advance(j - i_);
        kind = word == "forall" ? Tok::Forall : word == "assume" ? Tok::Assume : Tok::Ident;
        out.push_back({kind, word, {start, pos_}});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i_;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        const std::string digits(src_.substr(i_, j - i_));
        advance(j - i_);
        out.push_back({Tok::Nat, digits, {start, pos_}});
        continue;
      }
      std::size_t len = 1;
      switch (c) {
        case '\\': kind = Tok::Lambda; break;
        case '.': kind = Tok::Dot; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        case ':':
          if (peek(1) == '*') {
            kind = Tok::ColonStar;
            len = 2;
          } else {
            kind = Tok::Colon;
          }
          break;
        case '/':
          if (peek(1) != '\\') return error(start, "expected '/\\'");
          kind = Tok::TyLambda;
          len = 2;
          break;
        case '-':
          if (peek(1) != '>') return error(start, "expected '->'");
          kind = Tok::Arrow;
          len = 2;
          break;
        default:
          return error(start, std::string("unexpected character '") + c + "'");
      }
      const std::string text(src_.substr(i_, len));
      advance(len);
      out.push_back({kind, text, {start, pos_}});
    }
  }

 private:
  char peek(std::size_t ahead) const {
    return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
  }

  void advance(std::size_t n) {
    for (; n > 0 && i_ < src_.size(); --n, ++i_) {
      if (src_[i_] == '\n') {
        ++pos_.line;
        pos_.column = 1;
      } else {
        ++pos_.column;
      }
    }
  }

  void skip_blank() {
    while (i_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[i_]))) {
        advance(1);
      } else if (src_[i_] == '-' && peek(1) == '-') {
        while (i_ < src_.size() && src_[i_] != '\n') advance(1);
      } else {
        break;
      }
    }
  }

  Failure<ParseError> error(SourcePos at, std::string message) const {
    SourcePos end = at;
    ++end.column;
    return fail(ParseError{std::move(message), {at, end}});
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

// Recursive descent. The first error is stored and unwinds the parse through
// empty optionals.
class Parser {
 public:
  Parser(std::vector<Token> tokens, Scope scope) : toks_(std::move(tokens)), scope_(std::move(scope)) {}

  std::optional<ParseError> error;

  std::optional<Typ> type() {
    if (at(Tok::Forall)) {
      next();
      auto name = expect_ident();
      if (!name || !expect(Tok::Colon)) return std::nullopt;
      auto k = nat();
      if (!k || !expect(Tok::Dot)) return std::nullopt;
      scope_.types.push_back(*name);
      auto body = type();
      scope_.types.pop_back();
      if (!body) return std::nullopt;
      return Typ::all(*k, *body);
    }
    auto dom = atomic_type();
    if (!dom) return std::nullopt;
    if (!at(Tok::Arrow)) return dom;
    next();
    auto cod = type();
    if (!cod) return std::nullopt;
    return Typ::arrow(*dom, *cod);
  }

  // A term with its span tree.
  struct Parsed {
    Term term;
    SpanTree spans;
  };

  std::optional<Parsed> term() {
    const SourcePos start = peek().span.start;
    if (at(Tok::Lambda)) {
      next();
      auto name = expect_ident();
      if (!name || !expect(Tok::Colon)) return std::nullopt;
      auto annot = type();
      if (!annot || !expect(Tok::Dot)) return std::nullopt;
      scope_.terms.push_back(*name);
      auto body = term();
      scope_.terms.pop_back();
      if (!body) return std::nullopt;
      return node(Term::abs(*annot, body->term), start, {std::move(body->spans)});
    }
    if (at(Tok::TyLambda)) {
      next();
      auto name = expect_ident();
      if (!name || !expect(Tok::Colon)) return std::nullopt;
      auto k = nat();
      if (!k || !expect(Tok::Dot)) return std::nullopt;
      scope_.types.push_back(*name);
      auto body = term();
      scope_.types.pop_back();
      if (!body) return std::nullopt;
      return node(Term::tabs(*k, body->term), start, {std::move(body->spans)});
    }
    auto head = atomic_term();
    if (!head) return std::nullopt;
    for (;;) {
      if (at(Tok::Ident) || at(Tok::LParen)) {
        auto arg = atomic_term();
        if (!arg) return std::nullopt;
        head = node(Term::app(head->term, arg->term), start,
                    {std::move(head->spans), std::move(arg->spans)});
      } else if (at(Tok::LBracket)) {
        next();
        auto ty = type();
        if (!ty || !expect(Tok::RBracket)) return std::nullopt;
        head = node(Term::tapp(head->term, *ty), start, {std::move(head->spans)});
      } else {
        return head;
      }
    }
  }

  std::optional<Program> program(const Env& env) {
    Program p;
    p.env = env;
    while (at(Tok::Assume)) {
      const SourcePos start = next().span.start;
      auto name = expect_ident();
      if (!name) return std::nullopt;
      if (at(Tok::ColonStar) || (at(Tok::Colon) && peek(1).kind == Tok::Nat)) {
        next();
        auto k = nat();
        if (!k) return std::nullopt;
        p.decls.push_back({*name, *k, {start, last_end_}});
        p.env = p.env.with_tvar(*k);
        scope_.types.push_back(*name);
      } else {
        if (!expect(Tok::Colon)) return std::nullopt;
        auto ty = type();
        if (!ty) return std::nullopt;
        p.decls.push_back({*name, *ty, {start, last_end_}});
        p.env = p.env.with_var(*ty);
        scope_.terms.push_back(*name);
      }
    }
    if (!at(Tok::End)) {
      auto t = term();
      if (!t) return std::nullopt;
      p.term = std::move(t->term);
      p.spans = std::move(t->spans);
    }
    p.scope = scope_;
    if (!finish()) return std::nullopt;
    return p;
  }

  bool finish() {
    if (at(Tok::End)) return true;
    fail_at(peek(), std::string("unexpected ") + describe(peek().kind));
    return false;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  const Token& next() {
    const Token& t = toks_[pos_];
    last_end_ = t.span.end;
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  void fail_at(const Token& t, std::string message) {
    if (!error) error = ParseError{std::move(message), t.span};
  }

  bool expect(Tok kind) {
    if (at(kind)) {
      next();
      return true;
    }
    fail_at(peek(), std::string("expected ") + describe(kind) + ", found " + describe(peek().kind));
    return false;
  }

  std::optional<std::string> expect_ident() {
    if (!at(Tok::Ident)) {
      fail_at(peek(), std::string("expected identifier, found ") + describe(peek().kind));
      return std::nullopt;
    }
    return next().text;
  }

  std::optional<Kind> nat() {
    if (!at(Tok::Nat)) {
      fail_at(peek(), std::string("expected a kind, found ") + describe(peek().kind));
      return std::nullopt;
    }
    const Token& t = next();
    unsigned long long v = 0;
    for (char c : t.text) {
      v = v * 10 + static_cast<unsigned>(c - '0');
      if (v > std::numeric_limits<Kind>::max()) {
        fail_at(t, "kind out of range");
        return std::nullopt;
      }
    }
    return static_cast<Kind>(v);
  }

  static std::optional<Index> lookup(const std::vector<std::string>& names,
                                     const std::string& name) {
    for (std::size_t i = names.size(); i-- > 0;) {
      if (names[i] == name) return static_cast<Index>(names.size() - 1 - i);
    }
    return std::nullopt;
  }

  std::optional<Typ> atomic_type() {
    if (at(Tok::LParen)) {
      next();
      auto t = type();
      if (!t || !expect(Tok::RParen)) return std::nullopt;
      return t;
    }
    if (!at(Tok::Ident)) {
      fail_at(peek(), std::string("expected a type, found ") + describe(peek().kind));
      return std::nullopt;
    }
    const Token& id = peek();
    const auto index = lookup(scope_.types, id.text);
    if (!index) {
      fail_at(id, "unbound type variable '" + id.text + "'");
      return std::nullopt;
    }
    next();
    return Typ::tvar(*index);
  }

  std::optional<Parsed> atomic_term() {
    if (at(Tok::LParen)) {
      next();
      auto t = term();
      if (!t || !expect(Tok::RParen)) return std::nullopt;
      return t;
    }
    if (!at(Tok::Ident)) {
      fail_at(peek(), std::string("expected a term, found ") + describe(peek().kind));
      return std::nullopt;
    }
    const Token& id = peek();
    const auto index = lookup(scope_.terms, id.text);
    if (!index) {
      fail_at(id, "unbound variable '" + id.text + "'");
      return std::nullopt;
    }
    next();
    return Parsed{Term::var(*index), SpanTree{id.span, {}}};
  }

  Parsed node(Term t, SourcePos start, std::vector<SpanTree> children) const {
    return Parsed{std::move(t), SpanTree{{start, last_end_}, std::move(children)}};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SourcePos last_end_;
  Scope scope_;
};

template <class T, class F>
Result<T, ParseError> run_parser(std::string_view src, const Scope& scope, F body) {
  auto tokens = Lexer(src).run();
  if (!tokens) return fail(tokens.error());
  Parser p(std::move(tokens).value(), scope);
  std::optional<T> out = body(p);
  if (!out || p.error) return fail(p.error.value_or(ParseError{"parse failed", {}}));
  return std::move(*out);
}

}  // namespace

Result<Typ, ParseError> parse_type(std::string_view src, const Scope& scope) {
  return run_parser<Typ>(src, scope, [](Parser& p) -> std::optional<Typ> {
    auto t = p.type();
    if (!t || !p.finish()) return std::nullopt;
    return t;
  });
}

Result<Term, ParseError> parse_term(std::string_view src, const Scope& scope) {
  return run_parser<Term>(src, scope, [](Parser& p) -> std::optional<Term> {
    auto t = p.term();
    if (!t || !p.finish()) return std::nullopt;
    return std::move(t->term);
  });
}

Result<Program, ParseError> parse_program(std::string_view src, const Env& env,
                                          const Scope& scope) {
  return run_parser<Program>(src, scope, [&env](Parser& p) { return p.program(env); });
}

}  // namespace fpred::frontend
