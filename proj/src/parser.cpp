#include "qfrob/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace qfrob {

namespace {

enum class Tok { integer, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::integer:
      return "integer";
    case Tok::ident:
      return "variable";
    case Tok::plus:
      return "'+'";
    case Tok::minus:
      return "'-'";
    case Tok::star:
      return "'*'";
    case Tok::slash:
      return "'/'";
    case Tok::caret:
      return "'^'";
    case Tok::lparen:
      return "'('";
    case Tok::rparen:
      return "')'";
    case Tok::end:
      return "end of input";
  }
  return "?";
}

class Parser {
 public:
  Parser(std::string_view text, const VariableNames& names, SourcePosition origin)
      : text_(text), names_(names), origin_(origin) {
    tokenize();
  }

  Polynomial parse() {
    Polynomial p = expr();
    expect_end();
    return p;
  }

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    SourcePosition pos = origin_;
    pos.column += offset;
    throw ParseError(pos.line, pos.column,
                     "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " +
                         message);
  }

  [[noreturn]] void unexpected(std::initializer_list<Tok> expected) const {
    const Token& t = peek();
    std::string msg = "unexpected " + (t.kind == Tok::end ? describe(Tok::end) : "'" + t.text + "'") +
                      "; expected one of: ";
    bool first = true;
    for (Tok e : expected) {
      if (!first) msg += ", ";
      msg += describe(e);
      first = false;
    }
    fail(t.offset, msg);
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
        if (i < text_.size() && (text_[i] == '.' || text_[i] == 'e' || text_[i] == 'E'))
          fail(i, "floating-point literals are not accepted; write rationals as p/q");
        tokens_.push_back({Tok::integer, std::string(text_.substr(start, i - start)), start});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (i < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_'))
          ++i;
        tokens_.push_back({Tok::ident, std::string(text_.substr(start, i - start)), start});
        continue;
      }
      Tok kind;
      switch (c) {
        case '+':
          kind = Tok::plus;
          break;
        case '-':
          kind = Tok::minus;
          break;
        case '*':
          kind = Tok::star;
          break;
        case '/':
          kind = Tok::slash;
          break;
        case '^':
          kind = Tok::caret;
          break;
        case '(':
          kind = Tok::lparen;
          break;
        case ')':
          kind = Tok::rparen;
          break;
        default:
          fail(i, std::string("unexpected character '") + c + "'");
      }
      tokens_.push_back({kind, std::string(1, c), start});
      ++i;
    }
    tokens_.push_back({Tok::end, "", text_.size()});
  }

  const Token& peek() const { return tokens_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  void expect_end() {
    if (peek().kind != Tok::end) unexpected({Tok::plus, Tok::minus, Tok::star, Tok::caret, Tok::end});
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept(Tok::plus))
        acc += term();
      else if (accept(Tok::minus))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept(Tok::star)) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    if (accept(Tok::minus)) return -factor();
    if (accept(Tok::plus)) return factor();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept(Tok::caret)) return base;
    const Token& t = peek();
    if (t.kind != Tok::integer) unexpected({Tok::integer});
    if (t.text.size() > 4 || std::stoul(t.text) > 1000) fail(t.offset, "exponent too large");
    unsigned e = static_cast<unsigned>(std::stoul(t.text));
    ++pos_;
    return base.pow(e);
  }

  Polynomial atom() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::integer: {
        ++pos_;
        mpz_class num(t.text);
        if (!accept(Tok::slash)) return Polynomial(Rational(num));
        const Token d = peek();
        if (d.kind != Tok::integer) unexpected({Tok::integer});
        ++pos_;
        mpz_class den(d.text);
        if (den == 0) fail(d.offset, "zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return Polynomial(r);
      }
      case Tok::ident: {
        ++pos_;
        for (std::size_t v = 0; v < names_.size(); ++v)
          if (names_[v] == t.text) return Polynomial::variable(v);
        std::string known;
        for (const auto& n : names_) known += (known.empty() ? "" : ", ") + n;
        fail(t.offset, "unknown variable '" + t.text + "' (known: " + known + ")");
      }
      case Tok::lparen: {
        ++pos_;
        Polynomial inner = expr();
        if (!accept(Tok::rparen)) unexpected({Tok::plus, Tok::minus, Tok::star, Tok::caret, Tok::rparen});
        return inner;
      }
      default:
        unexpected({Tok::integer, Tok::ident, Tok::lparen, Tok::minus, Tok::plus});
    }
  }

  std::string_view text_;
  const VariableNames& names_;
  SourcePosition origin_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_expression(std::string_view text, const VariableNames& names, SourcePosition origin) {
  if (names.size() > kMaxVars) throw std::invalid_argument("too many variables");
  return Parser(text, names, origin).parse();
}

}  // namespace qfrob
