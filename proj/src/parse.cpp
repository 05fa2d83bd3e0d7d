#include "pha/parse.hpp"

#include <cctype>

#include "pha/error.hpp"

namespace pha {

namespace {

struct Lexer {
  explicit Lexer(const std::string& s) : text(s) {}

  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  char take() {
    char c = peek();
    if (c != '\0') ++pos;
    return c;
  }

  mpz_class take_integer() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start) {
      throw ParseError("expected integer at offset " + std::to_string(start) +
                       " in '" + text + "'");
    }
    return mpz_class(text.substr(start, pos - start), 10);
  }
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  RatFun parse() {
    RatFun r = expr();
    if (lex_.peek() != '\0') {
      throw ParseError("unexpected '" + std::string(1, lex_.peek()) +
                       "' in '" + lex_.text + "'");
    }
    return r;
  }

 private:
  Lexer lex_;

  RatFun expr() {
    RatFun acc = term();
    for (;;) {
      char c = lex_.peek();
      if (c == '+') {
        lex_.take();
        acc = acc + term();
      } else if (c == '-') {
        lex_.take();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  // '*' and '/' share precedence with juxtaposition and associate left, so
  // "1/2x" means (1/2)*x.
  RatFun term() {
    RatFun acc = unary();
    for (;;) {
      char c = lex_.peek();
      if (c == '*') {
        lex_.take();
        acc = acc * unary();
      } else if (c == '/') {
        lex_.take();
        RatFun d = unary();
        // a syntactically fine expression with a zero divisor is a pole,
        // not a parse error
        if (d.is_zero()) throw Error("division by zero in '" + lex_.text + "'");
        acc = acc / d;
      } else if (c == 'x' || c == '(') {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  RatFun unary() {
    if (lex_.peek() == '-') {
      lex_.take();
      return -unary();
    }
    if (lex_.peek() == '+') {
      lex_.take();
      return unary();
    }
    return power();
  }

  RatFun power() {
    RatFun base = atom();
    if (lex_.peek() == '^') {
      lex_.take();
      mpz_class e = lex_.take_integer();
      if (e > 64) throw ParseError("exponent too large in '" + lex_.text + "'");
      RatFun acc(1L);
      for (mpz_class i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  RatFun atom() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.take();
      RatFun r = expr();
      if (lex_.peek() != ')') {
        throw ParseError("missing ')' in '" + lex_.text + "'");
      }
      lex_.take();
      return r;
    }
    if (c == 'x') {
      lex_.take();
      return RatFun::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RatFun(BigRat(lex_.take_integer()));
    }
    throw ParseError("unexpected '" + std::string(1, c) + "' in '" + lex_.text + "'");
  }
};

}  // namespace

RatFun parse_ratfun(const std::string& text) { return Parser(text).parse(); }

}  // namespace pha
