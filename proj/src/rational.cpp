#include "pha/rational.hpp"

#include <cctype>

#include "pha/error.hpp"

namespace pha {

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

BigRat parse_rational(const std::string& text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty rational literal");

  const std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = strip(s.substr(0, slash));
    const std::string den = strip(s.substr(slash + 1));
    if (!is_integer_text(num) || !is_integer_text(den)) {
      throw ParseError("bad rational literal: '" + text + "'");
    }
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    BigRat r(mpz_class(num, 10), d);
    r.canonicalize();
    return r;
  }

  const std::size_t dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    bool neg = false;
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
      neg = head[0] == '-';
      head = head.substr(1);
    }
    if (frac.empty() || !is_integer_text(frac) || frac[0] == '-' ||
        (!head.empty() && !is_integer_text(head))) {
      throw ParseError("bad decimal literal: '" + text + "'");
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class whole = head.empty() ? mpz_class(0) : mpz_class(head, 10);
    mpz_class value = whole * scale + mpz_class(frac, 10);
    if (neg) value = -value;
    BigRat r(value, scale);
    r.canonicalize();
    return r;
  }

  if (!is_integer_text(s)) {
    throw ParseError("bad rational literal: '" + text + "'");
  }
  return BigRat(mpz_class(s, 10));
}

std::string rat_str(const BigRat& r) { return r.get_str(); }

}  // namespace pha
