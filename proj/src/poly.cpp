#include "pha/poly.hpp"

#include <sstream>

#include "pha/error.hpp"

namespace pha {

Poly::Poly(const BigRat& c) {
  if (c != 0) c_.push_back(c);
}

Poly Poly::x() { return from_coeffs({BigRat(0), BigRat(1)}); }

Poly Poly::from_coeffs(std::vector<BigRat> coeffs) {
  Poly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return BigRat(0);
  return c_[static_cast<std::size_t>(k)];
}

BigRat Poly::leading() const { return c_.empty() ? BigRat(0) : c_.back(); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigRat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const BigRat& s) const {
  if (s == 0) return Poly();
  Poly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

Poly Poly::derivative() const {
  Poly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    r.c_[i - 1] = c_[i] * BigRat(static_cast<long>(i));
  }
  r.trim();
  return r;
}

BigRat Poly::eval(const BigRat& x) const {
  BigRat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + c_[i];
  }
  return acc;
}

double Poly::eval(double x) const {
  // Doubles are rationals; evaluating exactly and rounding once keeps the
  // result within one ulp.
  BigRat v = eval(BigRat(x));
  return v.get_d();
}

Poly Poly::shifted_arg(const BigRat& a) const {
  // Horner in the shifted variable: p(x + a).
  Poly shift = from_coeffs({a, BigRat(1)});
  Poly acc;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * shift + Poly(c_[i]);
  }
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigRat& c = c_[i];
    if (c == 0) continue;
    BigRat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (!unit) os << mag.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  Poly rem = a;
  std::vector<BigRat> q(
      a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0,
      BigRat(0));
  const BigRat lead = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    BigRat factor = rem.leading() / lead;
    q[static_cast<std::size_t>(shift)] = factor;
    std::vector<BigRat> sub(static_cast<std::size_t>(shift), BigRat(0));
    for (const auto& c : b.coeffs()) sub.push_back(c * factor);
    rem = rem - Poly::from_coeffs(std::move(sub));
  }
  return {Poly::from_coeffs(std::move(q)), rem};
}

namespace {

// Scales to integer coefficients with unit content and positive leading
// coefficient.  Zero maps to zero.
Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_class d = c.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  mpz_class content = 0;
  std::vector<mpz_class> ints;
  ints.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpz_class n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  if (ints.back() < 0) content = -content;
  std::vector<BigRat> out;
  out.reserve(ints.size());
  for (auto& n : ints) out.emplace_back(n / content);
  return Poly::from_coeffs(std::move(out));
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly u = primitive_part(a);
  Poly v = primitive_part(b);
  while (!v.is_zero()) {
    Poly r = poly_divmod(u, v).second;
    u = v;
    v = primitive_part(r);
  }
  if (u.is_zero()) return u;
  return u * (BigRat(1) / u.leading());
}

}  // namespace pha
