#include "pha/ratfun.hpp"

#include "pha/error.hpp"

namespace pha {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatFun::normalize() {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1L);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_divmod(num_, g).first;
    den_ = poly_divmod(den_, g).first;
  }
  BigRat lead = den_.leading();
  if (lead != 1) {
    BigRat inv = BigRat(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw Error("division by zero rational function");
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(),
                den_ * den_);
}

BigRat RatFun::eval_exact(const BigRat& x) const {
  BigRat d = den_.eval(x);
  if (d == 0) throw PoleError("pole at x = " + rat_str(x));
  BigRat n = num_.eval(x);
  return n / d;
}

double RatFun::eval(double x) const {
  BigRat v = eval_exact(BigRat(x));
  return v.get_d();
}

std::string RatFun::str(const std::string& var) const {
  if (den_.degree() == 0) return num_.str(var);
  // Parenthesize only when re-parsing would regroup: sums need it on both
  // sides, and a product in the denominator ("1/2*x") would otherwise bind
  // as a left-to-right quotient times x.
  std::string num = num_.str(var);
  std::string den = den_.str(var);
  if (num.find(' ') != std::string::npos) num = "(" + num + ")";
  if (den.find(' ') != std::string::npos || den.find('*') != std::string::npos)
    den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace pha
