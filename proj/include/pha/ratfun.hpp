#pragma once

#include <string>

#include "pha/poly.hpp"
#include "pha/rational.hpp"

namespace pha {

// Rational function in canonical form: gcd(num, den) = 1, den monic and
// nonzero, zero represented as 0/1.  Canonical form makes operator== a
// structural comparison, which the orbit dedup and the round-trip tests
// rely on.
class RatFun {
 public:
  RatFun() : den_(Poly(1L)) {}
  RatFun(const BigRat& c) : num_(Poly(c)), den_(Poly(1L)) {}
  RatFun(long c) : RatFun(BigRat(c)) {}
  explicit RatFun(const Poly& num) : num_(num), den_(Poly(1L)) {}
  RatFun(Poly num, Poly den);

  static RatFun x() { return RatFun(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  bool operator==(const RatFun& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  RatFun derivative() const;

  // Exact evaluation; throws PoleError when den(x) = 0.
  BigRat eval_exact(const BigRat& x) const;
  // Exact evaluation at the (rational) double x, rounded once at the end.
  double eval(double x) const;

  std::string str(const std::string& var = "x") const;

 private:
  Poly num_;
  Poly den_;
  void normalize();
};

}  // namespace pha
