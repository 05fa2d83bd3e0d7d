#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pha/rational.hpp"

namespace pha {

// Dense univariate polynomial over BigRat.  Coefficients are stored low to
// high and the top coefficient is nonzero; the zero polynomial is the empty
// list (degree() == -1).
class Poly {
 public:
  Poly() = default;
  explicit Poly(const BigRat& c);
  explicit Poly(long c) : Poly(BigRat(c)) {}

  static Poly x();
  static Poly from_coeffs(std::vector<BigRat> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigRat>& coeffs() const { return c_; }
  // Coefficient of x^k; zero beyond the degree.
  BigRat coeff(int k) const;
  BigRat leading() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const BigRat& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative() const;
  BigRat eval(const BigRat& x) const;
  double eval(double x) const;
  // p(x + a); used to form first differences like p(E + 1) - p(E).
  Poly shifted_arg(const BigRat& a) const;

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<BigRat> c_;
  void trim();
};

// Quotient and remainder over the rationals; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Monic gcd, computed by Euclid on primitive integer parts to keep
// intermediate coefficients small.  gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace pha
