#include "doctest.h"

#include <string>

#include "pha/error.hpp"
#include "pha/poly.hpp"
#include "pha/ratfun.hpp"
#include "pha/rational.hpp"

using namespace pha;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(parse_rational("3") == BigRat(3));
  CHECK(parse_rational("-7") == BigRat(-7));
  CHECK(parse_rational("4/6") == BigRat(2, 3));
  CHECK(parse_rational("-10/4") == BigRat(-5, 2));
  CHECK(parse_rational("-3.25") == BigRat(-13, 4));
  CHECK(parse_rational("0.5") == BigRat(1, 2));
  CHECK(parse_rational("  2/3 ") == BigRat(2, 3));
}

TEST_CASE("parse_rational rejects garbage and zero denominators") {
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_rational("2/"), ParseError);
}

TEST_CASE("rat_str writes the canonical form") {
  CHECK(rat_str(BigRat(5)) == "5");
  CHECK(rat_str(BigRat(-2, 3)) == "-2/3");
  CHECK(rat_str(parse_rational("6/4")) == "3/2");
}

TEST_CASE("Poly construction trims trailing zeros") {
  Poly p = Poly::from_coeffs({BigRat(1), BigRat(2), BigRat(0), BigRat(0)});
  CHECK(p.degree() == 1);
  CHECK(Poly::from_coeffs({BigRat(0)}).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(7) == 0);
}

TEST_CASE("Poly ring identities") {
  Poly x = Poly::x();
  Poly one(1L);
  Poly sq = (x + one) * (x + one);
  CHECK(sq == Poly::from_coeffs({BigRat(1), BigRat(2), BigRat(1)}));
  CHECK((x + one) * (x - one) == Poly::from_coeffs({BigRat(-1), BigRat(0), BigRat(1)}));
  CHECK((sq - sq).is_zero());
  CHECK(-x == x * BigRat(-1));
}

TEST_CASE("Poly derivative and exact evaluation") {
  // p = x^3 - 2x
  Poly p = Poly::from_coeffs({BigRat(0), BigRat(-2), BigRat(0), BigRat(1)});
  CHECK(p.derivative() == Poly::from_coeffs({BigRat(-2), BigRat(0), BigRat(3)}));
  CHECK(p.eval(BigRat(2)) == BigRat(4));
  // q = x^2 + 1/2 at 2/3: 4/9 + 1/2 = 17/18
  Poly q = Poly::from_coeffs({BigRat(1, 2), BigRat(0), BigRat(1)});
  CHECK(q.eval(BigRat(2, 3)) == BigRat(17, 18));
  CHECK(q.eval(0.5) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("Poly shifted argument") {
  Poly x2 = Poly::x() * Poly::x();
  CHECK(x2.shifted_arg(BigRat(1)) ==
        Poly::from_coeffs({BigRat(1), BigRat(2), BigRat(1)}));
  Poly p = Poly::from_coeffs({BigRat(1), BigRat(-1, 2), BigRat(3)});
  // p(x + a) evaluated at t equals p(t + a)
  CHECK(p.shifted_arg(BigRat(2, 5)).eval(BigRat(1, 3)) ==
        p.eval(BigRat(1, 3) + BigRat(2, 5)));
}

TEST_CASE("poly_divmod and poly_gcd") {
  Poly x = Poly::x();
  Poly one(1L);
  Poly num = x * x * x - one;  // x^3 - 1
  auto [q, r] = poly_divmod(num, x - one);
  CHECK(q == Poly::from_coeffs({BigRat(1), BigRat(1), BigRat(1)}));
  CHECK(r.is_zero());
  auto [q2, r2] = poly_divmod(x * x + one, x + one);
  CHECK(q2 == x - one);
  CHECK(r2 == Poly(2L));
  CHECK_THROWS_AS(poly_divmod(x, Poly()), ValidationError);

  // gcd(x^2 - 1, x^2 - 2x + 1) = x - 1, monic
  Poly a = (x - one) * (x + one);
  Poly b = (x - one) * (x - one);
  CHECK(poly_gcd(a, b) == x - one);
  CHECK(poly_gcd(a * BigRat(6), b * BigRat(-4, 9)) == x - one);
  CHECK(poly_gcd(Poly(), Poly()).is_zero());
  CHECK(poly_gcd(a, Poly()) == a);  // a is already monic
}

TEST_CASE("RatFun reduces to canonical form") {
  Poly x = Poly::x();
  Poly one(1L);
  RatFun f(x * x - one, x - one);  // (x^2-1)/(x-1) = x + 1
  CHECK(f == RatFun(x + one));
  CHECK(f.den() == one);

  RatFun g(x * BigRat(2), (x * x) * BigRat(2));  // 2x / 2x^2 = 1/x
  CHECK(g.num() == one);
  CHECK(g.den() == x);
  CHECK(g.str() == "1/x");

  RatFun z(Poly(), x);  // 0/x
  CHECK(z.is_zero());
  CHECK(z.den() == one);

  CHECK_THROWS_AS(RatFun(x, Poly()), Error);
}

TEST_CASE("RatFun field operations") {
  RatFun x = RatFun::x();
  RatFun one(1L);
  RatFun h = one / x + x;  // (x^2 + 1)/x
  CHECK(h.num() == Poly::from_coeffs({BigRat(1), BigRat(0), BigRat(1)}));
  CHECK(h.den() == Poly::x());
  CHECK(h - h == RatFun());
  CHECK(h * x == RatFun(Poly::from_coeffs({BigRat(1), BigRat(0), BigRat(1)})));
  CHECK((x / x) == one);
  CHECK_THROWS_AS(x / RatFun(), Error);
  RatFun half(BigRat(1, 2));
  CHECK(half + half == one);
}

TEST_CASE("RatFun derivative uses the quotient rule") {
  RatFun x = RatFun::x();
  RatFun inv = RatFun(1L) / x;
  CHECK(inv.derivative() == -(RatFun(1L) / (x * x)));
  RatFun f = (x * x + RatFun(1L)) / x;
  CHECK(f.derivative() == RatFun(1L) - RatFun(1L) / (x * x));
  CHECK(RatFun(BigRat(5, 7)).derivative().is_zero());
}

TEST_CASE("RatFun evaluation, exact and double") {
  RatFun x = RatFun::x();
  RatFun f = RatFun(1L) / (x - RatFun(2L));
  CHECK(f.eval_exact(BigRat(3)) == BigRat(1));
  CHECK(f.eval_exact(BigRat(5, 2)) == BigRat(2));
  CHECK_THROWS_AS(f.eval_exact(BigRat(2)), PoleError);
  CHECK(f.eval(4.0) == doctest::Approx(0.5).epsilon(1e-16));
  CHECK_THROWS_AS(f.eval(2.0), PoleError);
}

TEST_CASE("RatFun string forms") {
  RatFun x = RatFun::x();
  CHECK(RatFun().str() == "0");
  CHECK((x * RatFun(BigRat(1, 3))).str() == "1/3*x");
  RatFun f = (x * x + RatFun(1L)) / x;
  CHECK(f.str() == "(x^2 + 1)/x");
}
