#include "doctest.h"

#include <cmath>

#include "pha/closed_form.hpp"
#include "pha/error.hpp"
#include "pha/parse.hpp"
#include "pha/weyl.hpp"

using namespace pha;

namespace {
bool all_zero(const std::vector<RatFun>& v) {
  for (const auto& r : v)
    if (!r.is_zero()) return false;
  return true;
}
}  // namespace

TEST_CASE("period-1 closed form") {
  ChainSolution sol = pha0_solution(BigRat(3), BigRat(1, 2), BigRat(1, 4));
  CHECK(all_zero(chain_residuals(sol)));
  CHECK(sol.f[0] == parse_ratfun("3x + 1/2"));
}

TEST_CASE("period-2 closed form, halved variant, solves the chain") {
  // a simple instance and a fully generic one
  ChainSolution a = pha1_solution(BigRat(1), BigRat(0), BigRat(0), BigRat(1, 2));
  CHECK(all_zero(chain_residuals(a)));
  CHECK(a.f[0] == parse_ratfun("(x + 2/x)/2"));
  CHECK(a.f[1] == parse_ratfun("(x - 2/x)/2"));

  ChainSolution b = pha1_solution(BigRat(2), BigRat(1, 7), BigRat(1, 3), BigRat(-1, 5));
  CHECK(all_zero(chain_residuals(b)));

  // degenerate direction: c0 may carry the solution when lambda = 0
  ChainSolution c = pha1_solution(BigRat(0), BigRat(1), BigRat(0), BigRat(1, 2));
  CHECK(all_zero(chain_residuals(c)));

  CHECK_THROWS_AS(pha1_solution(BigRat(0), BigRat(0), BigRat(0), BigRat(1)),
                  ValidationError);
}

TEST_CASE("period-2 variant without the half fails the chain") {
  BigRat lambda(1), c0(0), e1(0), e2(1, 2);
  RatFun f1 = pha1_f1_nohalf(lambda, c0, e1, e2);
  // complete it through the sum rule, the only consistent companion
  ChainSolution sol;
  sol.params.n = 2;
  sol.params.lambda = lambda;
  sol.params.c0 = c0;
  sol.params.eps = {e1, e2};
  sol.f = {f1, RatFun(Poly::from_coeffs({c0, lambda})) - f1};
  CHECK_FALSE(all_zero(chain_residuals(sol)));
}

TEST_CASE("period-3 recovery from f_1 alone") {
  ChainSolution seed = symmetric_seed(3, BigRat(1), BigRat(0));
  auto [f2, f3] = pha2_f2f3_from_f1(seed.f[0], seed.params);
  CHECK(f2 == seed.f[1]);
  CHECK(f3 == seed.f[2]);

  // also on a transformed, non-symmetric member
  ChainSolution img = apply_word(seed, {gen_s(0), gen_s(1)});
  auto [g2, g3] = pha2_f2f3_from_f1(img.f[0], img.params);
  CHECK(g2 == img.f[1]);
  CHECK(g3 == img.f[2]);

  // f_1 equal to the whole linear sum leaves nothing for f_2 + f_3
  RatFun t(Poly::from_coeffs({BigRat(0), BigRat(1)}));
  CHECK_THROWS_AS(pha2_f2f3_from_f1(t, seed.params), VanishingDenominator);

  ChainParams two = pha1_solution(BigRat(1), BigRat(0), BigRat(0), BigRat(1)).params;
  CHECK_THROWS_AS(pha2_f2f3_from_f1(seed.f[0], two), ValidationError);
}

TEST_CASE("fourth Painleve residual: exact zeros and an exact nonzero") {
  P4Params flat{BigRat(0), BigRat(-2)};
  CHECK(painleve4_residual(parse_ratfun("-2x"), flat).is_zero());

  P4Params third{BigRat(0), BigRat(-2, 9)};
  CHECK(painleve4_residual(parse_ratfun("-2x/3"), third).is_zero());

  RatFun perturbed = parse_ratfun("-2x + 1/10");
  CHECK_FALSE(painleve4_residual(perturbed, flat).is_zero());

  // g = 1: residual reduces to -(3/2 + 4x + 2x^2); value -3/2 at x = 0
  RatFun r = painleve4_residual(RatFun(1L), P4Params{BigRat(0), BigRat(0)});
  CHECK(r.eval_exact(BigRat(0)) == BigRat(-3, 2));

  CHECK_THROWS_AS(painleve4_residual(RatFun(), flat), ValidationError);
}

TEST_CASE("fourth Painleve residual on a grid") {
  P4Params flat{BigRat(0), BigRat(-2)};
  Grid grid(1.0, 2.0, 10);
  std::vector<double> vals = painleve4_residual_grid(parse_ratfun("-2x"), flat, grid);
  REQUIRE(vals.size() == 11);
  for (double v : vals) CHECK(v == 0.0);

  // g = x has a residual pole at x = 0 through the (g')^2/2g term
  Grid through_zero(-1.0, 1.0, 2);
  CHECK_THROWS_AS(
      painleve4_residual_grid(RatFun::x(), P4Params{BigRat(0), BigRat(0)}, through_zero),
      PoleError);
}

TEST_CASE("fit recovers exact fourth-Painleve parameters from chain data") {
  Grid grid(1.0, 3.0, 40);

  ChainSolution seed = symmetric_seed(3, BigRat(-1, 2), BigRat(0));
  P4Fit fit = painleve4_fit(seed, grid);
  CHECK(fit.exact_zero);
  CHECK(fit.max_residual == 0.0);
  CHECK(fit.params.b0 == BigRat(0));
  CHECK(fit.params.b1 == BigRat(-2, 9));
  CHECK(fit.g == parse_ratfun("-2x/3"));

  ChainSolution img = apply_s(seed, 0);
  P4Fit fit2 = painleve4_fit(img, grid);
  CHECK(fit2.exact_zero);
  CHECK(fit2.params.b0 == BigRat(1));
  CHECK(fit2.params.b1 == BigRat(-8, 9));
  CHECK(fit2.g == parse_ratfun("-2x/3 + 1/x"));

  // the substitution only reduces three-link chains
  ChainSolution wrong_period = symmetric_seed(2, BigRat(-1, 2), BigRat(0));
  CHECK_THROWS_AS(painleve4_fit(wrong_period, grid), ValidationError);
}

TEST_CASE("fifth Painleve residual oracles") {
  Grid grid(0.5, 2.5, 20);

  // w = -1 solves it whenever c1 + c2 = 0 and c3 = 0, for any c4
  P5Params p{1.0, -1.0, 0.0, 7.0};
  std::vector<double> res = painleve5_residual(ratfun_curve(parse_ratfun("-1")), p, grid);
  for (double r : res) CHECK(r == 0.0);

  // w = z with all parameters zero: residual -3/4 at z = 2
  Grid at2(2.0, 2.5, 2);
  std::vector<double> res2 =
      painleve5_residual(ratfun_curve(RatFun::x()), P5Params{}, at2);
  CHECK(res2[0] == -0.75);

  // fixed singularities are loud, not silent
  Grid hits_one(0.5, 1.5, 2);  // w = z passes through w = 1
  CHECK_THROWS_AS(painleve5_residual(ratfun_curve(RatFun::x()), P5Params{}, hits_one),
                  PoleError);
  Grid hits_zero(-1.0, 1.0, 2);  // z = 0 on the grid
  CHECK_THROWS_AS(painleve5_residual(ratfun_curve(parse_ratfun("-1")), p, hits_zero),
                  PoleError);
}

TEST_CASE("curve adapter evaluates value and two derivatives") {
  Curve2 c = ratfun_curve(parse_ratfun("x^2"));
  auto [v, d1, d2] = c(3.0);
  CHECK(v == 9.0);
  CHECK(d1 == 6.0);
  CHECK(d2 == 2.0);
}
