#include "pha/closed_form.hpp"

#include <cmath>
#include <string>

#include "pha/error.hpp"

namespace pha {

ChainSolution pha0_solution(const BigRat& lambda, const BigRat& c, const BigRat& eps1) {
  ChainSolution sol;
  sol.params.n = 1;
  sol.params.lambda = lambda;
  sol.params.c0 = c;
  sol.params.eps = {eps1};
  sol.f = {RatFun(Poly::from_coeffs({c, lambda}))};
  return sol;
}

ChainSolution pha1_solution(const BigRat& lambda, const BigRat& c0,
                            const BigRat& eps1, const BigRat& eps2) {
  if (lambda == 0 && c0 == 0) {
    throw ValidationError("lambda*x + c0 must not vanish identically");
  }
  RatFun t(Poly::from_coeffs({c0, lambda}));
  BigRat big_a = BigRat(2 * (eps2 - eps1) + lambda);
  RatFun half(BigRat(1, 2));
  RatFun correction = RatFun(big_a) / t;
  ChainSolution sol;
  sol.params.n = 2;
  sol.params.lambda = lambda;
  sol.params.c0 = c0;
  sol.params.eps = {eps1, eps2};
  sol.f = {half * (t + correction), half * (t - correction)};
  return sol;
}

RatFun pha1_f1_nohalf(const BigRat& lambda, const BigRat& c0,
                      const BigRat& eps1, const BigRat& eps2) {
  if (lambda == 0 && c0 == 0) {
    throw ValidationError("lambda*x + c0 must not vanish identically");
  }
  RatFun t(Poly::from_coeffs({c0, lambda}));
  BigRat big_a = BigRat(2 * (eps2 - eps1) + lambda);
  return t + RatFun(big_a) / t;
}

std::pair<RatFun, RatFun> pha2_f2f3_from_f1(const RatFun& f1,
                                            const ChainParams& params) {
  params.validate();
  if (params.n != 3) throw ValidationError("recovery formula is for period 3");
  RatFun s = RatFun(Poly::from_coeffs({params.c0, params.lambda})) - f1;
  if (s.is_zero()) {
    throw VanishingDenominator("f_2 + f_3 = lambda*x + c0 - f_1 is identically zero");
  }
  BigRat gap = BigRat(2 * (params.eps[1] - params.eps[2]) - params.lambda);
  RatFun q = (f1.derivative() + RatFun(gap)) / s;
  RatFun half(BigRat(1, 2));
  return {half * (s - q), half * (s + q)};
}

RatFun painleve4_residual(const RatFun& g, const P4Params& p) {
  if (g.is_zero()) throw ValidationError("g must not be identically zero");
  RatFun x = RatFun::x();
  RatFun dg = g.derivative();
  RatFun rhs = dg * dg / (RatFun(2L) * g) + RatFun(BigRat(3, 2)) * g * g * g +
               RatFun(4L) * x * g * g +
               RatFun(2L) * (x * x - RatFun(p.b0)) * g + RatFun(p.b1) / g;
  return dg.derivative() - rhs;
}

std::vector<double> painleve4_residual_grid(const RatFun& g, const P4Params& p,
                                            const Grid& grid) {
  RatFun res = painleve4_residual(g, p);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(grid.points()));
  for (int i = 0; i < grid.points(); ++i) {
    out.push_back(res.eval(grid.x(i)));
  }
  return out;
}

P4Fit painleve4_fit(const ChainSolution& sol, const Grid& grid) {
  sol.validate();
  if (sol.params.n != 3)
    throw ValidationError("the substitution g = f_1 + lambda*x - c0 reduces a "
                          "period-3 chain; got period " + std::to_string(sol.params.n));
  RatFun g = sol.f[0] + RatFun(Poly::from_coeffs({BigRat(-sol.params.c0), sol.params.lambda}));
  if (g.is_zero()) throw VanishingDenominator("substituted g is identically zero");

  // residual(x) = K(x) + 2 b0 g(x) - b1/g(x) with K the residual at b = 0,
  // so two good sample points give an exact 2x2 linear system.
  RatFun k_part = painleve4_residual(g, {BigRat(0), BigRat(0)});

  auto defined_at = [&](const BigRat& x) {
    return g.den().eval(x) != 0 && g.num().eval(x) != 0 && k_part.den().eval(x) != 0;
  };
  std::vector<BigRat> probes;
  const BigRat span = BigRat(grid.x1) - BigRat(grid.x0);
  for (int i = 1; i < 200 && probes.size() < 2; ++i) {
    BigRat frac(i, 201);
    frac.canonicalize();
    BigRat x = BigRat(grid.x0) + BigRat(span * frac);
    if (defined_at(x)) probes.push_back(x);
  }
  if (probes.size() < 2) {
    throw Error("could not find two sample points clear of poles and zeros of g");
  }

  // [ 2 g(xa)  -1/g(xa) ] [b0]   [ -K(xa) ]
  // [ 2 g(xb)  -1/g(xb) ] [b1] = [ -K(xb) ]
  BigRat ga = g.eval_exact(probes[0]), gb = g.eval_exact(probes[1]);
  BigRat ka = k_part.eval_exact(probes[0]), kb = k_part.eval_exact(probes[1]);
  BigRat a11 = BigRat(2 * ga), a12 = BigRat(-1 / ga);
  BigRat a21 = BigRat(2 * gb), a22 = BigRat(-1 / gb);
  BigRat det = BigRat(a11 * a22 - a12 * a21);
  if (det == 0) throw Error("degenerate sample points for the parameter fit");
  P4Fit fit;
  fit.g = g;
  fit.params.b0 = BigRat((-ka * a22 + kb * a12) / det);
  fit.params.b1 = BigRat((-kb * a11 + ka * a21) / det);

  RatFun res = painleve4_residual(g, fit.params);
  fit.exact_zero = res.is_zero();
  double max_r = 0.0;
  for (int i = 0; i < grid.points(); ++i) {
    const double x = grid.x(i);
    BigRat xr(x);
    if (res.den().eval(xr) == 0) continue;  // pole collision; skip the sample
    max_r = std::max(max_r, std::fabs(res.eval(x)));
  }
  fit.max_residual = max_r;
  return fit;
}

Curve2 ratfun_curve(const RatFun& w) {
  RatFun d1 = w.derivative();
  RatFun d2 = d1.derivative();
  return [w, d1, d2](double z) {
    return std::array<double, 3>{w.eval(z), d1.eval(z), d2.eval(z)};
  };
}

std::vector<double> painleve5_residual(const Curve2& w, const P5Params& p,
                                       const Grid& grid) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(grid.points()));
  for (int i = 0; i < grid.points(); ++i) {
    const double z = grid.x(i);
    if (z == 0.0) throw PoleError("z = 0 lies on the grid");
    const auto [wv, wd, wdd] = w(z);
    if (wv == 0.0 || wv == 1.0) {
      throw PoleError("w takes a singular value (" + std::to_string(wv) +
                      ") at z = " + std::to_string(z));
    }
    const double rhs = (1.0 / (2.0 * wv) + 1.0 / (wv - 1.0)) * wd * wd - wd / z +
                       (wv - 1.0) * (wv - 1.0) / (z * z) * (p.c1 * wv + p.c2 / wv) +
                       p.c3 * wv / z + p.c4 * wv * (wv + 1.0) / (wv - 1.0);
    out.push_back(wdd - rhs);
  }
  return out;
}

}  // namespace pha
