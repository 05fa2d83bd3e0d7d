#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "pha/chain.hpp"
#include "pha/numeric.hpp"

namespace pha {

// Period 1: f_1 = lambda*x + c solves the single chain equation for any
// eps_1 (stored for the potential; it does not constrain f_1).
ChainSolution pha0_solution(const BigRat& lambda, const BigRat& c,
                            const BigRat& eps1 = BigRat(0));

// Period 2, with t = lambda*x + c0 and A = 2(eps_2 - eps_1) + lambda:
//   f_1 = (t + A/t)/2,   f_2 = (t - A/t)/2.
// Requires lambda != 0 or c0 != 0 so that t is not identically zero.
ChainSolution pha1_solution(const BigRat& lambda, const BigRat& c0,
                            const BigRat& eps1, const BigRat& eps2);

// The same expression without the overall half: f_1 = t + A/t.  This
// variant circulates but does not satisfy the period-2 chain (its residual
// is nonzero unless A = 0 makes it collapse); it is kept so the comparison
// can be made explicit in tests and reports.
RatFun pha1_f1_nohalf(const BigRat& lambda, const BigRat& c0,
                      const BigRat& eps1, const BigRat& eps2);

// Period 3: recover f_2, f_3 from f_1 using the sum rule and the middle
// chain equation.  With s = lambda*x + c0 - f_1:
//   2 f_2 = s - (f_1' + 2(eps_2 - eps_3) - lambda)/s,
//   2 f_3 = s + (f_1' + 2(eps_2 - eps_3) - lambda)/s.
// Throws VanishingDenominator when s is identically zero.
std::pair<RatFun, RatFun> pha2_f2f3_from_f1(const RatFun& f1,
                                            const ChainParams& params);

struct P4Params {
  BigRat b0;
  BigRat b1;
};

// g'' - [ (g')^2/(2g) + (3/2) g^3 + 4x g^2 + 2(x^2 - b0) g + b1/g ],
// reduced; identically zero iff g solves the fourth Painleve equation with
// these parameters.
RatFun painleve4_residual(const RatFun& g, const P4Params& p);

// The symbolic residual evaluated on a grid; throws PoleError if a sample
// point collides with a pole.
std::vector<double> painleve4_residual_grid(const RatFun& g, const P4Params& p,
                                            const Grid& grid);

struct P4Fit {
  P4Params params;
  bool exact_zero = false;   // residual vanishes identically
  double max_residual = 0.0; // max |residual| over the verification grid
  RatFun g;
};

// Substitutes g = f_1 + lambda*x - c0 (valid for period-3 chains only;
// other periods are rejected), solves the two linear conditions
// residual(x_a) = residual(x_b) = 0 for (b0, b1) exactly, then verifies on
// the whole grid.  Reports the misfit honestly when no parameter pair
// works.
P4Fit painleve4_fit(const ChainSolution& sol, const Grid& grid);

struct P5Params {
  double c1 = 0, c2 = 0, c3 = 0, c4 = 0;
};

// Value, first and second derivative of a curve at a point.
using Curve2 = std::function<std::array<double, 3>(double)>;

Curve2 ratfun_curve(const RatFun& w);

// w'' - [ (1/(2w) + 1/(w-1)) (w')^2 - w'/z + (w-1)^2/z^2 (c1 w + c2/w)
//         + c3 w/z + c4 w(w+1)/(w-1) ]
// evaluated pointwise on the grid; z = 0, w = 0 and w = 1 are singular.
std::vector<double> painleve5_residual(const Curve2& w, const P5Params& p,
                                       const Grid& grid);

}  // namespace pha
