#pragma once

#include <vector>

#include "pha/chain.hpp"

namespace pha {

// Uniform grid with `steps` intervals, i.e. steps + 1 sample points.
struct Grid {
  Grid(double x0, double x1, int steps);
  double x0;
  double x1;
  int steps;

  int points() const { return steps + 1; }
  double dx() const { return (x1 - x0) / steps; }
  double x(int i) const { return x0 + dx() * i; }
};

// Chain trajectory sampled on a grid; f[i][t] is f_i at x[t].
struct SampledChain {
  ChainParams params;
  std::vector<double> x;
  std::vector<std::vector<double>> f;
};

// Solves the cyclic system d_i + d_{i+1} = R_i for the derivatives, where
// R_i = f_i^2 - f_{i+1}^2 + alpha_i.  The shift matrix I + S is invertible
// only for odd periods, giving d_i = (1/2) sum_k (-1)^k R_{i+k}; even
// periods throw ValidationError (they stay verifiable through
// sampled_residuals, just not forward-integrable this way).
std::vector<double> explicit_derivatives(const std::vector<double>& f,
                                         const ChainParams& params);

// Classical fixed-step RK4 on the chain flow.  Aborts with Blowup (carrying
// the last good x) when any |f_i| exceeds 1e9.
SampledChain rk4_integrate(const ChainParams& params,
                           const std::vector<double>& f0, const Grid& grid);

// Chain-equation residuals of a sampled trajectory, using 5-point central
// differences for the derivatives.  Only interior points t = 2..N-3 are
// covered; result[i] lists the residual of equation i at those points.
std::vector<std::vector<double>> sampled_residuals(const SampledChain& chain);

double max_abs(const std::vector<std::vector<double>>& values);

}  // namespace pha
