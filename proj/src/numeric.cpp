#include "pha/numeric.hpp"

#include <cmath>
#include <string>

#include "pha/error.hpp"

namespace pha {

Grid::Grid(double x0_, double x1_, int steps_) : x0(x0_), x1(x1_), steps(steps_) {
  if (!(x1 > x0)) throw ValidationError("grid needs x1 > x0");
  if (steps < 2) throw ValidationError("grid needs at least 2 steps");
}

namespace {

std::vector<double> alpha_doubles(const ChainParams& params) {
  std::vector<double> a;
  a.reserve(static_cast<std::size_t>(params.n));
  for (const auto& v : alpha_from_eps(params)) a.push_back(v.get_d());
  return a;
}

std::vector<double> derivatives_from_alpha(const std::vector<double>& f,
                                           const std::vector<double>& alpha) {
  const int n = static_cast<int>(f.size());
  std::vector<double> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double fi = f[static_cast<std::size_t>(i)];
    const double fj = f[static_cast<std::size_t>((i + 1) % n)];
    r[static_cast<std::size_t>(i)] = fi * fi - fj * fj + alpha[static_cast<std::size_t>(i)];
  }
  std::vector<double> d(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
      const double term = r[static_cast<std::size_t>((i + k) % n)];
      acc += (k % 2 == 0) ? term : -term;
    }
    d[static_cast<std::size_t>(i)] = 0.5 * acc;
  }
  return d;
}

}  // namespace

std::vector<double> explicit_derivatives(const std::vector<double>& f,
                                         const ChainParams& params) {
  params.validate();
  if (static_cast<int>(f.size()) != params.n) {
    throw ValidationError("value list must have exactly n entries");
  }
  if (params.n % 2 == 0) {
    throw ValidationError(
        "even period: the cyclic system for the derivatives is singular, "
        "so explicit derivatives are only defined for odd periods");
  }
  return derivatives_from_alpha(f, alpha_doubles(params));
}

SampledChain rk4_integrate(const ChainParams& params,
                           const std::vector<double>& f0, const Grid& grid) {
  params.validate();
  if (static_cast<int>(f0.size()) != params.n) {
    throw ValidationError("initial values must have exactly n entries");
  }
  if (params.n % 2 == 0) {
    throw ValidationError(
        "even period: the chain flow has no explicit derivative form, "
        "integration is only defined for odd periods");
  }
  const std::vector<double> alpha = alpha_doubles(params);
  const int n = params.n;
  const double h = grid.dx();

  SampledChain out;
  out.params = params;
  out.x.reserve(static_cast<std::size_t>(grid.points()));
  out.f.assign(static_cast<std::size_t>(n), {});
  for (auto& row : out.f) row.reserve(static_cast<std::size_t>(grid.points()));

  auto record = [&](double x, const std::vector<double>& f) {
    out.x.push_back(x);
    for (int i = 0; i < n; ++i) {
      out.f[static_cast<std::size_t>(i)].push_back(f[static_cast<std::size_t>(i)]);
    }
  };

  std::vector<double> f = f0;
  record(grid.x0, f);
  std::vector<double> k1, k2, k3, k4, tmp(f.size());
  for (int step = 0; step < grid.steps; ++step) {
    const double x = grid.x(step);
    k1 = derivatives_from_alpha(f, alpha);
    for (std::size_t i = 0; i < f.size(); ++i) tmp[i] = f[i] + 0.5 * h * k1[i];
    k2 = derivatives_from_alpha(tmp, alpha);
    for (std::size_t i = 0; i < f.size(); ++i) tmp[i] = f[i] + 0.5 * h * k2[i];
    k3 = derivatives_from_alpha(tmp, alpha);
    for (std::size_t i = 0; i < f.size(); ++i) tmp[i] = f[i] + h * k3[i];
    k4 = derivatives_from_alpha(tmp, alpha);
    for (std::size_t i = 0; i < f.size(); ++i) {
      f[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    for (double v : f) {
      if (!(std::fabs(v) <= 1e9)) {
        throw Blowup("trajectory blew up past |f| = 1e9 after x = " + std::to_string(x), x);
      }
    }
    record(grid.x(step + 1), f);
  }
  return out;
}

std::vector<std::vector<double>> sampled_residuals(const SampledChain& chain) {
  chain.params.validate();
  const int n = chain.params.n;
  if (static_cast<int>(chain.f.size()) != n) {
    throw ValidationError("sampled chain must carry exactly n rows");
  }
  const int points = static_cast<int>(chain.x.size());
  if (points < 5) throw ValidationError("need at least 5 sample points");
  for (const auto& row : chain.f) {
    if (static_cast<int>(row.size()) != points) {
      throw ValidationError("sample rows must match the x array");
    }
  }
  const double h = chain.x[1] - chain.x[0];
  const std::vector<double> alpha = alpha_doubles(chain.params);

  // f'(x_t) ~ (f_{t-2} - 8 f_{t-1} + 8 f_{t+1} - f_{t+2}) / (12 h)
  auto fd = [&](int i, int t) {
    const auto& row = chain.f[static_cast<std::size_t>(i)];
    return (row[static_cast<std::size_t>(t - 2)] - 8.0 * row[static_cast<std::size_t>(t - 1)] +
            8.0 * row[static_cast<std::size_t>(t + 1)] - row[static_cast<std::size_t>(t + 2)]) /
           (12.0 * h);
  };

  std::vector<std::vector<double>> res(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    auto& out = res[static_cast<std::size_t>(i)];
    out.reserve(static_cast<std::size_t>(points - 4));
    for (int t = 2; t + 2 < points; ++t) {
      const double fi = chain.f[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
      const double fj = chain.f[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
      out.push_back(fd(i, t) + fd(j, t) -
                    (fi * fi - fj * fj + alpha[static_cast<std::size_t>(i)]));
    }
  }
  return res;
}

double max_abs(const std::vector<std::vector<double>>& values) {
  double m = 0.0;
  for (const auto& row : values) {
    for (double v : row) m = std::max(m, std::fabs(v));
  }
  return m;
}

}  // namespace pha
