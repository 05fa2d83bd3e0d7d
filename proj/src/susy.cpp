#include "pha/susy.hpp"

#include <cmath>
#include <string>

#include "pha/error.hpp"

namespace pha {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSeriesXMax = 8.0;
constexpr int kSeriesTermCap = 400;

// Confluent hypergeometric series M(a, b, z) = sum_k (a)_k/(b)_k z^k/k!.
// Terms are positive for our calls with a > 0, z >= 0; the stop rule keeps
// the truncation far below double rounding.
double hyp1f1(double a, double b, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kSeriesTermCap; ++k) {
    term *= (a + k) / ((b + k) * (k + 1.0)) * z;
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) return sum;
  }
  if (term != 0.0) {
    throw Error("hypergeometric series did not settle within " +
                std::to_string(kSeriesTermCap) + " terms");
  }
  return sum;
}

// d/dz M(a, b, z) = (a/b) M(a+1, b+1, z).
double hyp1f1_deriv(double a, double b, double z) {
  return a / b * hyp1f1(a + 1.0, b + 1.0, z);
}

bool is_nonpositive_integer(double a) {
  return a <= 0.0 && a == std::floor(a);
}

// Fills stack[2..] from stack[0..1] via
// u^(j+2) = (x^2 - 2 eps) u^(j) + 2 j x u^(j-1) + j (j-1) u^(j-2).
void extend_stack(std::vector<double>& stack, double x, double eps, int order) {
  const double pot = x * x - 2.0 * eps;
  stack.resize(static_cast<std::size_t>(order) + 1, 0.0);
  for (int j = 0; j + 2 <= order; ++j) {
    double v = pot * stack[static_cast<std::size_t>(j)];
    if (j >= 1) v += 2.0 * j * x * stack[static_cast<std::size_t>(j - 1)];
    if (j >= 2) v += static_cast<double>(j) * (j - 1) * stack[static_cast<std::size_t>(j - 2)];
    stack[static_cast<std::size_t>(j + 2)] = v;
  }
}

}  // namespace

std::vector<double> hermite_psi_derivs(int n, double x, int order) {
  if (n < 0) throw ValidationError("level must be >= 0");
  if (order < 0) throw ValidationError("derivative order must be >= 0");
  // h_0 = 1, h_1 = 2x, h_{k+1} = 2x h_k - 2k h_{k-1}; h_n' = 2n h_{n-1}.
  double h_prev = 0.0, h = 1.0;
  for (int k = 0; k < n; ++k) {
    const double h_next = 2.0 * x * h - 2.0 * k * h_prev;
    h_prev = h;
    h = h_next;
  }
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  const double norm = std::pow(kPi, -0.25) / std::sqrt(std::ldexp(fact, n));
  const double gauss = std::exp(-0.5 * x * x);
  std::vector<double> stack{norm * gauss * h,
                            norm * gauss * (2.0 * n * h_prev - x * h)};
  extend_stack(stack, x, n + 0.5, std::max(order, 1));
  stack.resize(static_cast<std::size_t>(order) + 1);
  return stack;
}

double hermite_psi(int n, double x) { return hermite_psi_derivs(n, x, 0)[0]; }

SeedSpec SeedSpec::general(double eps, double nu) {
  SeedSpec s;
  s.kind = Kind::general;
  s.eps = eps;
  s.nu = nu;
  return s;
}

SeedSpec SeedSpec::hermite(int n) {
  if (n < 0) throw ValidationError("level must be >= 0");
  SeedSpec s;
  s.kind = Kind::hermite;
  s.n = n;
  s.eps = n + 0.5;
  return s;
}

SeedState::SeedState(const SeedSpec& spec) : spec_(spec) {
  if (spec_.kind == SeedSpec::Kind::hermite) return;
  const double a_even = (1.0 - 2.0 * spec_.eps) / 4.0;
  const double a_odd = (3.0 - 2.0 * spec_.eps) / 4.0;
  if (spec_.nu == 0.0 || is_nonpositive_integer(a_even)) {
    // Gamma((1-2eps)/4) poles kill the odd part entirely.
    odd_coeff_ = 0.0;
    return;
  }
  if (is_nonpositive_integer(a_odd)) {
    throw ValidationError(
        "seed parametrization degenerates at eps = " + std::to_string(spec_.eps) +
        ": Gamma((3-2eps)/4) has a pole; use a hermite seed instead");
  }
  odd_coeff_ = 2.0 * spec_.nu * std::tgamma(a_odd) / std::tgamma(a_even);
}

std::vector<double> SeedState::derivs(double x, int order) const {
  if (order < 0) throw ValidationError("derivative order must be >= 0");
  if (spec_.kind == SeedSpec::Kind::hermite) {
    return hermite_psi_derivs(spec_.n, x, order);
  }
  if (std::fabs(x) > kSeriesXMax) {
    throw ValidationError("seed evaluation trusted only for |x| <= 8");
  }
  const double a_even = (1.0 - 2.0 * spec_.eps) / 4.0;
  const double a_odd = (3.0 - 2.0 * spec_.eps) / 4.0;
  const double z = x * x;
  const double f_even = hyp1f1(a_even, 0.5, z);
  const double df_even = hyp1f1_deriv(a_even, 0.5, z);
  double bracket = f_even;
  double bracket_dx = 2.0 * x * df_even;
  if (odd_coeff_ != 0.0) {
    const double f_odd = hyp1f1(a_odd, 1.5, z);
    const double df_odd = hyp1f1_deriv(a_odd, 1.5, z);
    bracket += odd_coeff_ * x * f_odd;
    bracket_dx += odd_coeff_ * (f_odd + 2.0 * z * df_odd);
  }
  const double gauss = std::exp(-0.5 * z);
  std::vector<double> stack{gauss * bracket, gauss * (bracket_dx - x * bracket)};
  extend_stack(stack, x, spec_.eps, std::max(order, 1));
  stack.resize(static_cast<std::size_t>(order) + 1);
  return stack;
}

namespace {

// Determinant by LU with partial pivoting; returns 0 on an exactly zero
// pivot column.
double lu_det(std::vector<std::vector<double>> m) {
  const std::size_t k = m.size();
  double det = 1.0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < k; ++r) {
      if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < k; ++r) {
      const double factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < k; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

// Determinant of the matrix whose rows are the given derivative orders.
double det_for_rows(const std::vector<std::vector<double>>& stacks,
                    const std::vector<int>& rows) {
  const std::size_t k = stacks.size();
  std::vector<std::vector<double>> m(rows.size(), std::vector<double>(k));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      m[r][c] = stacks[c][static_cast<std::size_t>(rows[r])];
    }
  }
  return lu_det(std::move(m));
}

std::vector<std::vector<double>> seed_stacks(const std::vector<SeedState>& seeds,
                                             double x, int order) {
  std::vector<std::vector<double>> stacks;
  stacks.reserve(seeds.size());
  for (const auto& s : seeds) stacks.push_back(s.derivs(x, order));
  return stacks;
}

double wronskian_only(const std::vector<SeedState>& seeds, double x) {
  const int k = static_cast<int>(seeds.size());
  const auto stacks = seed_stacks(seeds, x, k - 1);
  std::vector<int> rows(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) rows[static_cast<std::size_t>(r)] = r;
  return det_for_rows(stacks, rows);
}

}  // namespace

WronskianValue wronskian(const std::vector<std::vector<double>>& stacks) {
  const int k = static_cast<int>(stacks.size());
  if (k < 1) throw ValidationError("need at least one function");
  for (const auto& s : stacks) {
    if (static_cast<int>(s.size()) < k + 2) {
      throw ValidationError("stacks must reach derivative order k+1");
    }
  }
  std::vector<int> rows(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) rows[static_cast<std::size_t>(r)] = r;
  WronskianValue out;
  out.w = det_for_rows(stacks, rows);

  rows[static_cast<std::size_t>(k - 1)] = k;  // last row differentiated
  out.dw = det_for_rows(stacks, rows);

  // d/dx of W': the shifted last row moves once more, and for k >= 2 the
  // second-to-last row moves into the gap.
  rows[static_cast<std::size_t>(k - 1)] = k + 1;
  out.ddw = det_for_rows(stacks, rows);
  if (k >= 2) {
    rows[static_cast<std::size_t>(k - 1)] = k;
    rows[static_cast<std::size_t>(k - 2)] = k - 1;
    out.ddw += det_for_rows(stacks, rows);
  }
  return out;
}

double partner_potential(const std::vector<SeedState>& seeds, double x) {
  if (seeds.empty()) return 0.5 * x * x;
  const int k = static_cast<int>(seeds.size());
  const WronskianValue wv = wronskian(seed_stacks(seeds, x, k + 1));
  if (wv.w == 0.0) {
    throw SingularWronskian("Wronskian vanishes at x = " + std::to_string(x));
  }
  const double log_dd = wv.ddw / wv.w - (wv.dw / wv.w) * (wv.dw / wv.w);
  return 0.5 * x * x - log_dd;
}

NodeReport nonsingularity_check(const std::vector<SeedState>& seeds,
                                const Grid& grid) {
  if (seeds.empty()) {
    NodeReport r;
    r.min_abs_w = 1.0;  // W of the empty family is the constant 1
    return r;
  }
  NodeReport report;
  double prev = 0.0;
  for (int i = 0; i < grid.points(); ++i) {
    const double cur = wronskian_only(seeds, grid.x(i));
    const double mag = std::fabs(cur);
    if (i == 0 || mag < report.min_abs_w) report.min_abs_w = mag;
    if (cur == 0.0) {
      // Exact node on a sample point: degenerate bracket.
      report.brackets.emplace_back(grid.x(i), grid.x(i));
      report.nodeless = false;
    } else if (i > 0 && prev != 0.0 && prev * cur < 0.0) {
      double a = grid.x(i - 1), b = grid.x(i);
      double wa = prev;
      for (int iter = 0; iter < 60; ++iter) {
        const double mid = 0.5 * (a + b);
        const double wm = wronskian_only(seeds, mid);
        if (wm == 0.0) {
          a = b = mid;
          break;
        }
        if (wa * wm < 0.0) {
          b = mid;
        } else {
          a = mid;
          wa = wm;
        }
      }
      report.brackets.emplace_back(a, b);
      report.nodeless = false;
    }
    prev = cur;
  }
  return report;
}

double transformed_state(const std::vector<SeedState>& seeds, int n, double x,
                         bool normalized) {
  if (n < 0) throw ValidationError("level must be >= 0");
  const int k = static_cast<int>(seeds.size());
  const double energy = n + 0.5;
  double norm_product = 1.0;
  for (const auto& s : seeds) {
    const double gap = energy - s.eps();
    if (normalized && gap == 0.0) {
      throw PoleError("normalization pole: E_" + std::to_string(n) +
                      " equals a seed energy");
    }
    norm_product *= gap;
  }
  if (k == 0) {
    return hermite_psi(n, x);
  }

  // Numerator: (k+1) x (k+1) Wronskian of the seeds and psi_n.
  std::vector<std::vector<double>> stacks = seed_stacks(seeds, x, k);
  stacks.push_back(hermite_psi_derivs(n, x, k));
  std::vector<std::vector<double>> m(static_cast<std::size_t>(k) + 1,
                                     std::vector<double>(static_cast<std::size_t>(k) + 1));
  for (int r = 0; r <= k; ++r) {
    for (int c = 0; c <= k; ++c) {
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          stacks[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    }
  }
  const double num = lu_det(std::move(m));
  const double den = wronskian_only(seeds, x);
  if (den == 0.0) {
    throw SingularWronskian("Wronskian vanishes at x = " + std::to_string(x));
  }
  double value = num / den;
  if (normalized) value /= std::sqrt(std::fabs(norm_product));
  return value;
}

LadderPolynomial ladder_polynomial(const std::vector<BigRat>& seed_eps) {
  Poly e = Poly::x();
  Poly n_poly = e - Poly(BigRat(1, 2));
  for (const auto& eps : seed_eps) {
    n_poly = n_poly * (e - Poly(eps));
    n_poly = n_poly * (e - Poly(BigRat(eps + 1)));
  }
  return {n_poly, n_poly.shifted_arg(BigRat(1)) - n_poly};
}

LadderPolynomial ladder_polynomial_from_roots(const std::vector<BigRat>& roots) {
  Poly e = Poly::x();
  Poly n_poly{BigRat(1)};
  for (const auto& r : roots) n_poly = n_poly * (e - Poly(r));
  return {n_poly, n_poly.shifted_arg(BigRat(1)) - n_poly};
}

LadderSpectrum ladder_spectrum(const std::vector<BigRat>& extremal, int count) {
  if (count < 1) throw ValidationError("ladder length must be >= 1");
  LadderSpectrum out;
  out.ladders.reserve(extremal.size());
  for (const auto& base : extremal) {
    std::vector<BigRat> ladder;
    ladder.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) ladder.push_back(BigRat(base + j));
    out.ladders.push_back(std::move(ladder));
  }
  for (std::size_t i = 0; i < out.ladders.size() && !out.has_duplicates; ++i) {
    for (std::size_t j = i + 1; j < out.ladders.size() && !out.has_duplicates; ++j) {
      for (const auto& a : out.ladders[i]) {
        for (const auto& b : out.ladders[j]) {
          if (a == b) {
            out.has_duplicates = true;
            break;
          }
        }
        if (out.has_duplicates) break;
      }
    }
  }
  return out;
}

}  // namespace pha
