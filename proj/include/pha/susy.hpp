#pragma once

#include <utility>
#include <vector>

#include "pha/numeric.hpp"
#include "pha/poly.hpp"

namespace pha {

// Everything here works with the oscillator Hamiltonian H = -(1/2) d2/dx2
// + x^2/2, whose eigenvalues are E_n = n + 1/2 and whose Schroedinger
// solutions obey u'' = (x^2 - 2 eps) u.  That second-order recursion plus
// Leibniz gives the whole derivative stack from u and u':
//   u^(j+2) = (x^2 - 2 eps) u^(j) + 2 j x u^(j-1) + j (j-1) u^(j-2).

// Normalized bound state: psi_n = pi^(-1/4) (2^n n!)^(-1/2) e^(-x^2/2) h_n(x)
// with h_n the physicists' Hermite polynomials.
double hermite_psi(int n, double x);
// psi_n and its derivatives up to the given order.
std::vector<double> hermite_psi_derivs(int n, double x, int order);

// Seed solutions of u'' = (x^2 - 2 eps) u.
struct SeedSpec {
  enum class Kind { general, hermite } kind = Kind::general;
  double eps = 0.0;
  double nu = 0.0;  // odd-part weight, general kind only
  int n = 0;        // level, hermite kind only

  // u = e^(-x^2/2) [ M((1-2eps)/4, 1/2, x^2)
  //     + 2 nu x (Gamma((3-2eps)/4)/Gamma((1-2eps)/4)) M((3-2eps)/4, 3/2, x^2) ]
  // with M the confluent hypergeometric series.  When (1-2eps)/4 is a
  // nonpositive integer the Gamma ratio vanishes and the odd part drops out.
  static SeedSpec general(double eps, double nu);
  // u = psi_n, eps = n + 1/2.
  static SeedSpec hermite(int n);
};

class SeedState {
 public:
  explicit SeedState(const SeedSpec& spec);

  double eps() const { return spec_.eps; }
  const SeedSpec& spec() const { return spec_; }

  // u^(0..order) at x.  The series evaluation is trusted for |x| <= 8.
  std::vector<double> derivs(double x, int order) const;

 private:
  SeedSpec spec_;
  double odd_coeff_ = 0.0;  // 2 nu Gamma((3-2eps)/4)/Gamma((1-2eps)/4)
};

struct WronskianValue {
  double w = 0.0;
  double dw = 0.0;
  double ddw = 0.0;
};

// Wronskian of k functions, plus its first two derivatives, from the
// derivative stacks (stacks[i][r] = u_i^(r), each of size >= k+2).
// Determinants go through LU with partial pivoting.  W' replaces the last
// row with k-th derivatives; W'' comes from one more row shift.
WronskianValue wronskian(const std::vector<std::vector<double>>& stacks);

// V_1 = x^2/2 - (W''/W - (W'/W)^2) = x^2/2 - (ln W)''.  The empty seed
// family returns the oscillator itself.  Throws SingularWronskian where
// W = 0.
double partner_potential(const std::vector<SeedState>& seeds, double x);

struct NodeReport {
  bool nodeless = true;
  double min_abs_w = 0.0;
  // Bisection-refined sign-change brackets of W.
  std::vector<std::pair<double, double>> brackets;
};

NodeReport nonsingularity_check(const std::vector<SeedState>& seeds,
                                const Grid& grid);

// phi_n = W(u_1..u_k, psi_n) / W(u_1..u_k), divided by
// prod_j |E_n - eps_j|^(1/2) when normalized.  E_n equal to a seed energy
// is a normalization pole (PoleError); pass normalized = false to look at
// the raw Wronskian ratio there (it vanishes when psi_n is annihilated).
double transformed_state(const std::vector<SeedState>& seeds, int n, double x,
                         bool normalized = true);

struct LadderPolynomial {
  // n_poly(E): the E-polynomial whose operator value is the product of the
  // k-step ladder pair; p_poly = n_poly(E+1) - n_poly(E).
  Poly n_poly;
  Poly p_poly;
};

// n_poly = (E - 1/2) prod_j (E - eps_j)(E - eps_j - 1), degree 2k+1, so
// p_poly has degree 2k and leading coefficient 2k+1.
LadderPolynomial ladder_polynomial(const std::vector<BigRat>& seed_eps);
// n_poly = prod_i (E - root_i) for freely chosen roots.
LadderPolynomial ladder_polynomial_from_roots(const std::vector<BigRat>& roots);

struct LadderSpectrum {
  std::vector<std::vector<BigRat>> ladders;  // ladders[i][j] = extremal_i + j
  bool has_duplicates = false;               // same energy in two ladders
};

LadderSpectrum ladder_spectrum(const std::vector<BigRat>& extremal, int count);

}  // namespace pha
