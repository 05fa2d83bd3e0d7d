// Acceptance gate for the whole toolkit.  Each numbered check prints exactly
// one PASS/FAIL line; the process exits with the number of failed checks.
//
// Tolerances are pinned here, next to the checks that use them, so a change
// in accuracy is a reviewed diff and not a config tweak.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "pha/chain.hpp"
#include "pha/closed_form.hpp"
#include "pha/error.hpp"
#include "pha/numeric.hpp"
#include "pha/susy.hpp"
#include "pha/weyl.hpp"

using namespace pha;

namespace {

int failures = 0;

void verdict(int number, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%d. %-24s %s%s%s\n", number, name.c_str(), ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++failures;
}

void info(const std::string& line) { std::printf("   %s\n", line.c_str()); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool all_zero(const std::vector<RatFun>& v) {
  for (const auto& r : v)
    if (!r.is_zero()) return false;
  return true;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Group relations hold exactly on random rational parameter vectors.
//    Budget: under 10 seconds for m = 1..5, 100 vectors each.
void check_relations() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string note;
  for (int m = 1; m <= 5; ++m) {
    RelationReport report = verify_relations(m, 100);
    if (!report.all_ok()) {
      ok = false;
      note = "violations at m = " + std::to_string(m);
    }
    for (const auto& c : report.checks) {
      if (c.skipped && m == 1 && c.relation.find("^3") != std::string::npos) {
        // the m = 1 bond is doubled: the two reflections generate an
        // infinite dihedral group, so no braid relation exists to test
        info("m=1 braid check reported non-applicable (doubled bond), as it must be");
      }
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 10.0) {
    ok = false;
    note += (note.empty() ? "" : "; ") + std::string("took ") + fmt(dt) + " s";
  }
  verdict(1, "group relations", ok,
          "m = 1..5, 100 rational vectors each, exact; " + fmt(dt) + " s");
}

// ---------------------------------------------------------------------------
// 2. Every generator word of length <= 4 maps the seed to an exact solution
//    (vanishing-denominator branches skipped, and under 10% of words).
// 3. The alpha-sum invariant (sum = 2 lambda) survives every single
//    generator application along those words.
void check_preservation_and_invariant() {
  const auto t0 = std::chrono::steady_clock::now();
  long total = 0, skipped = 0, bad_residual = 0, bad_sum = 0;
  for (int n = 2; n <= 5; ++n) {
    ChainSolution seed = symmetric_seed(n, BigRat(1), BigRat(0));
    const BigRat target = BigRat(2 * seed.params.lambda);
    const int gens = n + 1;
    for (int len = 1; len <= 4; ++len) {
      long count = 1;
      for (int i = 0; i < len; ++i) count *= gens;
      for (long code = 0; code < count; ++code) {
        long c = code;
        ++total;
        ChainSolution cur = seed;
        bool alive = true;
        for (int i = 0; i < len && alive; ++i) {
          const int pick = static_cast<int>(c % gens);
          c /= gens;
          try {
            cur = pick < n ? apply_s(cur, pick) : apply_pi(cur);
          } catch (const VanishingDenominator&) {
            ++skipped;
            alive = false;
            break;
          }
          BigRat sum(0);
          for (const auto& a : alpha_from_eps(cur.params)) sum = BigRat(sum + a);
          if (sum != target) ++bad_sum;
        }
        if (alive && !all_zero(chain_residuals(cur))) ++bad_residual;
      }
    }
  }
  const double dt = seconds_since(t0);
  const double skip_frac = static_cast<double>(skipped) / static_cast<double>(total);
  const bool ok2 = bad_residual == 0 && skip_frac < 0.10 && dt < 60.0;
  verdict(2, "solution preservation", ok2,
          std::to_string(total) + " words (n = 2..5, length <= 4), " +
              std::to_string(skipped) + " skipped, " +
              std::to_string(bad_residual) + " nonzero residuals; " + fmt(dt) + " s");
  verdict(3, "alpha-sum invariant", bad_sum == 0,
          bad_sum == 0 ? "sum alpha = 2 lambda after every application"
                       : std::to_string(bad_sum) + " violations");
}

// ---------------------------------------------------------------------------
// 4. Closed forms: period 1 and the halved period-2 form solve their chains
//    exactly; the period-3 completion recovers f_2, f_3 on every orbit
//    member of depth <= 2.
void check_closed_forms() {
  bool ok = true;
  std::string note;

  if (!all_zero(chain_residuals(pha0_solution(BigRat(3), BigRat(1, 2), BigRat(1, 4))))) {
    ok = false;
    note = "period-1 residual";
  }
  ChainSolution p1a = pha1_solution(BigRat(1), BigRat(0), BigRat(0), BigRat(1, 2));
  ChainSolution p1b = pha1_solution(BigRat(2), BigRat(1, 7), BigRat(1, 3), BigRat(-1, 5));
  if (!all_zero(chain_residuals(p1a)) || !all_zero(chain_residuals(p1b))) {
    ok = false;
    note = "period-2 residual";
  }

  ChainSolution seed = symmetric_seed(3, BigRat(1), BigRat(0));
  Orbit orb = orbit(seed, 2);
  long mismatches = 0;
  for (const auto& member : orb.members) {
    auto [f2, f3] = pha2_f2f3_from_f1(member.sol.f[0], member.sol.params);
    if (f2 != member.sol.f[1] || f3 != member.sol.f[2]) ++mismatches;
  }
  if (mismatches != 0) {
    ok = false;
    note = std::to_string(mismatches) + " period-3 recovery mismatches";
  }
  verdict(4, "closed forms", ok,
          ok ? "period 1, period 2 (halved), period-3 recovery on " +
                   std::to_string(orb.members.size()) + " orbit members, all exact"
             : note);
}

// ---------------------------------------------------------------------------
// 5. Fourth-equation residuals: two exact zeros and an exact nonzero.
void check_painleve4() {
  Poly x = Poly::x();
  RatFun g1 = RatFun(x * BigRat(-2));
  RatFun g2 = RatFun(x * BigRat(-2, 3));
  RatFun g3 = RatFun(x * BigRat(-2)) + RatFun(BigRat(1, 10));
  const bool z1 = painleve4_residual(g1, {BigRat(0), BigRat(-2)}).is_zero();
  const bool z2 = painleve4_residual(g2, {BigRat(0), BigRat(-2, 9)}).is_zero();
  const bool nz = !painleve4_residual(g3, {BigRat(0), BigRat(-2)}).is_zero();
  verdict(5, "fourth Painleve", z1 && z2 && nz,
          "g = -2x @ (0,-2) and g = -2x/3 @ (0,-2/9) vanish symbolically; "
          "perturbed g does not");
}

// ---------------------------------------------------------------------------
// 6. Numerics: RK4 accuracy on the period-3 seed, derivative conservation,
//    and fourth-order convergence measured on a curved exact solution (the
//    seed itself is linear, so RK4 is exact there and no ratio exists).
void check_numerics() {
  const double kErrTol = 1e-8;
  const double kConsTol = 1e-12;

  ChainParams p;
  p.n = 3;
  p.lambda = BigRat(1);
  p.c0 = BigRat(0);
  p.eps = {BigRat(0), BigRat(-1, 3), BigRat(-2, 3)};
  Grid grid(1.0, 2.0, 1000);
  SampledChain traj = rk4_integrate(p, {1.0 / 3, 1.0 / 3, 1.0 / 3}, grid);
  double err = 0.0, cons = 0.0;
  for (std::size_t t = 0; t < traj.x.size(); ++t) {
    std::vector<double> ft = {traj.f[0][t], traj.f[1][t], traj.f[2][t]};
    for (double fi : ft) err = std::max(err, std::fabs(fi - traj.x[t] / 3));
    std::vector<double> d = explicit_derivatives(ft, p);
    cons = std::max(cons, std::fabs(d[0] + d[1] + d[2] - 1.0));
  }

  ChainParams q = p;
  q.eps = {BigRat(-1, 3), BigRat(0), BigRat(-2, 3)};
  auto max_err = [&](int steps) {
    Grid g(1.0, 2.0, steps);
    SampledChain tr = rk4_integrate(q, {4.0 / 3, -2.0 / 3, 1.0 / 3}, g);
    double e = 0.0;
    for (std::size_t t = 0; t < tr.x.size(); ++t) {
      const double x = tr.x[t];
      e = std::max(e, std::fabs(tr.f[0][t] - (x / 3 + 1 / x)));
      e = std::max(e, std::fabs(tr.f[1][t] - (x / 3 - 1 / x)));
      e = std::max(e, std::fabs(tr.f[2][t] - x / 3));
    }
    return e;
  };
  const double ratio = max_err(250) / max_err(500);

  const bool ok = err < kErrTol && cons < kConsTol && ratio >= 12.0 && ratio <= 20.0;
  verdict(6, "integrator", ok,
          "seed error " + fmt(err) + " (< 1e-8), conservation " + fmt(cons) +
              " (< 1e-12), convergence ratio " + fmt(ratio) + " in [12, 20]");
}

// ---------------------------------------------------------------------------
// 7. Oscillator partners.  The 2-step (-0.6, -1.2) configuration is kept
//    exactly as stated even though it cannot meet the bound: both seeds are
//    even (nu = 0), so their Wronskian is odd and vanishes at x = 0, the
//    partner has a double pole there, and the odd transformed states behave
//    like 1/x around it.  The checks report honestly; the admissible
//    two-level construction is shown for contrast.
struct ResidualScan {
  double max_residual = 0.0;
  int unevaluable = 0;  // grid points where the Wronskian vanished exactly
};

ResidualScan scan_residuals(const std::vector<SeedState>& seeds,
                            const std::vector<int>& levels, const Grid& grid) {
  ResidualScan out;
  const double h = grid.dx();
  for (int n : levels) {
    std::vector<double> phi(static_cast<std::size_t>(grid.points()), 0.0);
    std::vector<bool> usable(static_cast<std::size_t>(grid.points()), true);
    for (int i = 0; i < grid.points(); ++i) {
      try {
        phi[static_cast<std::size_t>(i)] = transformed_state(seeds, n, grid.x(i));
      } catch (const Error&) {
        usable[static_cast<std::size_t>(i)] = false;
        ++out.unevaluable;
      }
    }
    for (int i = 2; i + 2 < grid.points(); ++i) {
      bool window = true;
      for (int k = -2; k <= 2; ++k)
        window = window && usable[static_cast<std::size_t>(i + k)];
      if (!window) continue;
      double v;
      try {
        v = partner_potential(seeds, grid.x(i));
      } catch (const Error&) {
        continue;
      }
      const auto at = [&](int k) { return phi[static_cast<std::size_t>(i + k)]; };
      const double dd =
          (-at(-2) + 16 * at(-1) - 30 * at(0) + 16 * at(1) - at(2)) / (12 * h * h);
      const double res = -0.5 * dd + (v - (n + 0.5)) * at(0);
      out.max_residual = std::max(out.max_residual, std::fabs(res));
    }
  }
  return out;
}

void check_susy() {
  const double kPotentialTol = 1e-12;
  const double kResidualTol = 1e-6;
  Grid grid(-6.0, 6.0, 2000);  // 2001 points

  // (a) ground-state seed shifts the oscillator by exactly one
  std::vector<SeedState> ground = {SeedState(SeedSpec::general(0.5, 0.0))};
  double vdev = 0.0;
  for (int i = 0; i < grid.points(); ++i) {
    const double x = grid.x(i);
    vdev = std::max(vdev,
                    std::fabs(partner_potential(ground, x) - (x * x / 2 + 1)));
  }
  const bool ok_potential = vdev < kPotentialTol;

  // (b) one-step partner from eps = -1/2: transformed states solve it
  std::vector<SeedState> one = {SeedState(SeedSpec::general(-0.5, 0.0))};
  ResidualScan scan1 = scan_residuals(one, {0, 1, 2, 3, 4, 5}, grid);
  const bool ok_one = scan1.max_residual < kResidualTol;

  // (c) two-step partner from eps = (-0.6, -1.2): stated bound
  std::vector<SeedState> two = {SeedState(SeedSpec::general(-0.6, 0.0)),
                                SeedState(SeedSpec::general(-1.2, 0.0))};
  ResidualScan scan2 = scan_residuals(two, {0, 1, 2, 3, 4, 5}, grid);
  const bool ok_two = scan2.max_residual < kResidualTol;

  // (d) the nodelessness checker must flag eps = -1/2, nu = 2
  std::vector<SeedState> erfseed = {SeedState(SeedSpec::general(-0.5, 2.0))};
  const bool ok_flag = !nonsingularity_check(erfseed, grid).nodeless;

  const bool ok = ok_potential && ok_one && ok_two && ok_flag;
  verdict(7, "oscillator partners", ok,
          "partner dev " + fmt(vdev) + " (< 1e-12); one-step residual " +
              fmt(scan1.max_residual) + " (< 1e-6); two-step residual " +
              fmt(scan2.max_residual) + " (< 1e-6); erf seed flagged " +
              (ok_flag ? "yes" : "NO"));
  if (!ok_two) {
    info("two-step detail: both seeds are even, so W(0) = 0 by parity (" +
         std::to_string(scan2.unevaluable) +
         " state evaluations hit that zero exactly); the partner has a double");
    info("pole at the origin and the odd states phi_1,3,5 diverge like 1/x "
         "there, so no grid through the origin can meet 1e-6.");
    NodeReport node = nonsingularity_check(two, grid);
    info("nodelessness checker output for it: nodeless = " +
         std::string(node.nodeless ? "true" : "false") + ", " +
         std::to_string(node.brackets.size()) + " bracket(s) near x = " +
         (node.brackets.empty() ? std::string("-")
                                : fmt(node.brackets[0].first)));
    std::vector<SeedState> adm = {SeedState(SeedSpec::hermite(1)),
                                  SeedState(SeedSpec::hermite(2))};
    ResidualScan scan3 = scan_residuals(adm, {0, 3, 4, 5}, grid);
    NodeReport adm_node = nonsingularity_check(adm, grid);
    info("for contrast, the admissible two-level pair (bound states 1, 2) is "
         "nodeless: " + std::string(adm_node.nodeless ? "true" : "false") +
         ", residual " + fmt(scan3.max_residual) + " (< 1e-6: " +
         (scan3.max_residual < kResidualTol ? "yes" : "no") + ")");
  }
}

// ---------------------------------------------------------------------------
// 8. Ladder polynomials: degree 2k+1 with first difference of degree 2k and
//    leading coefficient 2k+1, exactly, on random rational energy sets; the
//    free-root mode gives degree m from m+1 roots.
void check_ladders() {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  auto random_rat = [&]() {
    BigRat r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };

  bool ok = true;
  for (int rep = 0; rep < 25 && ok; ++rep) {
    std::vector<BigRat> eps;
    for (int k = 1; k <= 4; ++k) {
      eps.push_back(random_rat());
      LadderPolynomial lp = ladder_polynomial(eps);
      ok = ok && lp.n_poly.degree() == 2 * k + 1 && lp.n_poly.leading() == BigRat(1) &&
           lp.p_poly.degree() == 2 * k && lp.p_poly.leading() == BigRat(2 * k + 1) &&
           lp.n_poly.eval(BigRat(1, 2)) == BigRat(0);
    }
    for (int m = 1; m <= 4 && ok; ++m) {
      std::vector<BigRat> roots;
      for (int i = 0; i <= m; ++i) roots.push_back(random_rat());
      LadderPolynomial lp = ladder_polynomial_from_roots(roots);
      ok = ok && lp.n_poly.degree() == m + 1 && lp.p_poly.degree() == m &&
           lp.p_poly.leading() == BigRat(m + 1);
      for (const auto& r : roots) ok = ok && lp.n_poly.eval(r) == BigRat(0);
    }
  }
  verdict(8, "ladder polynomials", ok,
          "k = 1..4 and free roots m = 1..4, 25 random rational sets, exact");
}

}  // namespace

int main() {
  std::printf("acceptance checks\n=================\n");
  check_relations();
  check_preservation_and_invariant();
  check_closed_forms();
  check_painleve4();
  check_numerics();
  check_susy();
  check_ladders();
  std::printf("=================\n%d of 8 passed\n", 8 - failures);
  return failures;
}
