#include "pha/chain.hpp"

#include "pha/error.hpp"

namespace pha {

void ChainParams::validate() const {
  if (n < 1) throw ValidationError("chain period must be >= 1");
  if (static_cast<int>(eps.size()) != n) {
    throw ValidationError("eps list must have exactly n entries");
  }
}

void ChainSolution::validate() const {
  params.validate();
  if (static_cast<int>(f.size()) != params.n) {
    throw ValidationError("solution must carry exactly n functions");
  }
}

AlphaVector alpha_from_eps(const ChainParams& params) {
  params.validate();
  AlphaVector alpha(static_cast<std::size_t>(params.n));
  for (int i = 0; i < params.n; ++i) {
    BigRat next = (i + 1 < params.n) ? params.eps[static_cast<std::size_t>(i + 1)]
                                     : BigRat(params.eps[0] - params.lambda);
    alpha[static_cast<std::size_t>(i)] =
        BigRat(2 * (params.eps[static_cast<std::size_t>(i)] - next));
  }
  return alpha;
}

std::vector<RatFun> chain_residuals(const ChainSolution& sol) {
  sol.validate();
  const int n = sol.params.n;
  const AlphaVector alpha = alpha_from_eps(sol.params);
  std::vector<RatFun> res;
  res.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const RatFun& fi = sol.f[static_cast<std::size_t>(i)];
    const RatFun& fj = sol.f[static_cast<std::size_t>((i + 1) % n)];
    RatFun lhs = fi.derivative() + fj.derivative();
    RatFun rhs = fi * fi - fj * fj + RatFun(alpha[static_cast<std::size_t>(i)]);
    res.push_back(lhs - rhs);
  }
  return res;
}

ChainSolution symmetric_seed(int n, const BigRat& lambda, const BigRat& c0) {
  if (n < 1) throw ValidationError("chain period must be >= 1");
  if (lambda == 0) throw ValidationError("symmetric seed needs lambda != 0");
  ChainSolution sol;
  sol.params.n = n;
  sol.params.lambda = lambda;
  sol.params.c0 = c0;
  RatFun f = RatFun(Poly::from_coeffs({c0, lambda})) / RatFun(static_cast<long>(n));
  for (int i = 0; i < n; ++i) {
    sol.params.eps.push_back(BigRat(-i * lambda / n));
    sol.f.push_back(f);
  }
  return sol;
}

RatFun potential_from_f1(const RatFun& f1, const BigRat& eps1, PotentialForm form) {
  RatFun core = f1.derivative() + f1 * f1;
  if (form == PotentialForm::factorized) {
    core = core / RatFun(2L);
  }
  return core + RatFun(eps1);
}

RatFun sum_rule_check(const ChainSolution& sol) {
  sol.validate();
  RatFun sum;
  for (const auto& fi : sol.f) sum += fi;
  return sum.derivative();
}

}  // namespace pha
