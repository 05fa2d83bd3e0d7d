#pragma once

#include <vector>

#include "pha/ratfun.hpp"

namespace pha {

// Periodic dressing chain of period n:
//
//   f_i' + f_{i+1}' = f_i^2 - f_{i+1}^2 + alpha_i,   i = 0..n-1 (cyclic),
//
// where alpha_i = 2(eps_i - eps_{i+1}) and the cycle closes with a shift:
// eps_n is read as eps_0 - lambda.  Summing the equations gives
// (sum f_i)' = lambda, so every solution has sum f_i = lambda*x + c0.
// Arrays here are 0-based; texts that number f_1..f_n correspond index by
// index (their f_{i+1} is our f[i]).
struct ChainParams {
  int n = 0;
  BigRat lambda;
  std::vector<BigRat> eps;  // factorization energies, size n
  BigRat c0;

  void validate() const;  // throws ValidationError
};

using AlphaVector = std::vector<BigRat>;

struct ChainSolution {
  ChainParams params;
  std::vector<RatFun> f;  // size params.n

  void validate() const;
};

// alpha_i = 2(eps_i - eps_{i+1}) with the shifted closure; sums to 2*lambda.
AlphaVector alpha_from_eps(const ChainParams& params);

// Left-hand minus right-hand side of each chain equation, reduced.  All
// zero exactly iff the solution satisfies the chain.
std::vector<RatFun> chain_residuals(const ChainSolution& sol);

// The translation-covariant solution f_i = (lambda*x + c0)/n with
// eps_i = -i*lambda/n.  Requires lambda != 0.
ChainSolution symmetric_seed(int n, const BigRat& lambda, const BigRat& c0);

enum class PotentialForm {
  // V = (f1' + f1^2)/2 + eps1, consistent with the factorization
  // H = L-L+ + eps1 for L± = (±d/dx - f1)/sqrt(2).
  factorized,
  // V = f1' + f1^2 + eps1, the same expression without the half; kept so
  // both conventions can be compared side by side.
  plain,
};

RatFun potential_from_f1(const RatFun& f1, const BigRat& eps1,
                         PotentialForm form = PotentialForm::factorized);

// Derivative of sum f_i; equals the constant lambda for exact solutions.
RatFun sum_rule_check(const ChainSolution& sol);

}  // namespace pha
