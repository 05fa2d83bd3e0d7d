#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pha/chain.hpp"

namespace pha {

// Generators of the extended affine Weyl symmetry of the period-(m+1)
// chain: reflections s_0..s_m and the cyclic shift pi (with its inverse).
struct Generator {
  enum class Kind { S, Pi, PiInv };
  Kind kind = Kind::Pi;
  int index = 0;  // reflection index for Kind::S
};

inline Generator gen_s(int j) { return {Generator::Kind::S, j}; }
inline Generator gen_pi() { return {Generator::Kind::Pi, 0}; }
inline Generator gen_pi_inv() { return {Generator::Kind::PiInv, 0}; }

std::string gen_str(const Generator& g);

// Words act left to right: apply_word(sol, {a, b}) applies a first.
using WeylWord = std::vector<Generator>;

std::string word_str(const WeylWord& w);

// Generalized Cartan matrix on the (m+1)-cycle: 2 on the diagonal, -1
// between neighbours, except m = 1 where the single bond is doubled and
// the off-diagonal entries are -2.
class CartanMatrix {
 public:
  explicit CartanMatrix(int m);
  int m() const { return m_; }
  int entry(int k, int j) const;

 private:
  int m_;
};

// Reflection s_j.  With g = alpha_j/(f_j + f_{j+1}):
//   f_j -> f_j + g,   f_{j+1} -> f_{j+1} - g,
//   alpha_k -> alpha_k - C(k,j) * alpha_j,
// realised on the stored eps by swapping eps_j and eps_{j+1} (at the
// wrap-around j = m the swap picks up the lambda shift).  alpha_j = 0 makes
// s_j the identity; otherwise an identically-zero f_j + f_{j+1} throws
// VanishingDenominator.
ChainSolution apply_s(const ChainSolution& sol, int j);

// Cyclic shift pi: f_k -> f_{k+1}, alpha_k -> alpha_{k+1}.  On eps the wrap
// brings eps_0 - lambda, so pi^(m+1) fixes (f, alpha) while shifting every
// eps by -lambda.
ChainSolution apply_pi(const ChainSolution& sol);
ChainSolution apply_pi_inv(const ChainSolution& sol);

ChainSolution apply_word(const ChainSolution& sol, const WeylWord& word);

// Same group action restricted to alpha vectors (no denominators, always
// defined); used for fast exact relation checks.
AlphaVector apply_gen_alpha(const AlphaVector& alpha, const Generator& g);
AlphaVector apply_word_alpha(const AlphaVector& alpha, const WeylWord& word);

struct RelationCheck {
  std::string relation;
  int trials = 0;
  int violations = 0;
  bool skipped = false;
  std::string note;
};

struct RelationReport {
  int m = 0;
  std::vector<RelationCheck> checks;
  bool all_ok() const;
};

// Exact verification of the defining relations on random rational alpha
// vectors and on symbolic orbit elements: s_j^2 = 1, braid relations
// between neighbours (m >= 2; the doubled m = 1 bond has no finite braid
// order and is reported as skipped), commutation of non-neighbours
// (m >= 3), pi s_j = s_{j+1} pi, and pi^(m+1) = 1.
RelationReport verify_relations(int m, int trials, unsigned rng_seed = 12345);

struct OrbitMember {
  WeylWord word;   // a shortest word found producing this member
  ChainSolution sol;
};

struct OrbitEdge {
  std::size_t from = 0;
  Generator gen;
  std::size_t to = 0;
};

struct Orbit {
  std::vector<OrbitMember> members;
  std::vector<OrbitEdge> edges;
  std::size_t skipped_branches = 0;  // vanishing-denominator applications
};

// Breadth-first closure of the start solution under {s_0..s_m, pi} up to
// the given word length, deduplicated by exact structural equality of
// (alpha, f).  eps is excluded from the key because pi^(m+1) shifts it.
Orbit orbit(const ChainSolution& start, int depth);

// Dedup key used by orbit(); exposed for tests.
std::string solution_key(const ChainSolution& sol);

}  // namespace pha
