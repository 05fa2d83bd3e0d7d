#include "pha/weyl.hpp"

#include <deque>
#include <random>
#include <sstream>
#include <unordered_map>

#include "pha/error.hpp"

namespace pha {

std::string gen_str(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::S:
      return "s" + std::to_string(g.index);
    case Generator::Kind::Pi:
      return "pi";
    case Generator::Kind::PiInv:
      return "pi^-1";
  }
  return "?";
}

std::string word_str(const WeylWord& w) {
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out += " ";
    out += gen_str(g);
  }
  return out;
}

CartanMatrix::CartanMatrix(int m) : m_(m) {
  if (m < 1) throw ValidationError("Cartan matrix needs m >= 1");
}

int CartanMatrix::entry(int k, int j) const {
  const int n = m_ + 1;
  if (k < 0 || j < 0 || k >= n || j >= n) {
    throw ValidationError("Cartan index out of range");
  }
  if (k == j) return 2;
  if (m_ == 1) return -2;  // doubled bond on the 2-cycle
  const int d = ((k - j) % n + n) % n;
  return (d == 1 || d == n - 1) ? -1 : 0;
}

namespace {

void require_weyl_period(const ChainParams& params) {
  if (params.n < 2) {
    throw ValidationError("reflection action needs period >= 2");
  }
}

std::vector<BigRat> eps_after_s(const ChainParams& params, int j) {
  // Swap eps_j <-> eps_{j+1}; at the wrap the virtual eps_n = eps_0 - lambda
  // takes part, so eps_m and eps_0 trade places up to the lambda shift.
  std::vector<BigRat> eps = params.eps;
  const int m = params.n - 1;
  if (j < m) {
    std::swap(eps[static_cast<std::size_t>(j)], eps[static_cast<std::size_t>(j + 1)]);
  } else {
    BigRat old_last = eps[static_cast<std::size_t>(m)];
    eps[static_cast<std::size_t>(m)] = BigRat(eps[0] - params.lambda);
    eps[0] = BigRat(old_last + params.lambda);
  }
  return eps;
}

}  // namespace

ChainSolution apply_s(const ChainSolution& sol, int j) {
  sol.validate();
  require_weyl_period(sol.params);
  const int n = sol.params.n;
  if (j < 0 || j >= n) throw ValidationError("reflection index out of range");

  const AlphaVector alpha = alpha_from_eps(sol.params);
  const BigRat& aj = alpha[static_cast<std::size_t>(j)];
  if (aj == 0) return sol;  // zero shift: s_j acts as the identity

  const std::size_t ja = static_cast<std::size_t>(j);
  const std::size_t jb = static_cast<std::size_t>((j + 1) % n);
  RatFun denom = sol.f[ja] + sol.f[jb];
  if (denom.is_zero()) {
    throw VanishingDenominator("s_" + std::to_string(j) +
                               " undefined: f_" + std::to_string(j) + " + f_" +
                               std::to_string((j + 1) % n) + " is identically zero");
  }
  RatFun g = RatFun(aj) / denom;

  ChainSolution out = sol;
  out.f[ja] = sol.f[ja] + g;
  out.f[jb] = sol.f[jb] - g;
  out.params.eps = eps_after_s(sol.params, j);
  return out;
}

ChainSolution apply_pi(const ChainSolution& sol) {
  sol.validate();
  require_weyl_period(sol.params);
  const int n = sol.params.n;
  ChainSolution out = sol;
  for (int i = 0; i < n; ++i) {
    out.f[static_cast<std::size_t>(i)] = sol.f[static_cast<std::size_t>((i + 1) % n)];
    out.params.eps[static_cast<std::size_t>(i)] =
        (i + 1 < n) ? sol.params.eps[static_cast<std::size_t>(i + 1)]
                    : BigRat(sol.params.eps[0] - sol.params.lambda);
  }
  return out;
}

ChainSolution apply_pi_inv(const ChainSolution& sol) {
  sol.validate();
  require_weyl_period(sol.params);
  const int n = sol.params.n;
  ChainSolution out = sol;
  for (int i = 0; i < n; ++i) {
    out.f[static_cast<std::size_t>(i)] =
        sol.f[static_cast<std::size_t>((i - 1 + n) % n)];
  }
  out.params.eps[0] =
      BigRat(sol.params.eps[static_cast<std::size_t>(n - 1)] + sol.params.lambda);
  for (int i = 1; i < n; ++i) {
    out.params.eps[static_cast<std::size_t>(i)] =
        sol.params.eps[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

ChainSolution apply_word(const ChainSolution& sol, const WeylWord& word) {
  ChainSolution cur = sol;
  for (const auto& g : word) {
    switch (g.kind) {
      case Generator::Kind::S:
        cur = apply_s(cur, g.index);
        break;
      case Generator::Kind::Pi:
        cur = apply_pi(cur);
        break;
      case Generator::Kind::PiInv:
        cur = apply_pi_inv(cur);
        break;
    }
  }
  return cur;
}

AlphaVector apply_gen_alpha(const AlphaVector& alpha, const Generator& g) {
  const int n = static_cast<int>(alpha.size());
  if (n < 2) throw ValidationError("alpha action needs period >= 2");
  AlphaVector out(alpha.size());
  switch (g.kind) {
    case Generator::Kind::S: {
      const int j = g.index;
      if (j < 0 || j >= n) throw ValidationError("reflection index out of range");
      CartanMatrix cartan(n - 1);
      const BigRat aj = alpha[static_cast<std::size_t>(j)];
      for (int k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] =
            BigRat(alpha[static_cast<std::size_t>(k)] - cartan.entry(k, j) * aj);
      }
      break;
    }
    case Generator::Kind::Pi:
      for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>((i + 1) % n)];
      }
      break;
    case Generator::Kind::PiInv:
      for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>((i - 1 + n) % n)];
      }
      break;
  }
  return out;
}

AlphaVector apply_word_alpha(const AlphaVector& alpha, const WeylWord& word) {
  AlphaVector cur = alpha;
  for (const auto& g : word) cur = apply_gen_alpha(cur, g);
  return cur;
}

bool RelationReport::all_ok() const {
  for (const auto& c : checks) {
    if (!c.skipped && c.violations > 0) return false;
  }
  return true;
}

std::string solution_key(const ChainSolution& sol) {
  // alpha plus the reduced coefficient lists of every f; eps is deliberately
  // left out (see header).
  std::ostringstream os;
  for (const auto& a : alpha_from_eps(sol.params)) os << a.get_str() << ";";
  os << "|";
  for (const auto& fi : sol.f) {
    for (const auto& c : fi.num().coeffs()) os << c.get_str() << ",";
    os << "/";
    for (const auto& c : fi.den().coeffs()) os << c.get_str() << ",";
    os << ";";
  }
  return os.str();
}

namespace {

bool same_f_alpha(const ChainSolution& a, const ChainSolution& b) {
  return a.f == b.f && alpha_from_eps(a.params) == alpha_from_eps(b.params);
}

AlphaVector random_alpha(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  AlphaVector a(static_cast<std::size_t>(n));
  for (auto& v : a) {
    v = BigRat(num(rng), den(rng));
    v.canonicalize();
  }
  return a;
}

WeylWord repeat_pair(const Generator& a, const Generator& b, int times) {
  WeylWord w;
  for (int t = 0; t < times; ++t) {
    w.push_back(a);
    w.push_back(b);
  }
  return w;
}

// A few exact symbolic elements built from short seed-orbit words; used to
// check the relations on (f, alpha), not just on alpha.
std::vector<ChainSolution> symbolic_samples(int n) {
  ChainSolution seed = symmetric_seed(n, BigRat(1), BigRat(0));
  std::vector<ChainSolution> out{seed, apply_s(seed, 0)};
  out.push_back(apply_pi(apply_s(seed, n - 1)));
  if (n >= 3) out.push_back(apply_s(apply_s(seed, 0), 1));
  return out;
}

}  // namespace

RelationReport verify_relations(int m, int trials, unsigned rng_seed) {
  if (m < 1) throw ValidationError("verify_relations needs m >= 1");
  if (trials < 1) throw ValidationError("verify_relations needs trials >= 1");
  const int n = m + 1;
  std::mt19937 rng(rng_seed);
  RelationReport report;
  report.m = m;

  std::vector<AlphaVector> alphas;
  alphas.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) alphas.push_back(random_alpha(n, rng));
  const std::vector<ChainSolution> samples = symbolic_samples(n);

  // Runs one relation word over all alpha trials and the symbolic samples;
  // the word must act as the identity.
  auto check_identity_word = [&](const std::string& name, const WeylWord& word) {
    RelationCheck chk;
    chk.relation = name;
    chk.trials = trials;
    for (const auto& a : alphas) {
      if (apply_word_alpha(a, word) != a) ++chk.violations;
    }
    for (const auto& s : samples) {
      ++chk.trials;
      try {
        if (!same_f_alpha(apply_word(s, word), s)) ++chk.violations;
      } catch (const VanishingDenominator&) {
        --chk.trials;  // undefined on this sample; not a violation
      }
    }
    report.checks.push_back(std::move(chk));
  };

  for (int i = 0; i < n; ++i) {
    check_identity_word("s" + std::to_string(i) + "^2",
                        {gen_s(i), gen_s(i)});
  }

  if (m == 1) {
    RelationCheck chk;
    chk.relation = "(s0 s1)^3";
    chk.skipped = true;
    chk.note = "doubled bond for m = 1: s0 s1 has infinite order, no braid relation";
    report.checks.push_back(std::move(chk));
  } else {
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      check_identity_word(
          "(s" + std::to_string(i) + " s" + std::to_string(j) + ")^3",
          repeat_pair(gen_s(i), gen_s(j), 3));
    }
  }

  if (m >= 3) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;  // neighbours across the wrap
        check_identity_word(
            "(s" + std::to_string(i) + " s" + std::to_string(j) + ")^2",
            repeat_pair(gen_s(i), gen_s(j), 2));
      }
    }
  } else {
    RelationCheck chk;
    chk.relation = "(si sj)^2, non-neighbours";
    chk.skipped = true;
    chk.note = "no non-neighbouring pairs on a cycle of " + std::to_string(n) + " nodes";
    report.checks.push_back(std::move(chk));
  }

  // pi s_i = s_{i+1} pi, compared as left-to-right words.
  for (int i = 0; i < n; ++i) {
    RelationCheck chk;
    chk.relation = "pi s" + std::to_string(i) + " = s" + std::to_string((i + 1) % n) + " pi";
    chk.trials = trials;
    const WeylWord left{gen_pi(), gen_s(i)};
    const WeylWord right{gen_s((i + 1) % n), gen_pi()};
    for (const auto& a : alphas) {
      if (apply_word_alpha(a, left) != apply_word_alpha(a, right)) ++chk.violations;
    }
    for (const auto& s : samples) {
      ++chk.trials;
      try {
        if (!same_f_alpha(apply_word(s, left), apply_word(s, right))) ++chk.violations;
      } catch (const VanishingDenominator&) {
        --chk.trials;
      }
    }
    report.checks.push_back(std::move(chk));
  }

  {
    WeylWord word(static_cast<std::size_t>(n), gen_pi());
    check_identity_word("pi^" + std::to_string(n), word);
  }

  return report;
}

Orbit orbit(const ChainSolution& start, int depth) {
  start.validate();
  require_weyl_period(start.params);
  if (depth < 0) throw ValidationError("orbit depth must be >= 0");
  const int n = start.params.n;

  Orbit result;
  std::unordered_map<std::string, std::size_t> index;
  result.members.push_back({WeylWord{}, start});
  index.emplace(solution_key(start), 0);

  std::deque<std::size_t> frontier{0};
  std::vector<Generator> gens;
  for (int j = 0; j < n; ++j) gens.push_back(gen_s(j));
  gens.push_back(gen_pi());

  for (int level = 0; level < depth; ++level) {
    std::deque<std::size_t> next;
    for (std::size_t src : frontier) {
      for (const auto& g : gens) {
        ChainSolution image;
        try {
          image = (g.kind == Generator::Kind::S)
                      ? apply_s(result.members[src].sol, g.index)
                      : apply_pi(result.members[src].sol);
        } catch (const VanishingDenominator&) {
          ++result.skipped_branches;
          continue;
        }
        const std::string key = solution_key(image);
        auto [it, inserted] = index.emplace(key, result.members.size());
        if (inserted) {
          WeylWord word = result.members[src].word;
          word.push_back(g);
          result.members.push_back({std::move(word), std::move(image)});
          next.push_back(it->second);
        }
        result.edges.push_back({src, g, it->second});
      }
    }
    frontier = std::move(next);
  }
  return result;
}

}  // namespace pha
