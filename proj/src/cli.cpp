#include "pha/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "pha/closed_form.hpp"
#include "pha/error.hpp"
#include "pha/numeric.hpp"
#include "pha/parse.hpp"
#include "pha/serialize.hpp"
#include "pha/susy.hpp"
#include "pha/weyl.hpp"

namespace pha::cli {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += '"';
  return quoted;
}

double flag_double(const std::string& s) { return rat_double(parse_rational(s)); }

std::vector<BigRat> split_rationals(const std::string& s, const char* what) {
  std::vector<BigRat> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw ValidationError(std::string(what) + " must not be empty");
  return out;
}

ChainSolution load_chain(const std::string& path) {
  Json doc;
  if (path == "-") {
    doc = Json::parse(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open chain file: " + path);
    doc = Json::parse(in);
  }
  return chain_from_json(doc);
}

Json error_json(const Error& e) {
  std::string type = "computation";
  Json detail = Json::object();
  if (auto* b = dynamic_cast<const Blowup*>(&e)) {
    type = "blowup";
    detail["last_x"] = b->last_x;
  } else if (dynamic_cast<const PoleError*>(&e)) {
    type = "pole";
  } else if (dynamic_cast<const VanishingDenominator*>(&e)) {
    type = "vanishing_denominator";
  } else if (dynamic_cast<const SingularWronskian*>(&e)) {
    type = "singular_wronskian";
  }
  detail["type"] = type;
  detail["message"] = e.what();
  Json obj = Json::object();
  obj["error"] = detail;
  return obj;
}

// ---------------------------------------------------------------- seed ----

struct SeedArgs {
  int n = 1;
  std::string lambda;
  std::string c0 = "0";
  std::string format = "json";
};

int run_seed(const SeedArgs& a, std::ostream& out) {
  ChainSolution sol = symmetric_seed(a.n, parse_rational(a.lambda), parse_rational(a.c0));
  if (a.format == "json") {
    out << chain_to_json(sol).dump(2) << "\n";
  } else {
    AlphaVector alpha = alpha_from_eps(sol.params);
    out << "i,eps,alpha,f\n";
    for (int i = 0; i < sol.params.n; ++i) {
      out << i << ',' << rat_str(sol.params.eps[i]) << ',' << rat_str(alpha[i]) << ','
          << csv_quote(sol.f[i].str()) << "\n";
    }
  }
  return 0;
}

// --------------------------------------------------------------- orbit ----

struct OrbitArgs {
  int m = 1;
  std::string lambda;
  std::string c0 = "0";
  int depth = 1;
  bool edges = false;
  std::string format = "json";
};

int run_orbit(const OrbitArgs& a, std::ostream& out, std::ostream& err) {
  ChainSolution start =
      symmetric_seed(a.m + 1, parse_rational(a.lambda), parse_rational(a.c0));
  Orbit orb = orbit(start, a.depth);
  if (a.edges) {
    if (a.format == "json") {
      for (const auto& e : orb.edges) out << orbit_edge_to_json(e).dump() << "\n";
    } else {
      out << "from,gen,to\n";
      for (const auto& e : orb.edges)
        out << e.from << ',' << gen_str(e.gen) << ',' << e.to << "\n";
    }
  } else {
    if (a.format == "json") {
      for (const auto& mem : orb.members) out << orbit_member_to_json(mem).dump() << "\n";
    } else {
      out << "word,alpha,f\n";
      for (const auto& mem : orb.members) {
        std::string alpha_join, f_join;
        AlphaVector alpha = alpha_from_eps(mem.sol.params);
        for (std::size_t i = 0; i < alpha.size(); ++i) {
          if (i) alpha_join += ';';
          alpha_join += rat_str(alpha[i]);
        }
        for (std::size_t i = 0; i < mem.sol.f.size(); ++i) {
          if (i) f_join += ';';
          f_join += mem.sol.f[i].str();
        }
        out << csv_quote(word_str(mem.word)) << ',' << csv_quote(alpha_join) << ','
            << csv_quote(f_join) << "\n";
      }
    }
  }
  if (orb.skipped_branches > 0) {
    err << "note: " << orb.skipped_branches
        << " branch(es) skipped on vanishing denominators\n";
  }
  return 0;
}

// ------------------------------------------------------------- residual ----

struct ResidualArgs {
  std::string chain;
  std::string format = "json";
};

int run_residual(const ResidualArgs& a, std::ostream& out) {
  ChainSolution sol = load_chain(a.chain);
  std::vector<RatFun> res = chain_residuals(sol);
  bool all_zero = true;
  for (const auto& r : res) all_zero = all_zero && r.is_zero();
  if (a.format == "json") {
    Json obj = Json::object();
    Json arr = Json::array();
    for (const auto& r : res) arr.push_back(r.str());
    obj["residuals"] = arr;
    obj["all_zero"] = all_zero;
    out << obj.dump(2) << "\n";
  } else {
    out << "i,residual,is_zero\n";
    for (std::size_t i = 0; i < res.size(); ++i) {
      out << i << ',' << csv_quote(res[i].str()) << ','
          << (res[i].is_zero() ? "true" : "false") << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------ relations ----

struct RelationsArgs {
  int m = 1;
  int trials = 100;
  unsigned rng_seed = 12345;
  std::string format = "json";
};

int run_relations(const RelationsArgs& a, std::ostream& out) {
  RelationReport report = verify_relations(a.m, a.trials, a.rng_seed);
  if (a.format == "json") {
    Json obj = Json::object();
    obj["m"] = report.m;
    obj["all_ok"] = report.all_ok();
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json jc = Json::object();
      jc["relation"] = c.relation;
      jc["trials"] = c.trials;
      jc["violations"] = c.violations;
      jc["skipped"] = c.skipped;
      jc["note"] = c.note;
      checks.push_back(jc);
    }
    obj["checks"] = checks;
    out << obj.dump(2) << "\n";
  } else {
    out << "relation,trials,violations,skipped,note\n";
    for (const auto& c : report.checks) {
      out << csv_quote(c.relation) << ',' << c.trials << ',' << c.violations << ','
          << (c.skipped ? "true" : "false") << ',' << csv_quote(c.note) << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------ potential ----

struct PotentialArgs {
  std::string chain;
  int index = 0;
  std::string form = "factorized";
  std::string format = "json";
};

int run_potential(const PotentialArgs& a, std::ostream& out) {
  ChainSolution sol = load_chain(a.chain);
  if (a.index < 0 || a.index >= sol.params.n) {
    throw ValidationError("--index must lie in [0, " + std::to_string(sol.params.n) +
                          ")");
  }
  PotentialForm form =
      a.form == "plain" ? PotentialForm::plain : PotentialForm::factorized;
  RatFun v = potential_from_f1(sol.f[a.index], sol.params.eps[a.index], form);
  if (a.format == "json") {
    Json obj = Json::object();
    obj["index"] = a.index;
    obj["eps"] = rat_str(sol.params.eps[a.index]);
    obj["form"] = a.form;
    obj["potential"] = ratfun_to_json(v);
    obj["str"] = v.str();
    out << obj.dump(2) << "\n";
  } else {
    out << "index,eps,form,potential\n";
    out << a.index << ',' << rat_str(sol.params.eps[a.index]) << ',' << a.form << ','
        << csv_quote(v.str()) << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- susy ----

struct SusyArgs {
  std::vector<std::string> seeds;   // "eps" or "eps,nu", exact rationals
  std::vector<int> hermite;         // levels
  int states = 6;
  std::string xmin = "-6";
  std::string xmax = "6";
  int points = 2001;
  std::string format = "csv";
};

int run_susy(const SusyArgs& a, std::ostream& out) {
  std::vector<SeedState> seeds;
  std::vector<BigRat> exact_eps;
  Json seed_descr = Json::array();
  for (const auto& s : a.seeds) {
    const auto comma = s.find(',');
    BigRat eps = parse_rational(comma == std::string::npos ? s : s.substr(0, comma));
    BigRat nu(0);
    if (comma != std::string::npos) nu = parse_rational(s.substr(comma + 1));
    seeds.emplace_back(SeedSpec::general(rat_double(eps), rat_double(nu)));
    exact_eps.push_back(eps);
    Json d = Json::object();
    d["kind"] = "general";
    d["eps"] = rat_str(eps);
    d["nu"] = rat_str(nu);
    seed_descr.push_back(d);
  }
  for (int n : a.hermite) {
    if (n < 0) throw ValidationError("--hermite level must be >= 0");
    seeds.emplace_back(SeedSpec::hermite(n));
    exact_eps.push_back(BigRat(2 * n + 1, 2));
    Json d = Json::object();
    d["kind"] = "hermite";
    d["n"] = n;
    seed_descr.push_back(d);
  }
  if (a.points < 3) throw ValidationError("--points must be >= 3");
  if (a.states < 0) throw ValidationError("--states must be >= 0");
  Grid grid(flag_double(a.xmin), flag_double(a.xmax), a.points - 1);

  // Normalization poles: E_n coincides with a seed energy.
  std::vector<bool> pole(static_cast<std::size_t>(a.states), false);
  for (int n = 0; n < a.states; ++n) {
    for (const auto& e : exact_eps)
      if (e == BigRat(2 * n + 1, 2)) pole[static_cast<std::size_t>(n)] = true;
  }

  if (a.format == "csv") {
    out << "x,V1";
    for (int n = 0; n < a.states; ++n) out << ",phi_" << n;
    out << "\n";
    for (int i = 0; i < grid.points(); ++i) {
      const double x = grid.x(i);
      out << fmt17(x) << ',';
      try {
        out << fmt17(partner_potential(seeds, x));
      } catch (const SingularWronskian&) {
        // leave the cell empty where the construction is singular
      }
      for (int n = 0; n < a.states; ++n) {
        out << ',';
        if (pole[static_cast<std::size_t>(n)]) continue;
        try {
          out << fmt17(transformed_state(seeds, n, x));
        } catch (const Error&) {
        }
      }
      out << "\n";
    }
    return 0;
  }

  Json obj = Json::object();
  obj["seeds"] = seed_descr;
  Json grid_j = Json::object();
  grid_j["xmin"] = grid.x0;
  grid_j["xmax"] = grid.x1;
  grid_j["points"] = grid.points();
  obj["grid"] = grid_j;

  NodeReport node = nonsingularity_check(seeds, grid);
  Json node_j = Json::object();
  node_j["nodeless"] = node.nodeless;
  node_j["min_abs_w"] = node.min_abs_w;
  Json brackets = Json::array();
  for (const auto& [lo, hi] : node.brackets) brackets.push_back(Json::array({lo, hi}));
  node_j["brackets"] = brackets;
  obj["nonsingularity"] = node_j;

  LadderPolynomial ladder = ladder_polynomial(exact_eps);
  Json ladder_j = Json::object();
  ladder_j["n_coeffs"] = poly_to_json(ladder.n_poly);
  ladder_j["p_coeffs"] = poly_to_json(ladder.p_poly);
  ladder_j["n_degree"] = ladder.n_poly.degree();
  ladder_j["p_degree"] = ladder.p_poly.degree();
  obj["ladder"] = ladder_j;

  std::vector<BigRat> extremal = {BigRat(1, 2)};
  for (const auto& e : exact_eps) {
    bool seen = false;
    for (const auto& prev : extremal) seen = seen || prev == e;
    if (!seen) extremal.push_back(e);
  }
  LadderSpectrum spectrum = ladder_spectrum(extremal, std::max(a.states, 1));
  Json ladders = Json::array();
  for (const auto& ladder_row : spectrum.ladders) {
    Json row = Json::array();
    for (const auto& e : ladder_row) row.push_back(rat_str(e));
    ladders.push_back(row);
  }
  Json spec_j = Json::object();
  spec_j["ladders"] = ladders;
  spec_j["has_duplicates"] = spectrum.has_duplicates;
  obj["spectrum"] = spec_j;

  out << obj.dump(2) << "\n";
  return 0;
}

// ------------------------------------------------------------ integrate ----

struct IntegrateArgs {
  std::string lambda;
  std::string c0 = "0";
  std::string eps;
  std::string initial;
  std::string x0;
  std::string x1;
  int steps = 1000;
  std::string format = "csv";
};

int run_integrate(const IntegrateArgs& a, std::ostream& out) {
  ChainParams params;
  params.lambda = parse_rational(a.lambda);
  params.c0 = parse_rational(a.c0);
  params.eps = split_rationals(a.eps, "--eps");
  params.n = static_cast<int>(params.eps.size());
  params.validate();
  std::vector<BigRat> init = split_rationals(a.initial, "--initial");
  if (static_cast<int>(init.size()) != params.n) {
    throw ValidationError("--initial must list exactly n = " +
                          std::to_string(params.n) + " values");
  }
  std::vector<double> f0;
  f0.reserve(init.size());
  for (const auto& v : init) f0.push_back(rat_double(v));
  Grid grid(flag_double(a.x0), flag_double(a.x1), a.steps);
  SampledChain traj = rk4_integrate(params, f0, grid);

  if (a.format == "csv") {
    out << "x";
    for (int i = 0; i < params.n; ++i) out << ",f_" << i;
    out << "\n";
    for (std::size_t t = 0; t < traj.x.size(); ++t) {
      out << fmt17(traj.x[t]);
      for (int i = 0; i < params.n; ++i)
        out << ',' << fmt17(traj.f[static_cast<std::size_t>(i)][t]);
      out << "\n";
    }
  } else {
    Json obj = Json::object();
    obj["n"] = params.n;
    obj["lambda"] = rat_str(params.lambda);
    obj["c0"] = rat_str(params.c0);
    Json eps = Json::array();
    for (const auto& e : params.eps) eps.push_back(rat_str(e));
    obj["eps"] = eps;
    obj["x"] = traj.x;
    obj["f"] = traj.f;
    out << obj.dump(2) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------- painleve ----

struct PainleveArgs {
  bool four = false;
  bool five = false;
  std::string b0 = "0";
  std::string b1 = "0";
  std::string g;
  bool fit = false;
  std::string chain;
  std::string c1 = "0", c2 = "0", c3 = "0", c4 = "0";
  std::string w;
  std::string xmin;  // defaults depend on the variant
  std::string xmax;
  int points = 201;
};
// value semantics of --format differ per variant, so it is stored here too
struct PainleveFormat {
  std::string format = "csv";
};

int run_painleve(const PainleveArgs& a, const PainleveFormat& f, std::ostream& out) {
  if (a.four == a.five)
    throw ValidationError("pass exactly one of --four / --five");
  if (a.points < 3) throw ValidationError("--points must be >= 3");

  if (a.four) {
    const std::string xmin = a.xmin.empty() ? "-5" : a.xmin;
    const std::string xmax = a.xmax.empty() ? "5" : a.xmax;
    Grid grid(flag_double(xmin), flag_double(xmax), a.points - 1);

    if (a.fit) {
      if (a.chain.empty())
        throw ValidationError("--fit needs --chain with a period-3 solution");
      ChainSolution sol = load_chain(a.chain);
      P4Fit fit = painleve4_fit(sol, grid);
      if (f.format == "json") {
        Json obj = Json::object();
        obj["mode"] = "four";
        obj["fit"] = true;
        obj["b0"] = rat_str(fit.params.b0);
        obj["b1"] = rat_str(fit.params.b1);
        obj["exact_zero"] = fit.exact_zero;
        obj["max_residual"] = fit.max_residual;
        obj["g"] = fit.g.str();
        out << obj.dump(2) << "\n";
      } else {
        out << "b0,b1,exact_zero,max_residual\n";
        out << csv_quote(rat_str(fit.params.b0)) << ',' << csv_quote(rat_str(fit.params.b1))
            << ',' << (fit.exact_zero ? "true" : "false") << ',' << fmt17(fit.max_residual)
            << "\n";
      }
      return 0;
    }

    if (a.g.empty()) throw ValidationError("--four needs --g EXPR (or --fit)");
    RatFun g = parse_ratfun(a.g);
    P4Params params{parse_rational(a.b0), parse_rational(a.b1)};
    RatFun res = painleve4_residual(g, params);

    std::vector<std::pair<double, double>> values;
    int skipped = 0;
    double max_abs_res = 0.0;
    for (int i = 0; i < grid.points(); ++i) {
      const double x = grid.x(i);
      if (res.den().eval(BigRat(x)) == 0) {
        ++skipped;  // sample sits on a pole of the residual
        continue;
      }
      const double r = res.eval(x);
      max_abs_res = std::max(max_abs_res, std::fabs(r));
      values.emplace_back(x, r);
    }

    if (f.format == "json") {
      Json obj = Json::object();
      obj["mode"] = "four";
      obj["b0"] = rat_str(params.b0);
      obj["b1"] = rat_str(params.b1);
      obj["g"] = g.str();
      obj["residual"] = res.str();
      obj["exact_zero"] = res.is_zero();
      obj["max_abs_residual"] = max_abs_res;
      obj["skipped_points"] = skipped;
      Json vals = Json::array();
      for (const auto& [x, r] : values) vals.push_back(Json::array({x, r}));
      obj["values"] = vals;
      out << obj.dump(2) << "\n";
    } else {
      out << "x,residual\n";
      for (const auto& [x, r] : values) out << fmt17(x) << ',' << fmt17(r) << "\n";
    }
    return 0;
  }

  // --five
  if (a.w.empty()) throw ValidationError("--five needs --w EXPR");
  const std::string xmin = a.xmin.empty() ? "1/2" : a.xmin;
  const std::string xmax = a.xmax.empty() ? "5/2" : a.xmax;
  Grid grid(flag_double(xmin), flag_double(xmax), a.points - 1);
  RatFun w = parse_ratfun(a.w);
  P5Params params;
  params.c1 = flag_double(a.c1);
  params.c2 = flag_double(a.c2);
  params.c3 = flag_double(a.c3);
  params.c4 = flag_double(a.c4);
  std::vector<double> res = painleve5_residual(ratfun_curve(w), params, grid);
  double max_abs_res = 0.0;
  for (double r : res) max_abs_res = std::max(max_abs_res, std::fabs(r));

  if (f.format == "json") {
    Json obj = Json::object();
    obj["mode"] = "five";
    obj["c"] = Json::array({params.c1, params.c2, params.c3, params.c4});
    obj["w"] = w.str();
    obj["max_abs_residual"] = max_abs_res;
    Json vals = Json::array();
    for (int i = 0; i < grid.points(); ++i)
      vals.push_back(Json::array({grid.x(i), res[static_cast<std::size_t>(i)]}));
    obj["values"] = vals;
    out << obj.dump(2) << "\n";
  } else {
    out << "z,residual\n";
    for (int i = 0; i < grid.points(); ++i)
      out << fmt17(grid.x(i)) << ',' << fmt17(res[static_cast<std::size_t>(i)]) << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for cyclic dressing chains, their Weyl-group "
               "symmetries, oscillator partner potentials and Painleve residuals"};
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"json", "csv"});

  SeedArgs seed_args;
  CLI::App* seed_cmd = app.add_subcommand("seed", "emit the symmetric seed solution");
  seed_cmd->add_option("--n", seed_args.n, "chain period (number of functions)")
      ->required()
      ->check(CLI::PositiveNumber);
  seed_cmd->add_option("--lambda", seed_args.lambda, "shift parameter, exact rational")
      ->required();
  seed_cmd->add_option("--c0", seed_args.c0, "integration constant, exact rational");
  seed_cmd->add_option("--format", seed_args.format, "json|csv")->check(format_check);

  OrbitArgs orbit_args;
  CLI::App* orbit_cmd =
      app.add_subcommand("orbit", "closure of the seed under the symmetry generators");
  orbit_cmd->add_option("--m", orbit_args.m, "symmetry index; the chain period is m+1")
      ->required()
      ->check(CLI::PositiveNumber);
  orbit_cmd->add_option("--lambda", orbit_args.lambda, "shift parameter, exact rational")
      ->required();
  orbit_cmd->add_option("--c0", orbit_args.c0, "integration constant, exact rational");
  orbit_cmd->add_option("--depth", orbit_args.depth, "maximum word length")
      ->check(CLI::NonNegativeNumber);
  orbit_cmd->add_flag("--edges", orbit_args.edges,
                      "emit the member->generator->member adjacency list instead");
  orbit_cmd->add_option("--format", orbit_args.format, "json (one record per line)|csv")
      ->check(format_check);

  ResidualArgs residual_args;
  CLI::App* residual_cmd =
      app.add_subcommand("residual", "exact chain residuals of a solution file");
  residual_cmd->add_option("--chain", residual_args.chain, "chain JSON file, or - for stdin")
      ->required();
  residual_cmd->add_option("--format", residual_args.format, "json|csv")
      ->check(format_check);

  RelationsArgs relations_args;
  CLI::App* relations_cmd =
      app.add_subcommand("relations", "verify the defining group relations exactly");
  relations_cmd->add_option("--m", relations_args.m, "symmetry index")
      ->required()
      ->check(CLI::PositiveNumber);
  relations_cmd->add_option("--trials", relations_args.trials, "random parameter vectors")
      ->check(CLI::PositiveNumber);
  relations_cmd->add_option("--rng-seed", relations_args.rng_seed, "random seed");
  relations_cmd->add_option("--format", relations_args.format, "json|csv")
      ->check(format_check);

  PotentialArgs potential_args;
  CLI::App* potential_cmd =
      app.add_subcommand("potential", "Schroedinger potential carried by one chain link");
  potential_cmd->add_option("--chain", potential_args.chain, "chain JSON file, or -")
      ->required();
  potential_cmd->add_option("--index", potential_args.index, "which link (0-based)")
      ->check(CLI::NonNegativeNumber);
  potential_cmd->add_option("--form", potential_args.form, "factorized|plain")
      ->check(CLI::IsMember({"factorized", "plain"}));
  potential_cmd->add_option("--format", potential_args.format, "json|csv")
      ->check(format_check);

  SusyArgs susy_args;
  CLI::App* susy_cmd = app.add_subcommand(
      "susy", "partner potential, transformed states, ladder data");
  susy_cmd->add_option("--seed", susy_args.seeds,
                       "factorization seed \"eps\" or \"eps,nu\" (exact rationals); repeatable");
  susy_cmd->add_option("--hermite", susy_args.hermite,
                       "bound-state seed by level n (eps = n + 1/2); repeatable");
  susy_cmd->add_option("--states", susy_args.states, "emit phi_0..phi_{S-1}");
  susy_cmd->add_option("--xmin", susy_args.xmin, "grid start");
  susy_cmd->add_option("--xmax", susy_args.xmax, "grid end");
  susy_cmd->add_option("--points", susy_args.points, "grid sample count");
  susy_cmd->add_option("--format", susy_args.format,
                       "csv (x, V1, phi_n table) | json (nonsingularity/ladder report)")
      ->check(format_check);

  IntegrateArgs integrate_args;
  CLI::App* integrate_cmd =
      app.add_subcommand("integrate", "RK4 forward integration of an odd-period chain");
  integrate_cmd->add_option("--lambda", integrate_args.lambda, "shift parameter")
      ->required();
  integrate_cmd->add_option("--c0", integrate_args.c0, "integration constant");
  integrate_cmd->add_option("--eps", integrate_args.eps,
                            "comma-separated factorization energies, exact rationals")
      ->required();
  integrate_cmd
      ->add_option("--initial", integrate_args.initial, "comma-separated f_i(x0) values")
      ->required();
  integrate_cmd->add_option("--x0", integrate_args.x0, "range start")->required();
  integrate_cmd->add_option("--x1", integrate_args.x1, "range end")->required();
  integrate_cmd->add_option("--steps", integrate_args.steps, "RK4 step count")
      ->check(CLI::Range(2, 100000000));
  integrate_cmd->add_option("--format", integrate_args.format, "csv|json")
      ->check(format_check);

  PainleveArgs painleve_args;
  PainleveFormat painleve_format;
  CLI::App* painleve_cmd =
      app.add_subcommand("painleve", "fourth/fifth Painleve residual checks");
  painleve_cmd->add_flag("--four", painleve_args.four, "fourth equation (symbolic)");
  painleve_cmd->add_flag("--five", painleve_args.five, "fifth equation (pointwise)");
  painleve_cmd->add_option("--b0", painleve_args.b0, "fourth-eq parameter, exact rational");
  painleve_cmd->add_option("--b1", painleve_args.b1, "fourth-eq parameter, exact rational");
  painleve_cmd->add_option("--g", painleve_args.g, "candidate solution g(x)");
  painleve_cmd->add_flag("--fit", painleve_args.fit,
                         "solve for (b0,b1) from a period-3 chain solution");
  painleve_cmd->add_option("--chain", painleve_args.chain, "chain JSON file for --fit");
  painleve_cmd->add_option("--c1", painleve_args.c1, "fifth-eq parameter");
  painleve_cmd->add_option("--c2", painleve_args.c2, "fifth-eq parameter");
  painleve_cmd->add_option("--c3", painleve_args.c3, "fifth-eq parameter");
  painleve_cmd->add_option("--c4", painleve_args.c4, "fifth-eq parameter");
  painleve_cmd->add_option("--w", painleve_args.w, "candidate solution w(z)");
  painleve_cmd->add_option("--xmin", painleve_args.xmin,
                           "grid start (default -5 for --four, 1/2 for --five)");
  painleve_cmd->add_option("--xmax", painleve_args.xmax,
                           "grid end (default 5 for --four, 5/2 for --five)");
  painleve_cmd->add_option("--points", painleve_args.points, "grid sample count");
  painleve_cmd->add_option("--format", painleve_format.format, "csv|json")
      ->check(format_check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, err, err);
    return 2;
  }

  try {
    if (seed_cmd->parsed()) return run_seed(seed_args, out);
    if (orbit_cmd->parsed()) return run_orbit(orbit_args, out, err);
    if (residual_cmd->parsed()) return run_residual(residual_args, out);
    if (relations_cmd->parsed()) return run_relations(relations_args, out);
    if (potential_cmd->parsed()) return run_potential(potential_args, out);
    if (susy_cmd->parsed()) return run_susy(susy_args, out);
    if (integrate_cmd->parsed()) return run_integrate(integrate_args, out);
    if (painleve_cmd->parsed()) return run_painleve(painleve_args, painleve_format, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << error_json(e).dump(2) << "\n";
    return 1;
  } catch (const Json::parse_error& e) {
    err << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json obj = Json::object();
    Json detail = Json::object();
    detail["type"] = "internal";
    detail["message"] = e.what();
    obj["error"] = detail;
    out << obj.dump(2) << "\n";
    return 1;
  }
}

}  // namespace pha::cli
