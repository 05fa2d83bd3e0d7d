#include "pha/serialize.hpp"

#include <vector>

#include "pha/error.hpp"

namespace pha {

Json rat_to_json(const BigRat& r) { return rat_str(r); }

BigRat rat_from_json(const Json& j) {
  if (!j.is_string())
    throw ValidationError("expected a rational encoded as a string, got: " + j.dump());
  return parse_rational(j.get<std::string>());
}

Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (int d = 0; d <= p.degree(); ++d) arr.push_back(rat_to_json(p.coeff(d)));
  return arr;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array())
    throw ValidationError("expected a coefficient array, got: " + j.dump());
  std::vector<BigRat> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rat_from_json(c));
  return Poly::from_coeffs(coeffs);
}

Json ratfun_to_json(const RatFun& f) {
  Json obj = Json::object();
  obj["num_coeffs"] = poly_to_json(f.num());
  obj["den_coeffs"] = poly_to_json(f.den());
  return obj;
}

RatFun ratfun_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num_coeffs") || !j.contains("den_coeffs"))
    throw ValidationError(
        "expected an object with num_coeffs/den_coeffs, got: " + j.dump());
  return RatFun(poly_from_json(j["num_coeffs"]), poly_from_json(j["den_coeffs"]));
}

Json chain_to_json(const ChainSolution& sol) {
  Json obj = Json::object();
  obj["n"] = sol.params.n;
  obj["lambda"] = rat_to_json(sol.params.lambda);
  obj["c0"] = rat_to_json(sol.params.c0);
  Json eps = Json::array();
  for (const auto& e : sol.params.eps) eps.push_back(rat_to_json(e));
  obj["eps"] = eps;
  Json alpha = Json::array();
  for (const auto& a : alpha_from_eps(sol.params)) alpha.push_back(rat_to_json(a));
  obj["alpha"] = alpha;
  Json fs = Json::array();
  for (const auto& f : sol.f) fs.push_back(ratfun_to_json(f));
  obj["f"] = fs;
  return obj;
}

ChainSolution chain_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("expected a chain object, got: " + j.dump());
  for (const char* key : {"n", "lambda", "c0", "eps", "f"}) {
    if (!j.contains(key))
      throw ValidationError(std::string("chain object is missing \"") + key + "\"");
  }
  ChainParams params;
  if (!j["n"].is_number_integer())
    throw ValidationError("\"n\" must be an integer");
  params.n = j["n"].get<int>();
  params.lambda = rat_from_json(j["lambda"]);
  params.c0 = rat_from_json(j["c0"]);
  if (!j["eps"].is_array())
    throw ValidationError("\"eps\" must be an array of rationals");
  for (const auto& e : j["eps"]) params.eps.push_back(rat_from_json(e));
  params.validate();

  ChainSolution sol;
  sol.params = params;
  if (!j["f"].is_array())
    throw ValidationError("\"f\" must be an array of rational functions");
  for (const auto& f : j["f"]) sol.f.push_back(ratfun_from_json(f));
  sol.validate();
  return sol;
}

Json orbit_member_to_json(const OrbitMember& member) {
  Json obj = Json::object();
  obj["word"] = word_str(member.word);
  Json alpha = Json::array();
  for (const auto& a : alpha_from_eps(member.sol.params)) alpha.push_back(rat_to_json(a));
  obj["alpha"] = alpha;
  Json fs = Json::array();
  for (const auto& f : member.sol.f) fs.push_back(ratfun_to_json(f));
  obj["f"] = fs;
  return obj;
}

Json orbit_edge_to_json(const OrbitEdge& edge) {
  Json obj = Json::object();
  obj["from"] = edge.from;
  obj["gen"] = gen_str(edge.gen);
  obj["to"] = edge.to;
  return obj;
}

}  // namespace pha
