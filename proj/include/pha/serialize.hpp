#pragma once

// JSON (de)serialization for chain solutions and group orbits.
//
// Rationals are stored as exact "p/q" strings (or "p" when q == 1) so that a
// round trip through JSON is bit-exact.  Polynomials are stored as coefficient
// arrays, lowest degree first; a rational function is an object with
// "num_coeffs" and "den_coeffs".

#include <string>

#include "json.hpp"
#include "pha/chain.hpp"
#include "pha/weyl.hpp"

namespace pha {

using Json = nlohmann::json;

Json rat_to_json(const BigRat& r);
BigRat rat_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json ratfun_to_json(const RatFun& f);
RatFun ratfun_from_json(const Json& j);

// Full chain document:
// { "n": 3, "lambda": "1", "c0": "0", "eps": ["0","-1/3","-2/3"],
//   "alpha": ["2/3","2/3","2/3"],
//   "f": [ {"num_coeffs": [...], "den_coeffs": [...]}, ... ] }
// "alpha" is redundant (derived from eps/lambda) but convenient for readers.
Json chain_to_json(const ChainSolution& sol);
ChainSolution chain_from_json(const Json& j);

// One orbit member as a single JSON object (one line of JSONL output):
// { "word": "s0 pi", "alpha": [...], "f": [...] }
Json orbit_member_to_json(const OrbitMember& member);

// { "from": 0, "gen": "s1", "to": 4 }
Json orbit_edge_to_json(const OrbitEdge& edge);

}  // namespace pha
