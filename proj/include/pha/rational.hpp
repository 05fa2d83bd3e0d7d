#pragma once

#include <gmpxx.h>

#include <string>

namespace pha {

// Arbitrary-precision rational.  mpq_class keeps the canonical form we rely
// on everywhere: gcd(num, den) = 1 and den > 0, provided values are built
// through arithmetic or parse_rational (which canonicalizes after parsing).
using BigRat = mpq_class;

// Accepts "p", "p/q" and plain decimals like "-3.25".  Throws ParseError on
// anything else, including q = 0.
BigRat parse_rational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const BigRat& r);

inline double rat_double(const BigRat& r) { return r.get_d(); }

}  // namespace pha
