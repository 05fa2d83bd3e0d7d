#pragma once

#include <string>

#include "pha/ratfun.hpp"

namespace pha {

// Parses expressions over {x, integer literals, + - * / ^, parentheses}
// into a reduced rational function.  Juxtaposition multiplies ("2x",
// "3(x+1)"), '^' takes a nonnegative integer exponent, and '/' is exact
// division, so "2/3" and "1/x" both work.  Throws ParseError on anything
// the grammar does not cover.
RatFun parse_ratfun(const std::string& text);

}  // namespace pha
