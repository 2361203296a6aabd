#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polar/polynomial.hpp"

namespace polar {

// Parses the polynomial grammar
//   poly   := ["-"] term { ("+"|"-") term }
//   term   := integer [ "*" factor { "*" factor } ] | factor { "*" factor }
//   factor := "x" index [ "^" natural ]
// Whitespace is ignored. Integer literals of any length are reduced mod q.
// Errors carry the 1-based column inside `text` and the given line number.
Polynomial parse_polynomial(std::string_view text, int nvars, PrimeField field,
                            std::size_t line = 1);

// One polynomial per line; '#' starts a comment. The first non-comment line may
// be "vars: n"; otherwise n is the largest variable index used (at least 1).
struct PolynomialSystem {
  int nvars = 0;
  std::vector<Polynomial> polys;
};

PolynomialSystem parse_system(std::string_view text, PrimeField field);

// Comma separated integers, e.g. "1,0,-2".
Point parse_point(std::string_view text, PrimeField field);

}  // namespace polar
