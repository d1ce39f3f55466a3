#ifndef HECKE_CANONICAL_HPP
#define HECKE_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "hecke/sympoly.hpp"

namespace hecke {

// Canonical text forms.  These are the bit-exact interchange formats used by
// the disk cache, the golden fixtures and the result files:
//
//   p-poly   :=  [minexp; c0,c1,...]          dense from the lowest power
//   sym line :=  i1 i2 ... in -> p-poly       one term per line
//   sympoly  :=  "sympoly n=<n> terms=<k>" header followed by k term lines,
//                graded-lex descending
//
// Serializing then parsing is the identity on canonical values.

std::string to_canonical(const LaurentP& c);
LaurentP laurent_from_canonical(std::string_view text);

std::string to_canonical(const SymPoly& s);
SymPoly sympoly_from_canonical(std::string_view text);

// One-line rendering of a series coefficient: "X^3: <term> ; <term> ; ..."
// (or "X^3: 0").
std::string series_line(int degree, const SymPoly& coeff);

// Human-facing form: a common power of p pulled out in front, e.g.
// "p^-3 * sym[1,1,0,0]" or "p^-9 * (p * sym[3,1,1,0] + ...)"; "1" and "0"
// for the constants.
std::string pretty(const SymPoly& s);

std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

}  // namespace hecke

#endif
