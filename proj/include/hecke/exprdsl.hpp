#ifndef HECKE_EXPRDSL_HPP
#define HECKE_EXPRDSL_HPP

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/inversion.hpp"

namespace hecke::dsl {

// Tiny arithmetic expression language used to transcribe the published
// displays into fixtures:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := uint | ident | 'sym[i,j,...]' | '(' expr ')' | '-' factor
//
// Atoms in the Hecke domain: p, T, T1..T{n-1}, Pb (the scalar operator).
// Atoms in the symmetric domain: p, sym[...].

inv::HeckePoly parse_hecke(std::string_view text, int n);
SymPoly parse_sym(std::string_view text, int n);

/// One record of a fixture file: "<name> = <expression>" lines with '#'
/// comments.  Records keep file order.
struct Record {
    std::string name;
    std::string expr;
};

std::vector<Record> read_records(const std::filesystem::path& file);

/// Transcribed generating-series coefficients for one genus.  The flag says
/// whether the value was transcribed from a printed display (true) or
/// reconstructed by the denominator mirror rule (false).
struct TheoremFixture {
    int n = 0;
    std::vector<std::pair<inv::HeckePoly, bool>> E, F;
};

// Reads an "n = ..", "E<k> = ..", "F<k> = .." record file; absent E degrees
// become zero, absent F degrees above 2^{n-1} follow the mirror rule.
TheoremFixture load_theorem_fixture(const std::filesystem::path& file);

}  // namespace hecke::dsl

#endif
