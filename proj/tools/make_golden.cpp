// Regenerates the canonical golden fixture files from the transcription
// records under fixtures/expr/.  The committed outputs are checked against
// a regeneration in the test suite.

#include <fstream>
#include <iostream>

#include "hecke/exprdsl.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_golden <fixtures-dir>\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    for (int n = 1; n <= 4; ++n) {
        const auto fx =
            dsl::load_theorem_fixture(dir / "expr" / ("n" + std::to_string(n) + "_theorem.txt"));
        for (char side : {'E', 'F'}) {
            ver::GoldenSide g;
            g.side = side;
            g.n = n;
            for (const auto& [h, printed] : (side == 'E' ? fx.E : fx.F))
                g.coefficients.emplace_back(
                    h, printed ? ver::Provenance::printed : ver::Provenance::derived);
            const auto file =
                dir / "golden" / ("n" + std::to_string(n) + "_" + side + ".txt");
            std::ofstream out(file, std::ios::binary);
            out << ver::save_golden(g);
            std::cout << file.string() << "\n";
        }
    }
    return 0;
}
