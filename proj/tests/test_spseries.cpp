#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/canonical.hpp"
#include "hecke/errors.hpp"
#include "hecke/exprdsl.hpp"
#include "hecke/spseries.hpp"

using namespace hecke;

#ifndef FIXTURES_DIR
#define FIXTURES_DIR "fixtures"
#endif

namespace {

SymPoly fixture_sym(const std::string& file, const std::string& name, int n) {
    const auto records = dsl::read_records(std::filesystem::path(FIXTURES_DIR) / "expr" / file);
    for (const auto& r : records)
        if (r.name == name) return dsl::parse_sym(r.expr, n);
    throw std::runtime_error("fixture record not found: " + name);
}

SymPoly sym(int n, std::initializer_list<int> l) {
    return SymPoly::term(n, Partition::of(l), LaurentP::one());
}

gl::OmegaTable& table4() {
    static gl::OmegaTable t(4);
    return t;
}

}  // namespace

TEST_CASE("generator images match the published displays, byte for byte") {
    const auto gens = sp::generator_images(4, table4());
    REQUIRE(gens.size() == 5);
    const char* names[] = {"OmegaT", "OmegaT1", "OmegaT2", "OmegaT3", "OmegaPb"};
    for (int i = 0; i < 5; ++i) {
        const SymPoly expect = fixture_sym("n4_images.txt", names[i], 4);
        CHECK(to_canonical(gens[static_cast<std::size_t>(i)].image) == to_canonical(expect));
    }
    CHECK(gens[0].x0_degree == 1);
    for (int i = 1; i < 5; ++i) CHECK(gens[static_cast<std::size_t>(i)].x0_degree == 2);
    CHECK(gens[0].id.name(4) == "T(p)");
    CHECK(gens[4].id.name(4) == "[p]");
}

TEST_CASE("scalar operator image at lower genus") {
    gl::OmegaTable t3(3);
    const auto gens = sp::generator_images(3, t3);
    CHECK(gens[3].image == sym(3, {1, 1, 1}).mul_scalar(LaurentP::p_pow(-6)));
}

TEST_CASE("numerator sum: first coefficients at genus 4") {
    sp::SymSeries s = sp::numerator_sum(4, 2, table4(), 1);
    CHECK(s.at(0) == SymPoly::one(4));
    SymPoly expect = sym(4, {1, 0, 0, 0});
    expect += sym(4, {1, 1, 0, 0});
    expect += sym(4, {1, 1, 1, 0});
    CHECK(s.at(1) == expect);
}

TEST_CASE("f_image shape and frozen coefficients") {
    const sp::SymSeries f = sp::f_image(4, 16);
    CHECK(f.at(0) == SymPoly::one(4));
    // -(1 + s1 + s2 + s3 + s4) at X^1
    SymPoly x1 = SymPoly::one(4) + sym(4, {1, 0, 0, 0}) + sym(4, {1, 1, 0, 0}) +
                 sym(4, {1, 1, 1, 0}) + sym(4, {1, 1, 1, 1});
    CHECK(f.at(1) == -x1);
    CHECK(f.at(16) == sym(4, {8, 8, 8, 8}));
    // palindromic pairing of subset monomials: coefficients pair k <-> 16-k
    // under part complement (checked here for one pair by inspection)
    CHECK(f.at(15) == -sym(4, {7, 7, 7, 7}) - sym(4, {8, 7, 7, 7}) - sym(4, {8, 8, 7, 7}) -
                          sym(4, {8, 8, 8, 7}) - sym(4, {8, 8, 8, 8}));
}

TEST_CASE("e_image at genus 2 equals the closed form 1 - p^2 Omega([p]) X^2") {
    gl::OmegaTable t2(2);
    const sp::SymSeries e = sp::e_image(2, t2, 1);
    CHECK(e.bound() == 2);
    CHECK(e.at(0) == SymPoly::one(2));
    CHECK(e.at(1).is_zero());
    CHECK(e.at(2) == sym(2, {1, 1}).mul_scalar(-LaurentP::p_pow(-1)));
}

TEST_CASE("e_image at genus 4 through degree 3 reproduces the printed e3 image") {
    // partial product: numerator sum times the 14 inner subset factors
    sp::SymSeries s = sp::numerator_sum(4, 3, table4(), 1);
    std::vector<MultiPoly> coef;
    for (int k = 0; k <= 3; ++k) coef.push_back(s.at(k).expand());
    for (unsigned mask = 1; mask + 1 < 16u; ++mask) {
        ExpVec mono{};
        for (int i = 0; i < 4; ++i)
            if (mask & (1u << i)) mono[static_cast<std::size_t>(i)] = 1;
        for (int k = 3; k >= 1; --k)
            coef[static_cast<std::size_t>(k)].add_scaled_shift(
                coef[static_cast<std::size_t>(k - 1)], mono, LaurentP(-1));
    }
    CHECK(sym_from_multi(coef[0]) == SymPoly::one(4));
    CHECK(sym_from_multi(coef[1]).is_zero());
    const SymPoly e3 = sym_from_multi(coef[3]);
    CHECK(to_canonical(e3) == to_canonical(fixture_sym("n4_e3_image.txt", "We3", 4)));
}

TEST_CASE("d_coefficient_direct") {
    CHECK(sp::d_coefficient_direct(4, 0, table4()) == SymPoly::one(4));
    // X^1: Omega(T(p)) with x0 stripped
    SymPoly expect = SymPoly::one(4) + sym(4, {1, 0, 0, 0}) + sym(4, {1, 1, 0, 0}) +
                     sym(4, {1, 1, 1, 0}) + sym(4, {1, 1, 1, 1});
    CHECK(sp::d_coefficient_direct(4, 1, table4()) == expect);
}

TEST_CASE("series quotient and geometric split agree with the direct sum") {
    for (int n : {1, 2, 3}) {
        gl::OmegaTable t(n);
        const int bound = 3;
        const sp::SymSeries e = sp::e_image(n, t, 1);
        sp::SymSeries f = sp::f_image(n, std::max(bound, 1 << n));
        const sp::SymSeries quotient = sp::series_mul(e, sp::series_inverse(f, bound), bound);
        sp::SymSeries s = sp::numerator_sum(n, bound, t, 1);
        sp::SymSeries ones(n, bound), geom(n, bound);
        for (int k = 0; k <= bound; ++k) {
            ones.at(k) = SymPoly::one(n);
            ExpVec all{};
            for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = static_cast<int16_t>(k);
            geom.at(k) = SymPoly::term(n, Partition::sorted_from(all, n), LaurentP::one());
        }
        const sp::SymSeries recon = sp::series_mul(sp::series_mul(s, ones, bound), geom, bound);
        for (int k = 0; k <= bound; ++k) {
            const SymPoly direct = sp::d_coefficient_direct(n, k, t);
            CHECK(direct == quotient.at(k));
            CHECK(direct == recon.at(k));
        }
    }
}

TEST_CASE("numerator sum is independent of the job count") {
    gl::OmegaTable a(3), b(3);
    const sp::SymSeries s1 = sp::numerator_sum(3, 5, a, 1);
    const sp::SymSeries s2 = sp::numerator_sum(3, 5, b, 8);
    CHECK(s1 == s2);
    CHECK(s1.serialize() == s2.serialize());
}

TEST_CASE("series serialization is canonical") {
    gl::OmegaTable t2(2);
    const sp::SymSeries e = sp::e_image(2, t2, 1);
    const std::string text = e.serialize();
    CHECK(text.find("X^0: 0 0 -> [0; 1]") == 0);
    CHECK(text.find("X^1: 0") != std::string::npos);
}
