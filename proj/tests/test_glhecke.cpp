#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "hecke/canonical.hpp"
#include "hecke/errors.hpp"
#include "hecke/exprdsl.hpp"
#include "hecke/glhecke.hpp"

using namespace hecke;

#ifndef FIXTURES_DIR
#define FIXTURES_DIR "fixtures"
#endif

namespace {

gl::DeltaTuple dt(int n, std::vector<int> d) { return gl::DeltaTuple::of(n, std::move(d)); }

SymPoly fixture_sym(const std::string& file, const std::string& name, int n) {
    const auto records = dsl::read_records(std::filesystem::path(FIXTURES_DIR) / "expr" / file);
    for (const auto& r : records)
        if (r.name == name) return dsl::parse_sym(r.expr, n);
    throw std::runtime_error("fixture record not found: " + name);
}

}  // namespace

TEST_CASE("phi products") {
    CHECK(gl::phi(0, RatFnP::p()).is_one());
    CHECK(gl::phi_p(1) == LaurentP::p_pow(1) - LaurentP::one());
    CHECK(gl::phi(2, RatFnP(2)) == RatFnP(3));  // (2-1)(4-1)
    CHECK_THROWS_AS(gl::phi(-1, RatFnP::p()), UsageError);
}

TEST_CASE("rank-count oracle, frozen small cases") {
    using V = std::vector<Int>;
    CHECK(gl::lp_oracle(2, 1) == V{Int(1), Int(1)});
    CHECK(gl::lp_oracle(2, 2) == V{Int(1), Int(3), Int(4)});
    CHECK(gl::lp_oracle(3, 2) == V{Int(1), Int(8), Int(18)});
    CHECK_THROWS_AS(gl::lp_oracle(7, 2), BudgetExceeded);
    CHECK_THROWS_AS(gl::lp_oracle(4, 2), BudgetExceeded);
    // the parallel enumeration equals the serial reference
    for (long p : {2L, 3L})
        for (int a = 1; a <= 3; ++a) CHECK(gl::lp_oracle(p, a) == gl::lp_oracle_serial(p, a));
}

TEST_CASE("lp closed form") {
    CHECK(gl::lp(0, 0) == LaurentP::one());
    CHECK(gl::lp(0, 3) == LaurentP::one());
    CHECK(gl::lp(1, 1) == LaurentP::p_pow(1) - LaurentP::one());
    CHECK(gl::lp(1, 4) == LaurentP::p_pow(4) - LaurentP::one());
    CHECK_THROWS_AS(gl::lp(3, 2), UsageError);
    // completeness at the gate primes
    for (long p : {2L, 3L, 5L})
        for (int a = 1; a <= 4; ++a) {
            Int total = 1;
            for (int i = 0; i < a * (a + 1) / 2; ++i) total *= p;
            Int sum = 0;
            for (int r = 0; r <= a; ++r) sum += gl::lp(r, a).eval_int(Int(p));
            CHECK(sum == total);
        }
}

TEST_CASE("omega matches the published example table") {
    CHECK(gl::omega_t(dt(4, {0, 0, 0, 0})) == SymPoly::one(4));
    CHECK(gl::omega_t(dt(4, {0, 0, 0, 1})) ==
          fixture_sym("n4_omega_examples.txt", "W_0_0_0_1", 4));
    CHECK(gl::omega_t(dt(4, {0, 0, 1, 1})) ==
          fixture_sym("n4_omega_examples.txt", "W_0_0_1_1", 4));
    CHECK(gl::omega_t(dt(4, {0, 1, 1, 3})) ==
          fixture_sym("n4_omega_examples.txt", "W_0_1_1_3", 4));
}

TEST_CASE("erratum tuple: corrected value plus diagnostic") {
    const auto d = dt(4, {0, 1, 1, 1});
    CHECK(gl::omega_t(d) == fixture_sym("n4_omega_examples.txt", "W_0_1_1_1", 4));
    CHECK(gl::omega_t(d) !=
          fixture_sym("n4_omega_examples.txt", "W_0_1_1_1_printed", 4));
    const auto note = gl::erratum_note(d);
    REQUIRE(note.has_value());
    CHECK(note->find("p^-3") != std::string::npos);
    CHECK(note->find("p^-6") != std::string::npos);
    CHECK_FALSE(gl::erratum_note(dt(4, {0, 0, 1, 1})).has_value());
}

TEST_CASE("omega scalar-shift law") {
    for (const auto& tail : {std::vector<int>{0, 0, 0, 0}, {0, 0, 1, 2}, {0, 1, 1, 3}}) {
        const SymPoly base = gl::omega_t(dt(4, tail));
        for (int c = 1; c <= 2; ++c) {
            std::vector<int> shifted = tail;
            for (int& v : shifted) v += c;
            const SymPoly got = gl::omega_t(dt(4, shifted));
            const SymPoly expect =
                base.shift_all_parts(c).mul_scalar(LaurentP::p_pow(-10 * c));
            CHECK(got == expect);
        }
    }
}

TEST_CASE("omega output shape")
{
    const auto d = dt(4, {0, 2, 3, 5});
    const SymPoly v = gl::omega_t(d);
    int deg = 0;
    CHECK(v.is_homogeneous(&deg));
    CHECK(deg == 10);
    Partition lead = Partition::of({5, 3, 2, 0});
    CHECK(v.leading() == lead);
    CHECK(v.coeff(lead).is_monomial());
    // Q(x) accumulates n! = 24 permutation terms; the division collapses
    // them into a polynomial, so the value stays modest
    CHECK(v.term_count() <= 24);
}

TEST_CASE("pi products") {
    {
        const auto terms = gl::pi_product(1, 1, 1);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].coeff == LaurentP::one());
        CHECK(terms[0].label == gl::PiLabel::of(1, 0, 1));
    }
    {
        const auto terms = gl::pi_product(1, 1, 2);
        REQUIRE(terms.size() == 2);
        // (p+1) pi_{2,0} + pi_{0,1}
        CHECK(terms[0].label == gl::PiLabel::of(2, 0, 1));
        CHECK(terms[0].coeff == LaurentP::one());
        CHECK(terms[1].label == gl::PiLabel::of(2, 2, 0));
        CHECK(terms[1].coeff == LaurentP::p_pow(1) + LaurentP::one());
    }
    {
        // scalar coset absorbs: only (a,b) = (0,1) is admissible
        const auto terms = gl::pi_product(1, 4, 4);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].coeff == LaurentP::one());
        CHECK(terms[0].label == gl::PiLabel::of(4, 3, 1));
    }
    CHECK_THROWS_AS(gl::pi_product(0, 1, 4), UsageError);
}

TEST_CASE("omega is a homomorphism on pi products") {
    for (int n = 1; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const SymPoly lhs = sym_mul(gl::omega_pi(gl::PiLabel::of(n, i, 0)),
                                            gl::omega_pi(gl::PiLabel::of(n, j, 0)));
                SymPoly rhs(n);
                for (const auto& term : gl::pi_product(i, j, n))
                    rhs += gl::omega_pi(term.label).mul_scalar(term.coeff);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("primitive enumeration counts") {
    CHECK(gl::enumerate_primitive(4, 14).size() == 680);
    CHECK(gl::enumerate_primitive(4, 1).size() == 4);
    CHECK(gl::enumerate_primitive(1, 14).size() == 1);
    CHECK(gl::enumerate_primitive(3, 6).size() == 28);
}

TEST_CASE("omega table: build, cache round trip, corruption recovery") {
    const auto dir = std::filesystem::temp_directory_path() / "hecke-omega-test";
    std::filesystem::remove_all(dir);
    {
        gl::OmegaTable cold(4, dir);
        cold.build(2, 1);
        CHECK(cold.size() == gl::enumerate_primitive(4, 2).size());
        CHECK(cold.computed() == cold.size());
        CHECK(cold.loaded() == 0);
    }
    {
        gl::OmegaTable warm(4, dir);
        warm.build(2, 1);
        CHECK(warm.computed() == 0);
        CHECK(warm.loaded() == warm.size());
        // loaded values equal recomputed ones
        for (const auto& d : gl::enumerate_primitive(4, 2))
            CHECK(warm.get(d) == gl::omega_t(d));
    }
    {
        // corrupt one entry; the table must recompute it with a warning
        const auto file = gl::OmegaTable::cache_file(dir, dt(4, {0, 0, 1, 2}));
        std::ofstream(file) << "sympoly n=4 terms=0\nchecksum fnv1a64:0000000000000000\n";
        gl::OmegaTable fixed(4, dir);
        fixed.build(2, 1);
        CHECK(fixed.computed() == 1);
        CHECK(fixed.get(dt(4, {0, 0, 1, 2})) == gl::omega_t(dt(4, {0, 0, 1, 2})));
    }
    // non-primitive lookups reduce through the scalar-shift law
    gl::OmegaTable t(4, dir);
    CHECK(t.get(dt(4, {1, 1, 2, 3})) == gl::omega_t(dt(4, {1, 1, 2, 3})));
    std::filesystem::remove_all(dir);
}

TEST_CASE("parallel table build equals serial build") {
    gl::OmegaTable serial(3), parallel(3);
    serial.build(4, 1);
    parallel.build(4, 4);
    REQUIRE(serial.size() == parallel.size());
    for (const auto& d : gl::enumerate_primitive(3, 4))
        CHECK(serial.get(d) == parallel.get(d));
}
