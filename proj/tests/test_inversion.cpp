#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/errors.hpp"
#include "hecke/exprdsl.hpp"
#include "hecke/inversion.hpp"

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

inv::GenMonomial mono(int n, int a, std::vector<int> b, int e) {
    inv::GenMonomial m = inv::GenMonomial::unit(n);
    m.a = a;
    m.b = std::move(b);
    m.e = e;
    return m;
}

inv::ImageCache& images4() {
    static gl::OmegaTable t(4);
    static inv::ImageCache cache(sp::generator_images(4, t));
    return cache;
}

SymPoly sym(int n, std::initializer_list<int> l) {
    return SymPoly::term(n, Partition::of(l), LaurentP::one());
}

}  // namespace

TEST_CASE("monomial enumeration") {
    CHECK(inv::enumerate_monomials(4, 0) == std::vector<inv::GenMonomial>{mono(4, 0, {0, 0, 0}, 0)});
    CHECK(inv::enumerate_monomials(4, 1) == std::vector<inv::GenMonomial>{mono(4, 1, {0, 0, 0}, 0)});
    // degree 3: T^3 plus T times each degree-2 generator
    const auto k3 = inv::enumerate_monomials(4, 3);
    REQUIRE(k3.size() == 5);
    CHECK(std::find(k3.begin(), k3.end(), mono(4, 3, {0, 0, 0}, 0)) != k3.end());
    CHECK(std::find(k3.begin(), k3.end(), mono(4, 1, {1, 0, 0}, 0)) != k3.end());
    CHECK(std::find(k3.begin(), k3.end(), mono(4, 1, {0, 1, 0}, 0)) != k3.end());
    CHECK(std::find(k3.begin(), k3.end(), mono(4, 1, {0, 0, 1}, 0)) != k3.end());
    CHECK(std::find(k3.begin(), k3.end(), mono(4, 1, {0, 0, 0}, 1)) != k3.end());
    for (const auto& m : k3) CHECK(m.x0_degree() == 3);
    // genus 1 has only T and [p]
    CHECK(inv::enumerate_monomials(1, 2).size() == 2);
}

TEST_CASE("monomial images") {
    CHECK(images4().image(mono(4, 0, {0, 0, 0}, 0)) == SymPoly::one(4));
    CHECK(images4().image(mono(4, 0, {0, 0, 0}, 2)) ==
          sym(4, {2, 2, 2, 2}).mul_scalar(LaurentP::p_pow(-20)));
    // T(p) * [p]
    SymPoly expect = sym(4, {2, 2, 2, 2}) + sym(4, {2, 2, 2, 1}) + sym(4, {2, 2, 1, 1}) +
                     sym(4, {2, 1, 1, 1}) + sym(4, {1, 1, 1, 1});
    CHECK(images4().image(mono(4, 1, {0, 0, 0}, 1)) ==
          expect.mul_scalar(LaurentP::p_pow(-10)));
}

TEST_CASE("divide_out_scalar") {
    CHECK(inv::divide_out_scalar(sym(4, {2, 2, 2, 2}), 1) ==
          sym(4, {1, 1, 1, 1}).mul_scalar(LaurentP::p_pow(10)));
    SymPoly s = sym(4, {1, 1, 1, 1}) + sym(4, {2, 1, 1, 1});
    CHECK(inv::divide_out_scalar(s, 1) ==
          (SymPoly::one(4) + sym(4, {1, 0, 0, 0})).mul_scalar(LaurentP::p_pow(10)));
    CHECK_THROWS_AS(inv::divide_out_scalar(sym(4, {1, 1, 1, 0}), 1), NotDivisible);
}

TEST_CASE("solve_exact") {
    using M = std::vector<std::vector<RatFnP>>;
    using V = std::vector<RatFnP>;
    {
        // identity system
        M a{{RatFnP::one(), RatFnP::zero()}, {RatFnP::zero(), RatFnP::one()}};
        V rhs{RatFnP::p(), RatFnP(7)};
        CHECK(inv::solve_exact(a, rhs) == rhs);
    }
    {
        // (p^2-1) K = (p-1)(p+1)^2  ->  K = p+1
        const RatFnP p = RatFnP::p(), one = RatFnP::one();
        M a{{p * p - one}};
        V rhs{(p - one) * (p + one) * (p + one)};
        const auto x = inv::solve_exact(a, rhs);
        CHECK(x[0] == p + one);
    }
    {
        // inconsistent overdetermined system
        M a{{RatFnP::one()}, {RatFnP::one()}};
        V rhs{RatFnP(1), RatFnP(2)};
        CHECK_THROWS_AS(inv::solve_exact(a, rhs), NotInImage);
    }
    {
        // dependent columns
        M a{{RatFnP(1), RatFnP(2)}, {RatFnP(2), RatFnP(4)}};
        V rhs{RatFnP(1), RatFnP(2)};
        CHECK_THROWS_AS(inv::solve_exact(a, rhs), LinearDependence);
    }
}

TEST_CASE("inversion of the printed degree-3 numerator coefficient") {
    const SymPoly target = fixture_sym("n4_e3_image.txt", "We3", 4);
    const inv::HeckePoly h = inv::invert_coefficient(target, 3, images4());

    // K(T*T3) = p^4(p+1); K(T*[p]) = p^4(p+1)(p^2+1)(p^3-p^2+1); rest zero,
    // including the extraneous T^3 the enumeration adds
    const LaurentP k3 = dsl::parse_hecke("p^4*(p+1)", 4).terms().begin()->second;
    const LaurentP k4 =
        dsl::parse_hecke("p^4*(p+1)*(p^2+1)*(p^3-p^2+1)", 4).terms().begin()->second;
    REQUIRE(h.term_count() == 2);
    CHECK(h.terms().at(mono(4, 1, {0, 0, 1}, 0)) == k3);
    CHECK(h.terms().at(mono(4, 1, {0, 0, 0}, 1)) == k4);
    CHECK(h == dsl::parse_hecke("p^4*(p+1)*((p^2+1)*(p^3-p^2+1)*Pb + T3)*T", 4));

    // and the solution solves the system exactly
    CHECK(images4().image_of(h) == target);
}

TEST_CASE("solve_exact on rows sampled from the degree-3 system") {
    const SymPoly target = fixture_sym("n4_e3_image.txt", "We3", 4);
    const auto monomials = inv::enumerate_monomials(4, 3);
    // restrict to the two monomials with nonzero coefficients and three rows
    const inv::GenMonomial m_t3 = mono(4, 1, {0, 0, 1}, 0);
    const inv::GenMonomial m_pb = mono(4, 1, {0, 0, 0}, 1);
    const std::vector<Partition> rows{Partition::of({2, 2, 2, 2}), Partition::of({3, 2, 2, 2}),
                                      Partition::of({1, 1, 1, 1})};
    std::vector<std::vector<RatFnP>> a;
    std::vector<RatFnP> rhs;
    for (const auto& row : rows) {
        a.push_back({RatFnP::from_laurent(images4().image(m_t3).coeff(row)),
                     RatFnP::from_laurent(images4().image(m_pb).coeff(row))});
        rhs.push_back(RatFnP::from_laurent(target.coeff(row)));
    }
    const auto x = inv::solve_exact(a, rhs);
    CHECK(x[0] == RatFnP::from_laurent(dsl::parse_hecke("p^4*(p+1)", 4).terms().begin()->second));
    CHECK(x[1] == RatFnP::from_laurent(
                      dsl::parse_hecke("p^4*(p+1)*(p^2+1)*(p^3-p^2+1)", 4).terms().begin()->second));
}

TEST_CASE("divide-out route equals the direct solve") {
    gl::OmegaTable t3(3);
    inv::ImageCache images(sp::generator_images(3, t3));
    const sp::SymSeries e = sp::e_image(3, t3, 1);
    for (int k = 4; k <= 6; ++k) {
        const inv::HeckePoly direct = inv::invert_coefficient(e.at(k), k, images);
        const inv::HeckePoly via = inv::invert_via_divide_out(e.at(k), k, images);
        CHECK(direct == via);
    }
}

TEST_CASE("inversion failure modes") {
    // a target outside the image span leaves a residual
    SymPoly bogus = sym(4, {4, 1, 0, 0});
    CHECK_THROWS_AS(inv::invert_coefficient(bogus, 4, images4()), NotInImage);
}

TEST_CASE("hecke polynomial serialization round trip") {
    const inv::HeckePoly h =
        dsl::parse_hecke("p^4*(p+1)*((p^2+1)*(p^3-p^2+1)*Pb + T3)*T - 3*T1^2", 4);
    CHECK(inv::HeckePoly::from_serialized(h.serialize()) == h);
    CHECK(inv::HeckePoly::from_serialized(inv::HeckePoly(1).serialize()) == inv::HeckePoly(1));
}

TEST_CASE("x0 grading of monomials") {
    for (int k = 0; k <= 8; ++k)
        for (const auto& m : inv::enumerate_monomials(4, k)) CHECK(m.x0_degree() == k);
    CHECK(mono(4, 1, {1, 0, 1}, 2).x0_degree() == 9);
    CHECK(mono(4, 1, {1, 0, 1}, 2).name(4) == "T(p)*T1(p^2)*T3(p^2)*[p]^2");
}
