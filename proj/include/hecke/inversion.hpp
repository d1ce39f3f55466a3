#ifndef HECKE_INVERSION_HPP
#define HECKE_INVERSION_HPP

#include <map>

#include "hecke/spseries.hpp"

namespace hecke::inv {

/// Exponents of a product T(p)^a T_1(p^2)^{b_1} ... T_{n-1}(p^2)^{b_{n-1}}
/// [p]^e; the spherical image carries x0 to the degree a + 2(sum b_i + e).
struct GenMonomial {
    int a = 0;
    std::vector<int> b;  // length n-1
    int e = 0;

    static GenMonomial unit(int n);

    int x0_degree() const;
    int total_degree() const;
    std::vector<int> key() const;  // (a, b..., e)
    std::string str(int n) const;  // "1,0,0,1,0"
    std::string name(int n) const;  // "T(p)*T3(p^2)"

    bool operator==(const GenMonomial& o) const {
        return a == o.a && b == o.b && e == o.e;
    }
};

// canonical term order: higher total degree first, then lex descending
struct GenMonomialOrder {
    bool operator()(const GenMonomial& x, const GenMonomial& y) const;
};

/// Polynomial in the abstract generators with LaurentP coefficients.
class HeckePoly {
  public:
    using Map = std::map<GenMonomial, LaurentP, GenMonomialOrder>;

    explicit HeckePoly(int n = 0) : n_(n) {}

    static HeckePoly constant(int n, const LaurentP& c);
    static HeckePoly one(int n) { return constant(n, LaurentP::one()); }
    static HeckePoly generator(int n, int index);  // 0=T(p), 1..n-1=T_i, n=[p]

    int genus() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    void add_term(const GenMonomial& m, const LaurentP& c);

    HeckePoly operator-() const;
    HeckePoly& operator+=(const HeckePoly& o);
    HeckePoly& operator-=(const HeckePoly& o);
    friend HeckePoly operator+(HeckePoly a, const HeckePoly& b) { return a += b; }
    friend HeckePoly operator-(HeckePoly a, const HeckePoly& b) { return a -= b; }
    friend HeckePoly operator*(const HeckePoly& a, const HeckePoly& b);
    bool operator==(const HeckePoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const HeckePoly& o) const { return !(*this == o); }

    HeckePoly mul_scalar(const LaurentP& c) const;
    HeckePoly mul_scalar_power(int pb_exponent, const LaurentP& c) const;  // * c * [p]^j
    HeckePoly pow(unsigned k) const;

    std::string serialize() const;
    static HeckePoly from_serialized(std::string_view text);
    std::string str() const;

  private:
    int n_;
    Map terms_;
};

// All monomials with x0-degree k, in canonical order.
std::vector<GenMonomial> enumerate_monomials(int n, int k);

/// Memoized spherical images of generator monomials (products of the
/// generator images; an algebra homomorphism).
class ImageCache {
  public:
    explicit ImageCache(std::vector<sp::GeneratorImage> gens);

    int genus() const { return n_; }
    const SymPoly& image(const GenMonomial& m);
    // sum of coeff * image over the terms of h
    SymPoly image_of(const HeckePoly& h);

  private:
    int n_;
    std::vector<sp::GeneratorImage> gens_;
    std::map<std::vector<int>, SymPoly> memo_;
};

// Strip m factors of the scalar image (p^{-n(n+1)/2} x_1..x_n)^m from a
// target whose partitions all have parts >= m.
SymPoly divide_out_scalar(const SymPoly& target, int m);

// Fraction-free (Bareiss) elimination with back-substitution; requires
// rows >= cols, full column rank and a consistent system.
std::vector<RatFnP> solve_exact(std::vector<std::vector<RatFnP>> matrix,
                                std::vector<RatFnP> rhs);

// Solve target = sum K_j omega(monomial_j) over all monomials of x0-degree
// k; exact, unique, residual verified against every partition row.
HeckePoly invert_coefficient(const SymPoly& target, int k, ImageCache& cache);

// Same, after dividing out the maximal admissible scalar power (the
// degree-lowering route for high-degree numerator coefficients).
HeckePoly invert_via_divide_out(const SymPoly& target, int k, ImageCache& cache);

}  // namespace hecke::inv

#endif
