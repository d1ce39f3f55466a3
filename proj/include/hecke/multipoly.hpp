#ifndef HECKE_MULTIPOLY_HPP
#define HECKE_MULTIPOLY_HPP

#include <map>

#include "hecke/laurent.hpp"
#include "hecke/partition.hpp"

namespace hecke {

/// Multivariate polynomial in x_1..x_n (non-negative exponents) over
/// LaurentP.  Plain workhorse for intermediate, not-yet-symmetric values;
/// canonical form stores no zero coefficients.
class MultiPoly {
  public:
    using Map = std::map<ExpVec, LaurentP, GrlexDesc>;

    explicit MultiPoly(int n = 0) : n_(n) {}

    static MultiPoly constant(int n, const LaurentP& c);
    // single monomial c * x^e
    static MultiPoly monomial(int n, const ExpVec& e, const LaurentP& c);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    void add_term(const ExpVec& e, const LaurentP& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    // this * c * x^e, merged into *this
    void add_scaled_shift(const MultiPoly& src, const ExpVec& e, const LaurentP& c);

    // Exact division in the polynomial ring; throws InexactDivision when the
    // divisor does not divide (never truncates).
    MultiPoly divexact(const MultiPoly& den) const;

    bool is_homogeneous(int* degree_out = nullptr) const;

  private:
    int n_;
    Map terms_;
};

// pre: a.vars() == b.vars()
MultiPoly multi_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly multi_divexact(const MultiPoly& num, const MultiPoly& den);

}  // namespace hecke

#endif
