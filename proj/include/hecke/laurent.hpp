#ifndef HECKE_LAURENT_HPP
#define HECKE_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>

namespace hecke {

using Int = mpz_class;

/// Laurent polynomial in the single variable p with arbitrary-precision
/// integer coefficients.  The canonical form stores no zero coefficient, so
/// value equality coincides with representation equality.
class LaurentP {
  public:
    LaurentP() = default;
    explicit LaurentP(long c) { add_term(0, Int(c)); }
    explicit LaurentP(const Int& c) { add_term(0, c); }

    static LaurentP zero() { return LaurentP(); }
    static LaurentP one() { return LaurentP(1); }
    // c * p^e
    static LaurentP term(const Int& c, int e) {
        LaurentP r;
        r.add_term(e, c);
        return r;
    }
    static LaurentP p_pow(int e) { return term(Int(1), e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // true when the value is a single term c*p^e
    bool is_monomial() const { return terms_.size() == 1; }
    // true when no negative power of p occurs (an ordinary polynomial)
    bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero
    const Int& coeff(int e) const;  // zero if absent (returns shared zero)
    std::size_t term_count() const { return terms_.size(); }

    void add_term(int e, const Int& c);

    LaurentP operator-() const;
    LaurentP& operator+=(const LaurentP& o);
    LaurentP& operator-=(const LaurentP& o);
    friend LaurentP operator+(LaurentP a, const LaurentP& b) { return a += b; }
    friend LaurentP operator-(LaurentP a, const LaurentP& b) { return a -= b; }
    friend LaurentP operator*(const LaurentP& a, const LaurentP& b);
    LaurentP& operator*=(const LaurentP& o) { return *this = *this * o; }

    bool operator==(const LaurentP& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentP& o) const { return !(*this == o); }
    // total order compatible with canonical serialization (used for sorting)
    bool operator<(const LaurentP& o) const { return terms_ < o.terms_; }

    LaurentP mul_p_pow(int e) const;  // multiply by p^e
    LaurentP pow(unsigned k) const;
    // substitute p -> 1/p
    LaurentP invert_p() const;

    // Exact division; throws InexactDivision when `d` does not divide.
    LaurentP divexact(const LaurentP& d) const;

    // Evaluate at integer p = x (requires is_polynomial()).
    Int eval_int(const Int& x) const;

    const std::map<int, Int>& terms() const { return terms_; }

    // Human form such as "p^-3", "2*p^4 - p + 1"; canonical text form lives
    // in canonical.hpp.
    std::string str() const;

  private:
    std::map<int, Int> terms_;  // exponent -> nonzero coefficient
};

}  // namespace hecke

#endif
