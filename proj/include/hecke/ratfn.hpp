#ifndef HECKE_RATFN_HPP
#define HECKE_RATFN_HPP

#include <optional>
#include <string>
#include <vector>

#include "hecke/laurent.hpp"

namespace hecke {

/// Dense integer polynomial in p.  Support type for RatFnP reduction; the
/// invariant is a trimmed coefficient vector (no leading zeros, empty = 0).
class PolyZ {
  public:
    PolyZ() = default;
    explicit PolyZ(long c);
    explicit PolyZ(const Int& c);
    explicit PolyZ(std::vector<Int> coeffs);  // coeffs[i] multiplies p^i

    static PolyZ one() { return PolyZ(1); }
    static PolyZ p_pow(int e);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    const Int& coeff(std::size_t i) const;
    const Int& lead() const;
    const std::vector<Int>& coeffs() const { return c_; }

    PolyZ operator-() const;
    friend PolyZ operator+(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator-(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
    bool operator==(const PolyZ& o) const { return c_ == o.c_; }

    PolyZ mul_int(const Int& k) const;
    PolyZ divexact_int(const Int& k) const;
    // Exact polynomial division; throws InexactDivision on remainder.
    PolyZ divexact(const PolyZ& d) const;

    Int content() const;          // gcd of coefficients, sign of the lead
    PolyZ primitive_part() const;

    // gcd normalized to positive leading coefficient (primitive PRS).
    static PolyZ gcd(PolyZ a, PolyZ b);

    LaurentP to_laurent() const;
    static PolyZ from_laurent_shifted(const LaurentP& l, int* shift_out);

  private:
    void trim();
    std::vector<Int> c_;
};

/// Reduced quotient of two integer polynomials in p: gcd(num, den) = 1
/// (including integer content) and the denominator has positive leading
/// coefficient.  The field of coefficients for undetermined-coefficient
/// solving.
class RatFnP {
  public:
    RatFnP() : num_(), den_(PolyZ::one()) {}
    RatFnP(PolyZ num, PolyZ den);
    explicit RatFnP(long c) : num_(c), den_(PolyZ::one()) {}

    static RatFnP zero() { return RatFnP(); }
    static RatFnP one() { return RatFnP(1); }
    static RatFnP p() { return RatFnP(PolyZ::p_pow(1), PolyZ::one()); }
    static RatFnP from_laurent(const LaurentP& l);

    const PolyZ& num() const { return num_; }
    const PolyZ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    // denominator is a pure power of p (possibly 1): convertible to LaurentP
    bool is_laurent() const;
    // denominator is exactly 1
    bool is_polynomial() const { return den_.degree() == 0 && den_.lead() == 1; }

    LaurentP to_laurent() const;  // requires is_laurent()

    RatFnP operator-() const;
    friend RatFnP operator+(const RatFnP& a, const RatFnP& b);
    friend RatFnP operator-(const RatFnP& a, const RatFnP& b);
    friend RatFnP operator*(const RatFnP& a, const RatFnP& b);
    friend RatFnP operator/(const RatFnP& a, const RatFnP& b);
    RatFnP& operator+=(const RatFnP& o) { return *this = *this + o; }
    RatFnP& operator-=(const RatFnP& o) { return *this = *this - o; }
    RatFnP& operator*=(const RatFnP& o) { return *this = *this * o; }
    bool operator==(const RatFnP& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFnP pow(unsigned k) const;

    std::string str() const;

  private:
    void reduce();
    PolyZ num_, den_;
};

}  // namespace hecke

#endif
