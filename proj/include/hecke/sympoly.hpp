#ifndef HECKE_SYMPOLY_HPP
#define HECKE_SYMPOLY_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hecke/multipoly.hpp"

namespace hecke {

/// Symmetric polynomial in x_1..x_n over LaurentP, stored in the
/// monomial-symmetric (partition) basis: term (lambda -> c) stands for
/// c * sym_lambda, the orbit sum with leading coefficient 1.
class SymPoly {
  public:
    using Map = std::map<Partition, LaurentP, PartitionGrlexDesc>;

    explicit SymPoly(int n = 0) : n_(n) {}

    static SymPoly constant(int n, const LaurentP& c);
    static SymPoly one(int n) { return constant(n, LaurentP::one()); }
    static SymPoly term(int n, const Partition& p, const LaurentP& c);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    const LaurentP& coeff(const Partition& p) const;  // zero if absent
    // largest partition in graded-lex order; requires nonzero
    const Partition& leading() const;

    void add_term(const Partition& p, const LaurentP& c);

    SymPoly operator-() const;
    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    bool operator==(const SymPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    SymPoly mul_scalar(const LaurentP& c) const;
    SymPoly pow(unsigned k) const;

    MultiPoly expand() const;

    bool is_homogeneous(int* degree_out = nullptr) const;

    // Exact evaluation at x_i := values[i].
    LaurentP substitute_all(std::span<const LaurentP> values) const;

    // The projection x_n := 0, dropping to n-1 variables: partitions whose
    // smallest part is positive vanish, the rest lose their trailing zero.
    SymPoly set_last_var_zero() const;

    // Add `delta` to every part of every partition (used by the scalar
    // divide-out and the series transforms); negative parts are rejected.
    SymPoly shift_all_parts(int delta) const;

    // p -> 1/p on every coefficient.
    SymPoly invert_p() const;

    std::string str() const;

  private:
    int n_;
    Map terms_;
};

// Product in the monomial basis.  pre: a.vars() == b.vars().
SymPoly sym_mul(const SymPoly& a, const SymPoly& b);

// Collect a permutation-invariant MultiPoly into the partition basis;
// throws SymmetryViolation when the input is not symmetric.
SymPoly sym_from_multi(const MultiPoly& m);

}  // namespace hecke

#endif
