#ifndef HECKE_SPSERIES_HPP
#define HECKE_SPSERIES_HPP

#include <string>
#include <vector>

#include "hecke/glhecke.hpp"

namespace hecke::sp {

/// Identifies one of the n+1 basis operators: index 0 is T(p), indices
/// 1..n-1 are T_i(p^2), index n is the scalar operator [p] = T_n(p^2).
struct GeneratorId {
    int index = 0;
    std::string name(int n) const;
};

struct GeneratorImage {
    GeneratorId id;
    int x0_degree = 2;  // 1 for T(p), 2 for the others
    SymPoly image;
};

/// Truncated power series in X whose X^k coefficient is a SymPoly carrying
/// an implicit factor x0^k (x0 is never stored; its degree equals the
/// X-degree in every series the pipeline manipulates).
class SymSeries {
  public:
    SymSeries(int n, int bound);

    int vars() const { return n_; }
    int bound() const { return static_cast<int>(coef_.size()) - 1; }
    SymPoly& at(int k);
    const SymPoly& at(int k) const;

    bool operator==(const SymSeries& o) const { return n_ == o.n_ && coef_ == o.coef_; }

    // one canonical line per X-degree
    std::string serialize() const;

  private:
    int n_;
    std::vector<SymPoly> coef_;
};

// Images of the n+1 basis operators under the spherical map.
std::vector<GeneratorImage> generator_images(int n, gl::OmegaTable& table);

// The primitive-coset sum S(X): coefficient at X^k collects all primitive
// tuples with d_n = k, weighted by p^{sum (n+1-j) d_j, j >= 2}.
SymSeries numerator_sum(int n, int bound, gl::OmegaTable& table, int jobs = 1);

// Product of (1 - x0 x_S X) over all 2^n subsets S; an exact polynomial of
// degree 2^n.  pre: bound >= 2^n.
SymSeries f_image(int n, int bound);

// Image of the numerator: numerator_sum times the 2^n - 2 subset factors
// with S not in {empty, full}, truncated at degree 2^n - 2.
SymSeries e_image(int n, gl::OmegaTable& table, int jobs = 1);

// X^k coefficient of the generating series, summed directly over all
// tuples 0 <= d_1 <= ... <= d_n <= k.
SymPoly d_coefficient_direct(int n, int k, gl::OmegaTable& table);

// Truncated convolution; both series over the same variable count.
SymSeries series_mul(const SymSeries& a, const SymSeries& b, int bound);

// Multiplicative inverse of a series with constant term 1.
SymSeries series_inverse(const SymSeries& f, int bound);

}  // namespace hecke::sp

#endif
