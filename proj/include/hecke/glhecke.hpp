#ifndef HECKE_GLHECKE_HPP
#define HECKE_GLHECKE_HPP

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "hecke/ratfn.hpp"
#include "hecke/sympoly.hpp"

namespace hecke::gl {

/// Diagonal double coset t(p^{d1},...,p^{dn}) with non-decreasing exponents.
/// Primitive means d1 = 0.
struct DeltaTuple {
    int n = 0;
    std::vector<int> deltas;

    static DeltaTuple of(int n, std::vector<int> deltas);

    bool primitive() const { return deltas.empty() || deltas.front() == 0; }
    int sum() const;
    // run lengths of equal values, in order
    std::vector<int> multiplicities() const;
    std::string str() const;

    bool operator<(const DeltaTuple& o) const {
        return std::tie(n, deltas) < std::tie(o.n, o.deltas);
    }
    bool operator==(const DeltaTuple& o) const { return n == o.n && deltas == o.deltas; }
};

/// GL_n double coset diag(I_{n-a-b}, p I_a, p^2 I_b).
struct PiLabel {
    int n = 0;
    int alpha = 0;
    int beta = 0;

    static PiLabel of(int n, int alpha, int beta);
    DeltaTuple delta() const;  // (0^{n-a-b}, 1^a, 2^b)
    bool operator==(const PiLabel& o) const {
        return n == o.n && alpha == o.alpha && beta == o.beta;
    }
};

// phi_i(x) = (x-1)(x^2-1)...(x^i-1), phi_0 = 1.
RatFnP phi(int i, const RatFnP& at);
LaurentP phi_p(int i);  // phi_i at x = p

/// Counts of a x a symmetric matrices over F_p by rank (index = rank).
using RankCounts = std::vector<Int>;

// Brute-force enumeration; refuses anything beyond p <= 5, a <= 4.
RankCounts lp_oracle(long p, int a);
RankCounts lp_oracle_serial(long p, int a);  // reference implementation

// Number of a x a symmetric rank-r matrices over F_p as a polynomial in p.
// The closed form is validated against lp_oracle for p in {2,3,5}, a <= 4
// once per process before any value is returned.
LaurentP lp(int r, int a);

// Spherical image of t(p^{(delta)}) as a symmetric polynomial in x_1..x_n
// with Laurent coefficients in p.
SymPoly omega_t(const DeltaTuple& d);
SymPoly omega_pi(const PiLabel& lbl);

// Known discrepancy between a published example table and the consistent
// normalization; non-empty only for the affected tuples.
std::optional<std::string> erratum_note(const DeltaTuple& d);

/// One summand of a pi_i * pi_j double-coset expansion.
struct PiTerm {
    LaurentP coeff;
    PiLabel label;
};

// Expansion of pi_i * pi_j over admissible (a, b); every coefficient is a
// polynomial in p.
std::vector<PiTerm> pi_product(int i, int j, int n);

// All primitive tuples with d_n <= max_last, ascending order.
std::vector<DeltaTuple> enumerate_primitive(int n, int max_last);

/// Memo table of primitive omega values with an optional disk cache
/// (one canonical-text file per tuple, checksum trailer).  Values are
/// immutable once stored; concurrent reads are safe after build().
class OmegaTable {
  public:
    explicit OmegaTable(int n, std::optional<std::filesystem::path> cache_dir = std::nullopt);

    int genus() const { return n_; }

    // Ensure every primitive tuple with d_n <= max_last is materialized.
    // jobs <= 1 runs the plain serial loop.
    void build(int max_last, int jobs);

    // omega of an arbitrary tuple (reduces to the primitive one).
    SymPoly get(const DeltaTuple& d);

    std::size_t size() const { return table_.size(); }
    std::size_t computed() const { return computed_; }
    std::size_t loaded() const { return loaded_; }

    static std::filesystem::path cache_file(const std::filesystem::path& dir,
                                            const DeltaTuple& d);

  private:
    std::optional<SymPoly> try_load(const DeltaTuple& d) const;
    void write_cache(const DeltaTuple& d, const SymPoly& v) const;
    SymPoly load_or_compute(const DeltaTuple& d);

    int n_;
    std::optional<std::filesystem::path> dir_;
    std::map<std::vector<int>, SymPoly> table_;
    std::size_t computed_ = 0;
    std::size_t loaded_ = 0;
    std::mutex mu_;
};

}  // namespace hecke::gl

#endif
