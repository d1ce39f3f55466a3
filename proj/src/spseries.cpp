#include "hecke/spseries.hpp"

#include <sstream>

#include "hecke/canonical.hpp"
#include "hecke/errors.hpp"

namespace hecke::sp {

std::string GeneratorId::name(int n) const {
    if (index == 0) return "T(p)";
    if (index == n) return "[p]";
    return "T" + std::to_string(index) + "(p^2)";
}

SymSeries::SymSeries(int n, int bound) : n_(n) {
    if (bound < 0) throw UsageError("series bound must be >= 0");
    coef_.assign(static_cast<std::size_t>(bound) + 1, SymPoly(n));
}

SymPoly& SymSeries::at(int k) {
    if (k < 0 || k > bound()) throw UsageError("series degree out of range");
    return coef_[static_cast<std::size_t>(k)];
}

const SymPoly& SymSeries::at(int k) const {
    if (k < 0 || k > bound()) throw UsageError("series degree out of range");
    return coef_[static_cast<std::size_t>(k)];
}

std::string SymSeries::serialize() const {
    std::ostringstream os;
    for (int k = 0; k <= bound(); ++k) os << series_line(k, at(k)) << '\n';
    return os.str();
}

std::vector<GeneratorImage> generator_images(int n, gl::OmegaTable& table) {
    if (n < 1 || n > kMaxVars) throw UsageError("genus out of range");
    std::vector<GeneratorImage> out;
    {
        // T(p): x0 * prod (1 + x_i), one orbit per subset size
        SymPoly img(n);
        for (int a = 0; a <= n; ++a) {
            Partition p;
            for (int i = 0; i < a; ++i) p.parts[static_cast<std::size_t>(i)] = 1;
            img.add_term(p, LaurentP::one());
        }
        out.push_back(GeneratorImage{GeneratorId{0}, 1, std::move(img)});
    }
    for (int i = 1; i <= n; ++i) {
        SymPoly img(n);
        for (int a = i; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b) {
                const LaurentP weight =
                    LaurentP::p_pow(b * (a + b + 1)) * gl::lp(a - i, a);
                img += table.get(gl::PiLabel::of(n, a, b).delta()).mul_scalar(weight);
            }
        out.push_back(GeneratorImage{GeneratorId{i}, 2, std::move(img)});
    }
    return out;
}

namespace {

int tail_weight(const gl::DeltaTuple& d) {
    int w = 0;
    for (int i = 1; i < d.n; ++i) w += (d.n - i) * d.deltas[static_cast<std::size_t>(i)];
    return w;
}

std::vector<std::vector<gl::DeltaTuple>> primitive_buckets(int n, int bound) {
    std::vector<std::vector<gl::DeltaTuple>> buckets(static_cast<std::size_t>(bound) + 1);
    for (auto& d : gl::enumerate_primitive(n, bound)) {
        const int k = d.deltas.back();
        buckets[static_cast<std::size_t>(k)].push_back(std::move(d));
    }
    return buckets;
}

// all subsets of {0..n-1} ordered by size then lexicographically
std::vector<ExpVec> subset_monomials(int n, bool skip_empty, bool skip_full) {
    std::vector<ExpVec> subsets;
    for (int size = 0; size <= n; ++size) {
        if (size == 0 && skip_empty) continue;
        if (size == n && skip_full) continue;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            ExpVec e{};
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) e[static_cast<std::size_t>(i)] = 1;
            subsets.push_back(e);
        }
    }
    return subsets;
}

// in-place multiplication of a coefficient list by (1 - x^mono X),
// truncating at the list length
void mul_linear_factor(std::vector<MultiPoly>& coef, const ExpVec& mono) {
    for (int k = static_cast<int>(coef.size()) - 1; k >= 1; --k)
        coef[static_cast<std::size_t>(k)].add_scaled_shift(
            coef[static_cast<std::size_t>(k - 1)], mono, LaurentP(-1));
}

}  // namespace

SymSeries numerator_sum(int n, int bound, gl::OmegaTable& table, int jobs) {
    if (bound < 0) throw UsageError("bound must be >= 0");
    table.build(bound, jobs);
    const auto buckets = primitive_buckets(n, bound);
    SymSeries s(n, bound);
    const int nt = jobs > 1 ? jobs : 1;
#ifdef HECKE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt) if (nt > 1)
#endif
    for (int k = 0; k <= bound; ++k) {
        SymPoly acc(n);
        for (const auto& d : buckets[static_cast<std::size_t>(k)])
            acc += table.get(d).mul_scalar(LaurentP::p_pow(tail_weight(d)));
        s.at(k) = std::move(acc);
    }
    if (!(s.at(0) == SymPoly::one(n))) throw Error("numerator sum must start at 1");
    return s;
}

SymSeries f_image(int n, int bound) {
    const int degree = 1 << n;
    if (bound < degree) throw UsageError("f_image needs bound >= 2^n");
    std::vector<MultiPoly> coef(static_cast<std::size_t>(degree) + 1, MultiPoly(n));
    coef[0] = MultiPoly::constant(n, LaurentP::one());
    for (const auto& mono : subset_monomials(n, false, false)) mul_linear_factor(coef, mono);
    SymSeries out(n, bound);
    for (int k = 0; k <= degree; ++k) out.at(k) = sym_from_multi(coef[static_cast<std::size_t>(k)]);
    return out;
}

SymSeries e_image(int n, gl::OmegaTable& table, int jobs) {
    const int bound = (1 << n) - 2;
    const SymSeries s = numerator_sum(n, bound, table, jobs);
    std::vector<MultiPoly> coef;
    coef.reserve(static_cast<std::size_t>(bound) + 1);
    for (int k = 0; k <= bound; ++k) coef.push_back(s.at(k).expand());
    for (const auto& mono : subset_monomials(n, true, true)) mul_linear_factor(coef, mono);
    SymSeries out(n, bound);
    for (int k = 0; k <= bound; ++k) out.at(k) = sym_from_multi(coef[static_cast<std::size_t>(k)]);
    if (!(out.at(0) == SymPoly::one(n))) throw Error("e_image coefficient 0 must be 1");
    if (bound >= 1 && !out.at(1).is_zero()) throw Error("e_image coefficient 1 must vanish");
    return out;
}

SymPoly d_coefficient_direct(int n, int k, gl::OmegaTable& table) {
    if (k < 0) throw UsageError("degree must be >= 0");
    SymPoly acc(n);
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (;;) {
        const auto t = gl::DeltaTuple::of(n, d);
        int w = 0;
        for (int i = 0; i < n; ++i) w += (n - i) * d[static_cast<std::size_t>(i)];
        acc += table.get(t).mul_scalar(LaurentP::p_pow(w));
        int i = n - 1;
        while (i >= 0 && d[static_cast<std::size_t>(i)] == k) --i;
        if (i < 0) break;
        const int v = ++d[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) d[static_cast<std::size_t>(j)] = v;
    }
    return acc;
}

SymSeries series_mul(const SymSeries& a, const SymSeries& b, int bound) {
    if (a.vars() != b.vars()) throw UsageError("variable count mismatch");
    SymSeries r(a.vars(), bound);
    for (int k = 0; k <= bound; ++k) {
        SymPoly acc(a.vars());
        for (int j = 0; j <= k; ++j) {
            if (j > a.bound() || k - j > b.bound()) continue;
            if (a.at(j).is_zero() || b.at(k - j).is_zero()) continue;
            acc += sym_mul(a.at(j), b.at(k - j));
        }
        r.at(k) = std::move(acc);
    }
    return r;
}

SymSeries series_inverse(const SymSeries& f, int bound) {
    if (!(f.at(0) == SymPoly::one(f.vars())))
        throw UsageError("series inverse needs constant term 1");
    SymSeries g(f.vars(), bound);
    g.at(0) = SymPoly::one(f.vars());
    for (int k = 1; k <= bound; ++k) {
        SymPoly acc(f.vars());
        for (int j = 1; j <= k; ++j) {
            if (j > f.bound() || f.at(j).is_zero()) continue;
            acc += sym_mul(f.at(j), g.at(k - j));
        }
        g.at(k) = -acc;
    }
    return g;
}

}  // namespace hecke::sp
