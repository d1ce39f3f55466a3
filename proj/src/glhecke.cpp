#include "hecke/glhecke.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "hecke/canonical.hpp"
#include "hecke/errors.hpp"

#ifdef HECKE_HAVE_OPENMP
#include <omp.h>
#endif

namespace hecke::gl {

namespace fs = std::filesystem;

DeltaTuple DeltaTuple::of(int n, std::vector<int> deltas) {
    if (n < 1 || n > kMaxVars) throw UsageError("genus out of range");
    if (static_cast<int>(deltas.size()) != n) throw UsageError("delta tuple length != genus");
    for (int i = 0; i < n; ++i) {
        if (deltas[static_cast<std::size_t>(i)] < 0)
            throw UsageError("delta exponents must be >= 0");
        if (i && deltas[static_cast<std::size_t>(i)] < deltas[static_cast<std::size_t>(i - 1)])
            throw UsageError("delta exponents must be non-decreasing");
    }
    return DeltaTuple{n, std::move(deltas)};
}

int DeltaTuple::sum() const { return std::accumulate(deltas.begin(), deltas.end(), 0); }

std::vector<int> DeltaTuple::multiplicities() const {
    std::vector<int> k;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (i && deltas[i] == deltas[i - 1])
            ++k.back();
        else
            k.push_back(1);
    }
    return k;
}

std::string DeltaTuple::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << deltas[static_cast<std::size_t>(i)];
    os << ')';
    return os.str();
}

PiLabel PiLabel::of(int n, int alpha, int beta) {
    if (alpha < 0 || beta < 0 || alpha + beta > n) throw UsageError("invalid pi label");
    return PiLabel{n, alpha, beta};
}

DeltaTuple PiLabel::delta() const {
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < beta; ++i) d[static_cast<std::size_t>(n - 1 - i)] = 2;
    for (int i = 0; i < alpha; ++i) d[static_cast<std::size_t>(n - 1 - beta - i)] = 1;
    return DeltaTuple::of(n, std::move(d));
}

RatFnP phi(int i, const RatFnP& at) {
    if (i < 0) throw UsageError("phi index must be >= 0");
    RatFnP r = RatFnP::one();
    RatFnP power = RatFnP::one();
    for (int m = 1; m <= i; ++m) {
        power = power * at;
        r = r * (power - RatFnP::one());
    }
    return r;
}

LaurentP phi_p(int i) { return phi(i, RatFnP::p()).to_laurent(); }

namespace {

// rank of a symmetric a x a matrix over F_p, destructive on m
int rank_mod_p(int m[4][4], int a, long p) {
    int rank = 0;
    for (int col = 0; col < a && rank < a; ++col) {
        int pivot = -1;
        for (int row = rank; row < a; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < a; ++j) std::swap(m[pivot][j], m[rank][j]);
        // normalize not needed; eliminate below
        long inv = 1;
        {  // modular inverse by Fermat, p prime and tiny
            long base = m[rank][col] % p, e = p - 2, acc = 1;
            while (e) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            inv = acc;
        }
        for (int row = rank + 1; row < a; ++row) {
            const long f = m[row][col] * inv % p;
            if (f == 0) continue;
            for (int j = col; j < a; ++j)
                m[row][j] = static_cast<int>(((m[row][j] - f * m[rank][j]) % p + p * p) % p);
        }
        ++rank;
    }
    return rank;
}

void check_oracle_budget(long p, int a) {
    const bool prime = p == 2 || p == 3 || p == 5;
    if (!prime || a < 1 || a > 4)
        throw BudgetExceeded("lp_oracle enumerates only p in {2,3,5}, 1 <= a <= 4");
}

RankCounts oracle_count_range(long p, int a, long begin, long end) {
    const int cells = a * (a + 1) / 2;
    RankCounts counts(static_cast<std::size_t>(a) + 1, Int(0));
    std::vector<int> digit(static_cast<std::size_t>(cells), 0);
    for (long idx = begin; idx < end; ++idx) {
        long rest = idx;
        for (int i = 0; i < cells; ++i) {
            digit[static_cast<std::size_t>(i)] = static_cast<int>(rest % p);
            rest /= p;
        }
        int m[4][4];
        int k = 0;
        for (int i = 0; i < a; ++i)
            for (int j = i; j < a; ++j) {
                m[i][j] = m[j][i] = digit[static_cast<std::size_t>(k)];
                ++k;
            }
        counts[static_cast<std::size_t>(rank_mod_p(m, a, p))] += 1;
    }
    return counts;
}

}  // namespace

RankCounts lp_oracle_serial(long p, int a) {
    check_oracle_budget(p, a);
    long total = 1;
    for (int i = 0; i < a * (a + 1) / 2; ++i) total *= p;
    return oracle_count_range(p, a, 0, total);
}

RankCounts lp_oracle(long p, int a) {
    check_oracle_budget(p, a);
    long total = 1;
    for (int i = 0; i < a * (a + 1) / 2; ++i) total *= p;
    RankCounts counts(static_cast<std::size_t>(a) + 1, Int(0));
#ifdef HECKE_HAVE_OPENMP
    const int chunks = std::min<long>(64, total);
    std::vector<RankCounts> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < chunks; ++c) {
        const long b = total * c / chunks, e = total * (c + 1) / chunks;
        partial[static_cast<std::size_t>(c)] = oracle_count_range(p, a, b, e);
    }
    for (const auto& part : partial)
        for (std::size_t r = 0; r < counts.size(); ++r) counts[r] += part[r];
#else
    counts = oracle_count_range(p, a, 0, total);
#endif
    return counts;
}

namespace {

LaurentP lp_unchecked(int r, int a) {
    if (r < 0 || a < 0 || r > a) throw UsageError("lp requires 0 <= r <= a");
    // diagonal case p^{r(r+1)/2} * prod_{odd m <= r} (1 - p^-m)
    LaurentP base = LaurentP::p_pow(r * (r + 1) / 2);
    for (int m = 1; m <= r; m += 2)
        base *= LaurentP::one() - LaurentP::p_pow(-m);
    RatFnP q = RatFnP::from_laurent(base) * phi(a, RatFnP::p()) /
               (phi(r, RatFnP::p()) * phi(a - r, RatFnP::p()));
    const LaurentP out = q.to_laurent();
    if (!out.is_polynomial()) throw Error("lp value is not a polynomial in p");
    return out;
}

void run_lp_gate() {
    for (long p : {2L, 3L, 5L})
        for (int a = 1; a <= 4; ++a) {
            const RankCounts counts = lp_oracle(p, a);
            Int sum = 0;
            for (int r = 0; r <= a; ++r) {
                const Int expect = lp_unchecked(r, a).eval_int(Int(p));
                if (expect != counts[static_cast<std::size_t>(r)])
                    throw Error("l_p closed form failed the oracle gate at p=" +
                                std::to_string(p) + " a=" + std::to_string(a) +
                                " r=" + std::to_string(r));
                sum += counts[static_cast<std::size_t>(r)];
            }
            Int total = 1;
            for (int i = 0; i < a * (a + 1) / 2; ++i) total *= p;
            if (sum != total) throw Error("rank counts do not exhaust the matrix space");
        }
}

}  // namespace

LaurentP lp(int r, int a) {
    static const bool gate = [] {
        run_lp_gate();
        return true;
    }();
    (void)gate;
    return lp_unchecked(r, a);
}

namespace {

std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

int permutation_sign(const std::vector<int>& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

// P^{(k)}(x) = prod_i phi_{k_i}(x) / phi_1(x)^n as an honest polynomial:
// each phi_k / (x-1)^k = prod_{m<=k} (1 + x + ... + x^{m-1}).
LaurentP p_of_k_at_inv_p(const std::vector<int>& mult) {
    LaurentP prod = LaurentP::one();
    for (int k : mult)
        for (int m = 2; m <= k; ++m) {
            LaurentP cyc;
            for (int e = 0; e < m; ++e) cyc.add_term(-e, Int(1));  // at x = 1/p
            prod *= cyc;
        }
    return prod;
}

SymPoly omega_t_primitive(const DeltaTuple& d) {
    const int n = d.n;
    // numerator sum over S_n: sgn(w) * x^{w(delta)} * prod_{i<j}(p x_{w(j)} - x_{w(i)})
    MultiPoly acc(n);
    for (const auto& w : permutations(n)) {
        MultiPoly term(n);
        {
            ExpVec e{};
            for (int i = 0; i < n; ++i)
                e[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])] =
                    static_cast<int16_t>(d.deltas[static_cast<std::size_t>(i)]);
            term.add_term(e, LaurentP(permutation_sign(w)));
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                MultiPoly factor(n);
                ExpVec hi{}, lo{};
                hi[static_cast<std::size_t>(w[static_cast<std::size_t>(j)])] = 1;
                lo[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])] = 1;
                factor.add_term(hi, LaurentP::p_pow(1));
                factor.add_term(lo, LaurentP(-1));
                term = multi_mul(term, factor);
            }
        acc += term;
    }
    // exact division by the Vandermonde product, factor by factor
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            MultiPoly factor(n);
            ExpVec hi{}, lo{};
            hi[static_cast<std::size_t>(j)] = 1;
            lo[static_cast<std::size_t>(i)] = 1;
            factor.add_term(hi, LaurentP::one());
            factor.add_term(lo, LaurentP(-1));
            acc = acc.divexact(factor);
        }
    const LaurentP pk = p_of_k_at_inv_p(d.multiplicities());
    SymPoly sym = sym_from_multi(acc);
    // divide by P^{(k)}(1/p), then the global normalization
    int weight = 0;
    for (int i = 0; i < n; ++i) weight += (n - i) * d.deltas[static_cast<std::size_t>(i)];
    const int shift = -weight - n * (n - 1) / 2;
    SymPoly out(n);
    for (const auto& [p, c] : sym.terms()) out.add_term(p, c.divexact(pk).mul_p_pow(shift));
    return out;
}

void check_omega_shape(const DeltaTuple& d, const SymPoly& s) {
    int deg = 0;
    if (!s.is_homogeneous(&deg) || deg != d.sum())
        throw Error("omega value not homogeneous of degree " + std::to_string(d.sum()));
    if (d.sum() == 0) return;
    Partition expect;
    for (int i = 0; i < d.n; ++i)
        expect.parts[static_cast<std::size_t>(i)] =
            static_cast<int16_t>(d.deltas[static_cast<std::size_t>(d.n - 1 - i)]);
    if (!(s.leading() == expect) || !s.coeff(expect).is_monomial())
        throw Error("omega leading partition is not the reversed delta");
}

}  // namespace

SymPoly omega_t(const DeltaTuple& d) {
    const int c = d.deltas.empty() ? 0 : d.deltas.front();
    std::vector<int> tail = d.deltas;
    for (int& v : tail) v -= c;
    SymPoly prim = omega_t_primitive(DeltaTuple::of(d.n, std::move(tail)));
    // scalar shift: one factor x_1...x_n * p^{-n(n+1)/2} per unit of delta_1
    SymPoly out = c == 0 ? std::move(prim)
                         : prim.shift_all_parts(c).mul_scalar(
                               LaurentP::p_pow(-c * d.n * (d.n + 1) / 2));
    check_omega_shape(d, out);
    return out;
}

SymPoly omega_pi(const PiLabel& lbl) { return omega_t(lbl.delta()); }

std::optional<std::string> erratum_note(const DeltaTuple& d) {
    if (d.n == 4 && d.deltas == std::vector<int>{0, 1, 1, 1})
        return "erratum: the published example table lists omega(t(1,p,p,p)) = "
               "p^-3 * sym[1,1,1,0]; the normalization consistent with the generator "
               "images and the scalar-shift law is p^-6 * sym[1,1,1,0]";
    return std::nullopt;
}

std::vector<PiTerm> pi_product(int i, int j, int n) {
    if (i < 1 || j < 1 || i > n || j > n) throw UsageError("pi indices must lie in 1..n");
    std::vector<PiTerm> out;
    for (int a = 0; a <= n - j; ++a) {
        const int b = i - a;
        if (b < 0 || b > j) continue;
        RatFnP q = phi(a + j - b, RatFnP::p()) /
                   (phi(a, RatFnP::p()) * phi(j - b, RatFnP::p()));
        const LaurentP coeff = q.to_laurent();
        if (!coeff.is_polynomial()) throw InexactDivision("pi_product coefficient not polynomial");
        out.push_back(PiTerm{coeff, PiLabel::of(n, a + j - b, b)});
    }
    return out;
}

std::vector<DeltaTuple> enumerate_primitive(int n, int max_last) {
    std::vector<DeltaTuple> out;
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    // odometer over non-decreasing tails with d[0] = 0
    for (;;) {
        out.push_back(DeltaTuple::of(n, d));
        int i = n - 1;
        while (i >= 1 && d[static_cast<std::size_t>(i)] == max_last) --i;
        if (i < 1) break;
        const int v = ++d[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < n; ++k) d[static_cast<std::size_t>(k)] = v;
    }
    return out;
}

OmegaTable::OmegaTable(int n, std::optional<fs::path> cache_dir)
    : n_(n), dir_(std::move(cache_dir)) {
    if (dir_) fs::create_directories(*dir_ / ("n" + std::to_string(n_)));
}

fs::path OmegaTable::cache_file(const fs::path& dir, const DeltaTuple& d) {
    std::string name = "d";
    for (int i = 1; i < d.n; ++i)
        name += (i > 1 ? "_" : "") + std::to_string(d.deltas[static_cast<std::size_t>(i)]);
    name += ".sym";
    return dir / ("n" + std::to_string(d.n)) / name;
}

std::optional<SymPoly> OmegaTable::try_load(const DeltaTuple& d) const {
    if (!dir_) return std::nullopt;
    const fs::path file = cache_file(*dir_, d);
    if (!fs::exists(file)) return std::nullopt;
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto mark = text.rfind("checksum fnv1a64:");
    if (mark != std::string::npos) {
        const std::string payload = text.substr(0, mark);
        if (text.substr(mark + 17, 16) == fnv1a64_hex(payload)) {
            try {
                return sympoly_from_canonical(payload);
            } catch (const ParseError&) {
            }
        }
    }
    std::cerr << "warning: cache entry " << file.string() << " is corrupt; recomputing\n";
    return std::nullopt;
}

void OmegaTable::write_cache(const DeltaTuple& d, const SymPoly& v) const {
    if (!dir_) return;
    const std::string payload = to_canonical(v);
    std::ofstream out(cache_file(*dir_, d));
    out << payload << "checksum fnv1a64:" << fnv1a64_hex(payload) << '\n';
}

SymPoly OmegaTable::load_or_compute(const DeltaTuple& d) {
    if (auto v = try_load(d)) {
        ++loaded_;
        return std::move(*v);
    }
    SymPoly v = omega_t(d);
    ++computed_;
    write_cache(d, v);
    return v;
}

void OmegaTable::build(int max_last, int jobs) {
    const std::vector<DeltaTuple> todo = enumerate_primitive(n_, max_last);
    // pull whatever the disk already has (serial I/O), queue the rest
    std::vector<const DeltaTuple*> compute;
    for (const auto& d : todo) {
        if (table_.count(d.deltas)) continue;
        if (auto v = try_load(d)) {
            ++loaded_;
            table_.emplace(d.deltas, std::move(*v));
            continue;
        }
        compute.push_back(&d);
    }
    std::vector<SymPoly> results(compute.size());
#ifdef HECKE_HAVE_OPENMP
    if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (std::size_t k = 0; k < compute.size(); ++k) results[k] = omega_t(*compute[k]);
    } else
#endif
    {
        for (std::size_t k = 0; k < compute.size(); ++k) results[k] = omega_t(*compute[k]);
    }
    // merge in enumeration order so the table is identical for any job count
    for (std::size_t k = 0; k < compute.size(); ++k) {
        ++computed_;
        write_cache(*compute[k], results[k]);
        table_.emplace(compute[k]->deltas, std::move(results[k]));
    }
}

SymPoly OmegaTable::get(const DeltaTuple& d) {
    if (d.n != n_) throw UsageError("tuple genus does not match the table");
    const int c = d.deltas.front();
    std::vector<int> tail = d.deltas;
    for (int& v : tail) v -= c;
    SymPoly prim;
    {
        std::scoped_lock lock(mu_);
        auto it = table_.find(tail);
        if (it == table_.end()) {
            SymPoly v = load_or_compute(DeltaTuple::of(n_, tail));
            it = table_.emplace(tail, std::move(v)).first;
        }
        prim = it->second;
    }
    if (c == 0) return prim;
    return prim.shift_all_parts(c).mul_scalar(LaurentP::p_pow(-c * n_ * (n_ + 1) / 2));
}

}  // namespace hecke::gl
