#include "hecke/inversion.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/canonical.hpp"
#include "hecke/errors.hpp"

namespace hecke::inv {

GenMonomial GenMonomial::unit(int n) {
    GenMonomial m;
    m.b.assign(static_cast<std::size_t>(n - 1), 0);
    return m;
}

int GenMonomial::x0_degree() const {
    int s = e;
    for (int v : b) s += v;
    return a + 2 * s;
}

int GenMonomial::total_degree() const {
    int s = a + e;
    for (int v : b) s += v;
    return s;
}

std::vector<int> GenMonomial::key() const {
    std::vector<int> k;
    k.reserve(b.size() + 2);
    k.push_back(a);
    k.insert(k.end(), b.begin(), b.end());
    k.push_back(e);
    return k;
}

std::string GenMonomial::str(int) const {
    std::ostringstream os;
    bool first = true;
    for (int v : key()) {
        if (!first) os << ',';
        first = false;
        os << v;
    }
    return os.str();
}

std::string GenMonomial::name(int n) const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& gen, int exp) {
        if (exp == 0) return;
        if (!first) os << "*";
        first = false;
        os << gen;
        if (exp > 1) os << "^" << exp;
    };
    emit("T(p)", a);
    for (std::size_t i = 0; i < b.size(); ++i)
        emit("T" + std::to_string(i + 1) + "(p^2)", b[i]);
    emit("[p]", e);
    (void)n;
    return first ? "1" : os.str();
}

bool GenMonomialOrder::operator()(const GenMonomial& x, const GenMonomial& y) const {
    const int dx = x.total_degree(), dy = y.total_degree();
    if (dx != dy) return dx > dy;
    return x.key() > y.key();
}

HeckePoly HeckePoly::constant(int n, const LaurentP& c) {
    HeckePoly r(n);
    r.add_term(GenMonomial::unit(n), c);
    return r;
}

HeckePoly HeckePoly::generator(int n, int index) {
    if (index < 0 || index > n) throw UsageError("generator index out of range");
    GenMonomial m = GenMonomial::unit(n);
    if (index == 0)
        m.a = 1;
    else if (index == n)
        m.e = 1;
    else
        m.b[static_cast<std::size_t>(index - 1)] = 1;
    HeckePoly r(n);
    r.add_term(m, LaurentP::one());
    return r;
}

void HeckePoly::add_term(const GenMonomial& m, const LaurentP& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(m.b.size()) != n_ - 1) throw UsageError("monomial arity mismatch");
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckePoly HeckePoly::operator-() const {
    HeckePoly r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

HeckePoly& HeckePoly::operator+=(const HeckePoly& o) {
    if (n_ != o.n_) throw UsageError("genus mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

HeckePoly& HeckePoly::operator-=(const HeckePoly& o) {
    if (n_ != o.n_) throw UsageError("genus mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

HeckePoly operator*(const HeckePoly& a, const HeckePoly& b) {
    if (a.n_ != b.n_) throw UsageError("genus mismatch");
    HeckePoly r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            GenMonomial m = ma;
            m.a += mb.a;
            m.e += mb.e;
            for (std::size_t i = 0; i < m.b.size(); ++i) m.b[i] += mb.b[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

HeckePoly HeckePoly::mul_scalar(const LaurentP& c) const {
    HeckePoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, c0] : terms_) r.terms_.emplace(m, c0 * c);
    return r;
}

HeckePoly HeckePoly::mul_scalar_power(int pb_exponent, const LaurentP& c) const {
    HeckePoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, c0] : terms_) {
        GenMonomial m2 = m;
        m2.e += pb_exponent;
        r.terms_.emplace(m2, c0 * c);
    }
    return r;
}

HeckePoly HeckePoly::pow(unsigned k) const {
    HeckePoly r = one(n_);
    HeckePoly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        if (k >>= 1u) base = base * base;
    }
    return r;
}

std::string HeckePoly::serialize() const {
    std::ostringstream os;
    os << "heckepoly n=" << n_ << " terms=" << terms_.size() << '\n';
    for (const auto& [m, c] : terms_) os << m.str(n_) << " -> " << to_canonical(c) << '\n';
    return os.str();
}

HeckePoly HeckePoly::from_serialized(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string header;
    std::getline(is, header);
    int n = 0;
    long terms = 0;
    if (std::sscanf(header.c_str(), "heckepoly n=%d terms=%ld", &n, &terms) != 2)
        throw ParseError("missing heckepoly header");
    HeckePoly r(n);
    std::string line;
    for (long k = 0; k < terms; ++k) {
        if (!std::getline(is, line)) throw ParseError("truncated heckepoly");
        const auto arrow = line.find("->");
        if (arrow == std::string::npos) throw ParseError("term line missing '->'");
        GenMonomial m = GenMonomial::unit(n);
        {
            std::istringstream ks(line.substr(0, arrow));
            std::string tok;
            std::vector<int> vals;
            while (std::getline(ks, tok, ',')) vals.push_back(std::stoi(tok));
            if (static_cast<int>(vals.size()) != n + 1)
                throw ParseError("monomial arity mismatch");
            m.a = vals.front();
            m.e = vals.back();
            for (int i = 0; i < n - 1; ++i) m.b[static_cast<std::size_t>(i)] = vals[static_cast<std::size_t>(i + 1)];
        }
        r.add_term(m, laurent_from_canonical(std::string_view(line).substr(arrow + 2)));
    }
    return r;
}

std::string HeckePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << m.name(n_);
    }
    return os.str();
}

std::vector<GenMonomial> enumerate_monomials(int n, int k) {
    if (k < 0) throw UsageError("x0 degree must be >= 0");
    std::vector<GenMonomial> out;
    // a = k - 2*(sum b + e) >= 0
    for (int half = 0; 2 * half <= k; ++half) {
        // distribute `half` over (b_1..b_{n-1}, e)
        std::vector<int> parts(static_cast<std::size_t>(n), 0);  // b..., e
        parts.back() = 0;
        // odometer over compositions of exactly `half`
        std::vector<int> comp(static_cast<std::size_t>(n), 0);
        comp[0] = half;
        for (;;) {
            GenMonomial m = GenMonomial::unit(n);
            m.a = k - 2 * half;
            for (int i = 0; i < n - 1; ++i) m.b[static_cast<std::size_t>(i)] = comp[static_cast<std::size_t>(i)];
            m.e = comp[static_cast<std::size_t>(n - 1)];
            out.push_back(std::move(m));
            // next composition of `half` into n ordered non-negative parts
            int i = n - 2;
            while (i >= 0 && comp[static_cast<std::size_t>(i)] == 0) --i;
            if (i < 0) break;
            const int tail = comp[static_cast<std::size_t>(n - 1)];
            comp[static_cast<std::size_t>(i)] -= 1;
            comp[static_cast<std::size_t>(i + 1)] = tail + 1;
            if (i + 1 != n - 1) comp[static_cast<std::size_t>(n - 1)] = 0;
        }
    }
    std::sort(out.begin(), out.end(), [](const GenMonomial& x, const GenMonomial& y) {
        return GenMonomialOrder{}(x, y);
    });
    return out;
}

ImageCache::ImageCache(std::vector<sp::GeneratorImage> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw UsageError("empty generator list");
    n_ = gens_.front().image.vars();
}

const SymPoly& ImageCache::image(const GenMonomial& m) {
    const auto key = m.key();
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    SymPoly value(n_);
    if (m.x0_degree() == 0) {
        value = SymPoly::one(n_);
    } else {
        // peel one generator off and recurse; keeps every prefix memoized
        GenMonomial prev = m;
        int gen_index = -1;
        if (m.a > 0) {
            --prev.a;
            gen_index = 0;
        } else if (m.e > 0) {
            --prev.e;
            gen_index = n_;
        } else {
            for (std::size_t i = 0; i < m.b.size(); ++i)
                if (m.b[i] > 0) {
                    --prev.b[i];
                    gen_index = static_cast<int>(i) + 1;
                    break;
                }
        }
        value = sym_mul(image(prev), gens_[static_cast<std::size_t>(gen_index)].image);
    }
    return memo_.emplace(key, std::move(value)).first->second;
}

SymPoly ImageCache::image_of(const HeckePoly& h) {
    SymPoly acc(n_);
    for (const auto& [m, c] : h.terms()) acc += image(m).mul_scalar(c);
    return acc;
}

SymPoly divide_out_scalar(const SymPoly& target, int m) {
    if (m < 0) throw UsageError("power must be >= 0");
    if (m == 0) return target;
    const int n = target.vars();
    return target.shift_all_parts(-m).mul_scalar(LaurentP::p_pow(m * n * (n + 1) / 2));
}

std::vector<RatFnP> solve_exact(std::vector<std::vector<RatFnP>> matrix,
                                std::vector<RatFnP> rhs) {
    const std::size_t rows = matrix.size();
    if (rows == 0 || rhs.size() != rows) throw UsageError("bad system shape");
    const std::size_t cols = matrix.front().size();
    if (rows < cols) throw UsageError("solve_exact needs rows >= cols");
    for (const auto& row : matrix)
        if (row.size() != cols) throw UsageError("ragged matrix");

    // clear denominators row by row; row scaling does not move the solution
    std::vector<std::vector<PolyZ>> a(rows, std::vector<PolyZ>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        PolyZ scale = PolyZ::one();
        for (std::size_t j = 0; j < cols; ++j)
            scale = scale.divexact(PolyZ::gcd(scale, matrix[i][j].den())) * matrix[i][j].den();
        scale = scale.divexact(PolyZ::gcd(scale, rhs[i].den())) * rhs[i].den();
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = matrix[i][j].num() * scale.divexact(matrix[i][j].den());
        a[i][cols] = rhs[i].num() * scale.divexact(rhs[i].den());
    }

    // Bareiss fraction-free forward elimination
    PolyZ prev = PolyZ::one();
    for (std::size_t k = 0; k < cols; ++k) {
        std::size_t pivot = k;
        while (pivot < rows && a[pivot][k].is_zero()) ++pivot;
        if (pivot == rows) throw LinearDependence("zero column during elimination");
        if (pivot != k) std::swap(a[pivot], a[k]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j <= cols; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divexact(prev);
            a[i][k] = PolyZ();
        }
        prev = a[k][k];
    }
    // consistency of the surplus rows
    for (std::size_t i = cols; i < rows; ++i)
        if (!a[i][cols].is_zero())
            throw NotInImage("inconsistent overdetermined system");
    // back substitution in the field of fractions
    std::vector<RatFnP> x(cols);
    for (std::size_t k = cols; k-- > 0;) {
        RatFnP acc(a[k][cols], PolyZ::one());
        for (std::size_t j = k + 1; j < cols; ++j)
            acc = acc - RatFnP(a[k][j], PolyZ::one()) * x[j];
        x[k] = acc / RatFnP(a[k][k], PolyZ::one());
    }
    return x;
}

namespace {

struct Column {
    const GenMonomial* mono;
    const SymPoly* image;
    Partition lead;
    const LaurentP* lead_coeff;
};

}  // namespace

HeckePoly invert_coefficient(const SymPoly& target, int k, ImageCache& cache) {
    const int n = cache.genus();
    if (target.vars() != n) throw UsageError("target variable count mismatch");
    const std::vector<GenMonomial> monomials = enumerate_monomials(n, k);

    std::vector<Column> cols;
    cols.reserve(monomials.size());
    for (const auto& m : monomials) {
        if (m.x0_degree() != k) throw Error("enumerated monomial of wrong x0 degree");
        const SymPoly& img = cache.image(m);
        if (img.is_zero()) throw LinearDependence("generator image vanished");
        cols.push_back(Column{&m, &img, img.leading(), &img.coeff(img.leading())});
    }
    std::sort(cols.begin(), cols.end(), [](const Column& a, const Column& b) {
        return PartitionGrlexDesc{}(a.lead, b.lead);
    });
    for (std::size_t i = 0; i + 1 < cols.size(); ++i)
        if (cols[i].lead == cols[i + 1].lead)
            throw LinearDependence("two monomials share the leading partition sym[" +
                                   cols[i].lead.str(n) + "]");

    // The matrix of images is triangular with respect to the leading
    // partitions, so elimination is a single forward sweep; the division by
    // each leading coefficient is the fraction-free pivot step.
    std::map<Partition, RatFnP, PartitionGrlexDesc> residual;
    for (const auto& [p, c] : target.terms()) residual.emplace(p, RatFnP::from_laurent(c));

    HeckePoly solution(n);
    for (const auto& col : cols) {
        RatFnP coeff = RatFnP::zero();
        if (auto it = residual.find(col.lead); it != residual.end())
            coeff = it->second / RatFnP::from_laurent(*col.lead_coeff);
        if (coeff.is_zero()) continue;
        for (const auto& [p, c] : col.image->terms()) {
            auto [it, fresh] = residual.emplace(p, RatFnP::zero());
            it->second = it->second - coeff * RatFnP::from_laurent(c);
            if (it->second.is_zero()) residual.erase(it);
        }
        if (!coeff.is_laurent())
            throw NotInImage("coefficient of " + col.mono->name(n) +
                             " is not a Laurent polynomial: " + coeff.str());
        solution.add_term(*col.mono, coeff.to_laurent());
    }
    if (!residual.empty())
        throw NotInImage("residual remains at sym[" + residual.begin()->first.str(n) + "]");
    return solution;
}

HeckePoly invert_via_divide_out(const SymPoly& target, int k, ImageCache& cache) {
    if (target.is_zero()) return HeckePoly(cache.genus());
    int m = 1 << 14;
    for (const auto& [p, c] : target.terms())
        m = std::min<int>(m, p[target.vars() - 1]);  // smallest part overall
    const SymPoly reduced = divide_out_scalar(target, m);
    HeckePoly h = invert_coefficient(reduced, k - 2 * m, cache);
    h = h.mul_scalar_power(m, LaurentP::one());
    // round trip against the undivided target
    if (cache.image_of(h) != target)
        throw NotInImage("divide-out route failed the round trip");
    return h;
}

}  // namespace hecke::inv
