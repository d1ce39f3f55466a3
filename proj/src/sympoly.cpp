#include "hecke/sympoly.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {
const LaurentP kZeroL;
}

SymPoly SymPoly::constant(int n, const LaurentP& c) {
    SymPoly r(n);
    r.add_term(Partition{}, c);
    return r;
}

SymPoly SymPoly::term(int n, const Partition& p, const LaurentP& c) {
    SymPoly r(n);
    r.add_term(p, c);
    return r;
}

const LaurentP& SymPoly::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? kZeroL : it->second;
}

const Partition& SymPoly::leading() const {
    if (terms_.empty()) throw Error("leading partition of zero polynomial");
    return terms_.begin()->first;
}

void SymPoly::add_term(const Partition& p, const LaurentP& c) {
    if (c.is_zero()) return;
    if (!p.is_sorted(n_)) throw Error("partition not sorted: " + p.str(n_));
    auto [it, fresh] = terms_.emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymPoly SymPoly::operator-() const {
    SymPoly r(n_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (n_ != o.n_) throw UsageError("variable count mismatch");
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (n_ != o.n_) throw UsageError("variable count mismatch");
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

SymPoly SymPoly::mul_scalar(const LaurentP& c) const {
    SymPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [p, c0] : terms_) r.terms_.emplace(p, c0 * c);
    return r;
}

SymPoly SymPoly::pow(unsigned k) const {
    SymPoly r = one(n_);
    SymPoly base = *this;
    while (k) {
        if (k & 1u) r = sym_mul(r, base);
        if (k >>= 1u) base = sym_mul(base, base);
    }
    return r;
}

MultiPoly SymPoly::expand() const {
    MultiPoly r(n_);
    for (const auto& [p, c] : terms_)
        for (const auto& e : orbit(p, n_)) r.add_term(e, c);
    return r;
}

bool SymPoly::is_homogeneous(int* degree_out) const {
    if (terms_.empty()) {
        if (degree_out) *degree_out = 0;
        return true;
    }
    const int d = terms_.begin()->first.degree();
    for (const auto& [p, c] : terms_)
        if (p.degree() != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

LaurentP SymPoly::substitute_all(std::span<const LaurentP> values) const {
    if (static_cast<int>(values.size()) != n_)
        throw UsageError("substitution arity mismatch");
    LaurentP acc;
    for (const auto& [p, c] : terms_) {
        LaurentP orbit_sum;
        for (const auto& e : orbit(p, n_)) {
            LaurentP prod = LaurentP::one();
            for (int i = 0; i < n_ && !prod.is_zero(); ++i) {
                const int k = e[static_cast<std::size_t>(i)];
                if (k > 0) prod *= values[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(k));
            }
            orbit_sum += prod;
        }
        acc += c * orbit_sum;
    }
    return acc;
}

SymPoly SymPoly::set_last_var_zero() const {
    if (n_ < 1) throw UsageError("no variable to project away");
    SymPoly r(n_ - 1);
    for (const auto& [p, c] : terms_)
        if (p[n_ - 1] == 0) r.add_term(p, c);  // storage already padded with zeros
    return r;
}

SymPoly SymPoly::shift_all_parts(int delta) const {
    SymPoly r(n_);
    for (const auto& [p, c] : terms_) {
        Partition q = p;
        for (int i = 0; i < n_; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            q.parts[idx] = static_cast<int16_t>(q.parts[idx] + delta);
            if (q.parts[idx] < 0)
                throw NotDivisible("part " + std::to_string(p[i]) + " below shift " +
                                   std::to_string(-delta));
        }
        r.terms_.emplace(q, c);
    }
    return r;
}

SymPoly SymPoly::invert_p() const {
    SymPoly r(n_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, c.invert_p());
    return r;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*sym[" << p.str(n_) << "]";
    }
    return os.str();
}

// Product via orbit sums.  For each partition pair (la, mu), every vector
// beta in the orbit of mu contributes to sym[sort(la + beta)]; the exact
// multiplicity is |Stab(nu)| * #hits / |Stab(la)|, an integer because
// |Stab(nu)|*#{beta : sort(la+beta)=nu} = |Stab(la)|*#{beta : nu-beta in
// orbit(la)}.
SymPoly sym_mul(const SymPoly& a, const SymPoly& b) {
    if (a.vars() != b.vars()) throw UsageError("variable count mismatch");
    const int n = a.vars();
    // expand the operand with the smaller orbit-expanded size
    std::size_t cost_a = 0, cost_b = 0;
    for (const auto& [p, c] : a.terms()) cost_a += static_cast<std::size_t>(orbit_size(p, n));
    for (const auto& [p, c] : b.terms()) cost_b += static_cast<std::size_t>(orbit_size(p, n));
    const SymPoly& large = cost_a >= cost_b ? a : b;
    const SymPoly& small = cost_a >= cost_b ? b : a;

    std::vector<std::pair<std::vector<ExpVec>, const LaurentP*>> small_orbits;
    small_orbits.reserve(small.term_count());
    for (const auto& [mu, c2] : small.terms()) small_orbits.emplace_back(orbit(mu, n), &c2);

    SymPoly result(n);
    std::map<Partition, Int, PartitionGrlexDesc> counts;
    for (const auto& [la, c1] : large.terms()) {
        const long stab_la = stab_size(la.parts, n);
        for (const auto& [vecs, c2] : small_orbits) {
            counts.clear();
            for (const auto& beta : vecs) {
                ExpVec sum = la.parts;
                for (int i = 0; i < n; ++i)
                    sum[static_cast<std::size_t>(i)] += beta[static_cast<std::size_t>(i)];
                counts[Partition::sorted_from(sum, n)] += 1;
            }
            for (const auto& [nu, hits] : counts) {
                Int mult = hits * stab_size(nu.parts, n);
                Int q, r;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mult.get_mpz_t(),
                            Int(stab_la).get_mpz_t());
                if (r != 0) throw Error("non-integral orbit multiplicity");
                result.add_term(nu, c1 * *c2 * LaurentP(q));
            }
        }
    }
    return result;
}

SymPoly sym_from_multi(const MultiPoly& m) {
    const int n = m.vars();
    SymPoly r(n);
    // group by sorted exponent vector, then check each group is one full
    // orbit with a single coefficient
    std::map<Partition, std::pair<LaurentP, long>, PartitionGrlexDesc> groups;
    for (const auto& [e, c] : m.terms()) {
        const Partition p = Partition::sorted_from(e, n);
        auto [it, fresh] = groups.emplace(p, std::make_pair(c, 1L));
        if (!fresh) {
            if (it->second.first != c)
                throw SymmetryViolation("coefficient differs within the orbit of sym[" +
                                        p.str(n) + "]");
            it->second.second += 1;
        }
    }
    for (const auto& [p, group] : groups) {
        if (group.second != orbit_size(p, n))
            throw SymmetryViolation("incomplete orbit of sym[" + p.str(n) + "]");
        r.add_term(p, group.first);
    }
    return r;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) { return sym_mul(a, b); }

}  // namespace hecke
