#include "hecke/multipoly.hpp"

#include "hecke/errors.hpp"

namespace hecke {

MultiPoly MultiPoly::constant(int n, const LaurentP& c) {
    MultiPoly r(n);
    r.add_term(exp_zero(), c);
    return r;
}

MultiPoly MultiPoly::monomial(int n, const ExpVec& e, const LaurentP& c) {
    MultiPoly r(n);
    r.add_term(e, c);
    return r;
}

void MultiPoly::add_term(const ExpVec& e, const LaurentP& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (n_ != o.n_) throw UsageError("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (n_ != o.n_) throw UsageError("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multi_mul(a, b); }

void MultiPoly::add_scaled_shift(const MultiPoly& src, const ExpVec& e, const LaurentP& c) {
    if (n_ != src.n_) throw UsageError("variable count mismatch");
    for (const auto& [e0, c0] : src.terms_) {
        ExpVec key = e0;
        for (int i = 0; i < n_; ++i) key[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(i)];
        add_term(key, c0 * c);
    }
}

MultiPoly multi_mul(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() != b.vars()) throw UsageError("variable count mismatch");
    MultiPoly r(a.vars());
    const MultiPoly& outer = a.term_count() <= b.term_count() ? a : b;
    const MultiPoly& inner = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [e, c] : outer.terms()) r.add_scaled_shift(inner, e, c);
    return r;
}

MultiPoly MultiPoly::divexact(const MultiPoly& den) const {
    if (n_ != den.n_) throw UsageError("variable count mismatch");
    if (den.is_zero()) throw InexactDivision("division by zero polynomial");
    MultiPoly quot(n_);
    MultiPoly rem = *this;
    const auto& [de, dc] = *den.terms_.begin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.begin();
        ExpVec qe{};
        for (int i = 0; i < n_; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            qe[idx] = static_cast<int16_t>(re[idx] - de[idx]);
            if (qe[idx] < 0) throw InexactDivision("leading monomial does not divide");
        }
        const LaurentP qc = rc.divexact(dc);
        quot.add_term(qe, qc);
        rem.add_scaled_shift(den, qe, -qc);
    }
    return quot;
}

MultiPoly multi_divexact(const MultiPoly& num, const MultiPoly& den) {
    return num.divexact(den);
}

bool MultiPoly::is_homogeneous(int* degree_out) const {
    if (terms_.empty()) {
        if (degree_out) *degree_out = 0;
        return true;
    }
    const int d = exp_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (exp_degree(e) != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

}  // namespace hecke
