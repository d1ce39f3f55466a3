#include "hecke/laurent.hpp"

#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {
const Int kZero = 0;
}

bool LaurentP::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentP::min_exp() const {
    if (terms_.empty()) throw Error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentP::max_exp() const {
    if (terms_.empty()) throw Error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

const Int& LaurentP::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? kZero : it->second;
}

void LaurentP::add_term(int e, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentP LaurentP::operator-() const {
    LaurentP r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentP& LaurentP::operator+=(const LaurentP& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentP& LaurentP::operator-=(const LaurentP& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentP operator*(const LaurentP& a, const LaurentP& b) {
    LaurentP r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentP LaurentP::mul_p_pow(int e) const {
    LaurentP r;
    for (const auto& [e0, c] : terms_) r.terms_.emplace(e0 + e, c);
    return r;
}

LaurentP LaurentP::pow(unsigned k) const {
    LaurentP r = one();
    LaurentP base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

LaurentP LaurentP::invert_p() const {
    LaurentP r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

LaurentP LaurentP::divexact(const LaurentP& d) const {
    if (d.is_zero()) throw InexactDivision("division by zero Laurent polynomial");
    if (is_zero()) return zero();
    // Shift both to honest polynomials with nonzero constant term, divide in
    // Z[p] from the bottom up, restore the exponent offset.
    const int sn = min_exp(), sd = d.min_exp();
    LaurentP rem = mul_p_pow(-sn);
    const LaurentP den = d.mul_p_pow(-sd);
    const Int& dc = den.terms_.begin()->second;
    LaurentP quot;
    while (!rem.is_zero()) {
        const int re = rem.terms_.begin()->first;
        const Int rc = rem.terms_.begin()->second;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rc.get_mpz_t(), dc.get_mpz_t());
        if (r != 0) throw InexactDivision("leading coefficient does not divide");
        LaurentP t = term(q, re);
        quot += t;
        rem -= t * den;
        if (!rem.is_zero() && rem.min_exp() <= re)
            throw InexactDivision("nonzero remainder in Laurent division");
    }
    return quot.mul_p_pow(sn - sd);
}

Int LaurentP::eval_int(const Int& x) const {
    if (!is_polynomial()) throw Error("eval_int on a proper Laurent polynomial");
    // Horner over the dense range.
    Int acc = 0;
    int e = terms_.empty() ? 0 : max_exp();
    for (; e >= 0; --e) {
        acc *= x;
        acc += coeff(e);
    }
    return acc;
}

std::string LaurentP::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest power first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0 || a != 1) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "p";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace hecke
