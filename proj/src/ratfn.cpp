#include "hecke/ratfn.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {
const Int kZero = 0;
}

PolyZ::PolyZ(long c) {
    if (c != 0) c_.push_back(Int(c));
}

PolyZ::PolyZ(const Int& c) {
    if (c != 0) c_.push_back(c);
}

PolyZ::PolyZ(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyZ PolyZ::p_pow(int e) {
    PolyZ r;
    r.c_.assign(static_cast<std::size_t>(e) + 1, Int(0));
    r.c_.back() = 1;
    return r;
}

void PolyZ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& PolyZ::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const Int& PolyZ::lead() const {
    if (c_.empty()) throw Error("lead of zero polynomial");
    return c_.back();
}

PolyZ PolyZ::operator-() const {
    PolyZ r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

PolyZ operator+(const PolyZ& a, const PolyZ& b) {
    PolyZ r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

PolyZ operator-(const PolyZ& a, const PolyZ& b) {
    PolyZ r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return PolyZ();
    PolyZ r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

PolyZ PolyZ::mul_int(const Int& k) const {
    if (k == 0) return PolyZ();
    PolyZ r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

PolyZ PolyZ::divexact_int(const Int& k) const {
    PolyZ r = *this;
    for (auto& c : r.c_) {
        Int q, rest;
        mpz_fdiv_qr(q.get_mpz_t(), rest.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
        if (rest != 0) throw InexactDivision("integer content does not divide");
        c = q;
    }
    return r;
}

PolyZ PolyZ::divexact(const PolyZ& d) const {
    if (d.is_zero()) throw InexactDivision("polynomial division by zero");
    if (is_zero()) return PolyZ();
    PolyZ rem = *this;
    if (rem.degree() < d.degree()) throw InexactDivision("degree of divisor too large");
    std::vector<Int> q(static_cast<std::size_t>(rem.degree() - d.degree()) + 1, Int(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        Int qc, rest;
        mpz_fdiv_qr(qc.get_mpz_t(), rest.get_mpz_t(), rem.lead().get_mpz_t(),
                    d.lead().get_mpz_t());
        if (rest != 0) throw InexactDivision("leading coefficient does not divide");
        const int shift = rem.degree() - d.degree();
        q[static_cast<std::size_t>(shift)] = qc;
        // rem -= qc * p^shift * d
        for (int i = 0; i <= d.degree(); ++i)
            rem.c_[static_cast<std::size_t>(i + shift)] -= qc * d.c_[static_cast<std::size_t>(i)];
        rem.trim();
    }
    if (!rem.is_zero()) throw InexactDivision("nonzero polynomial remainder");
    return PolyZ(std::move(q));
}

Int PolyZ::content() const {
    Int g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (g == 0) return 0;
    if (lead() < 0) g = -g;
    return g;
}

PolyZ PolyZ::primitive_part() const {
    if (is_zero()) return PolyZ();
    return divexact_int(content());
}

PolyZ PolyZ::gcd(PolyZ a, PolyZ b) {
    if (a.is_zero()) return b.is_zero() || b.lead() > 0 ? b : -b;
    if (b.is_zero()) return a.lead() > 0 ? a : -a;
    Int ca = a.content(), cb = b.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = a.divexact_int(ca);
    b = b.divexact_int(cb);
    // primitive PRS via pseudo-remainders
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        PolyZ r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const int shift = r.degree() - b.degree();
            const Int rl = r.lead();
            r = r.mul_int(b.lead());
            for (int i = 0; i <= b.degree(); ++i)
                r.c_[static_cast<std::size_t>(i + shift)] -= rl * b.c_[static_cast<std::size_t>(i)];
            r.trim();
        }
        a = b;
        b = r.is_zero() ? PolyZ() : r.primitive_part();
    }
    PolyZ g = a.mul_int(cg);
    if (g.lead() < 0) g = -g;
    return g;
}

LaurentP PolyZ::to_laurent() const {
    LaurentP r;
    for (std::size_t i = 0; i < c_.size(); ++i) r.add_term(static_cast<int>(i), c_[i]);
    return r;
}

PolyZ PolyZ::from_laurent_shifted(const LaurentP& l, int* shift_out) {
    if (l.is_zero()) {
        if (shift_out) *shift_out = 0;
        return PolyZ();
    }
    const int m = l.min_exp();
    std::vector<Int> c(static_cast<std::size_t>(l.max_exp() - m) + 1, Int(0));
    for (const auto& [e, v] : l.terms()) c[static_cast<std::size_t>(e - m)] = v;
    if (shift_out) *shift_out = m;
    return PolyZ(std::move(c));
}

RatFnP::RatFnP(PolyZ num, PolyZ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    reduce();
}

void RatFnP::reduce() {
    if (num_.is_zero()) {
        den_ = PolyZ::one();
        return;
    }
    PolyZ g = PolyZ::gcd(num_, den_);
    if (!(g.degree() == 0 && g.lead() == 1)) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    // gcd keeps contents coprime, but normalize the sign here
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFnP RatFnP::from_laurent(const LaurentP& l) {
    int shift = 0;
    PolyZ n = PolyZ::from_laurent_shifted(l, &shift);
    if (shift >= 0) return RatFnP(n * PolyZ::p_pow(shift), PolyZ::one());
    return RatFnP(std::move(n), PolyZ::p_pow(-shift));
}

bool RatFnP::is_one() const {
    return num_.degree() == 0 && num_.lead() == 1 && den_.degree() == 0 && den_.lead() == 1;
}

bool RatFnP::is_laurent() const {
    if (num_.is_zero()) return true;
    // reduced denominator must be +- p^k; reduction forces positive lead
    for (int i = 0; i < den_.degree(); ++i)
        if (den_.coeff(static_cast<std::size_t>(i)) != 0) return false;
    return den_.lead() == 1;
}

LaurentP RatFnP::to_laurent() const {
    if (!is_laurent()) throw InexactDivision("denominator is not a power of p: " + str());
    return num_.to_laurent().mul_p_pow(-den_.degree());
}

RatFnP RatFnP::operator-() const {
    RatFnP r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFnP operator+(const RatFnP& a, const RatFnP& b) {
    return RatFnP(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFnP operator-(const RatFnP& a, const RatFnP& b) {
    return RatFnP(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFnP operator*(const RatFnP& a, const RatFnP& b) {
    return RatFnP(a.num_ * b.num_, a.den_ * b.den_);
}

RatFnP operator/(const RatFnP& a, const RatFnP& b) {
    if (b.is_zero()) throw Error("division by zero rational function");
    return RatFnP(a.num_ * b.den_, a.den_ * b.num_);
}

RatFnP RatFnP::pow(unsigned k) const {
    RatFnP r = one();
    RatFnP base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

std::string RatFnP::str() const {
    std::ostringstream os;
    os << "(" << num_.to_laurent().str() << ")";
    if (!(den_.degree() == 0 && den_.lead() == 1)) os << "/(" << den_.to_laurent().str() << ")";
    return os.str();
}

}  // namespace hecke
