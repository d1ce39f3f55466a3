#include "hecke/canonical.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

void skip_ws(std::string_view& s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
}

bool eat(std::string_view& s, char c) {
    skip_ws(s);
    if (s.empty() || s.front() != c) return false;
    s.remove_prefix(1);
    return true;
}

Int parse_int(std::string_view& s) {
    skip_ws(s);
    std::size_t len = 0;
    if (len < s.size() && (s[len] == '-' || s[len] == '+')) ++len;
    while (len < s.size() && std::isdigit(static_cast<unsigned char>(s[len]))) ++len;
    if (len == 0 || (len == 1 && !std::isdigit(static_cast<unsigned char>(s[0]))))
        throw ParseError("expected integer near '" + std::string(s.substr(0, 16)) + "'");
    Int v(std::string(s.substr(0, len)), 10);
    s.remove_prefix(len);
    return v;
}

std::string_view next_line(std::string_view& text) {
    const auto pos = text.find('\n');
    std::string_view line = text.substr(0, pos);
    text.remove_prefix(pos == std::string_view::npos ? text.size() : pos + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

}  // namespace

std::string to_canonical(const LaurentP& c) {
    if (c.is_zero()) return "[0; 0]";
    std::ostringstream os;
    const int lo = c.min_exp(), hi = c.max_exp();
    os << '[' << lo << "; ";
    for (int e = lo; e <= hi; ++e) {
        if (e != lo) os << ',';
        os << c.coeff(e).get_str();
    }
    os << ']';
    return os.str();
}

LaurentP laurent_from_canonical(std::string_view text) {
    if (!eat(text, '[')) throw ParseError("p-poly must start with '['");
    const Int lo = parse_int(text);
    if (!eat(text, ';')) throw ParseError("p-poly missing ';'");
    LaurentP r;
    int e = static_cast<int>(lo.get_si());
    for (;;) {
        r.add_term(e++, parse_int(text));
        if (!eat(text, ',')) break;
    }
    if (!eat(text, ']')) throw ParseError("p-poly missing ']'");
    return r;
}

std::string to_canonical(const SymPoly& s) {
    std::ostringstream os;
    os << "sympoly n=" << s.vars() << " terms=" << s.term_count() << '\n';
    for (const auto& [p, c] : s.terms())
        os << p.str(s.vars()) << " -> " << to_canonical(c) << '\n';
    return os.str();
}

SymPoly sympoly_from_canonical(std::string_view text) {
    std::string_view header = next_line(text);
    int n = -1;
    long terms = -1;
    if (header.rfind("sympoly n=", 0) != 0) throw ParseError("missing sympoly header");
    {
        std::string_view rest = header.substr(10);
        n = static_cast<int>(parse_int(rest).get_si());
        skip_ws(rest);
        if (rest.rfind("terms=", 0) != 0) throw ParseError("missing terms= in header");
        rest.remove_prefix(6);
        terms = parse_int(rest).get_si();
    }
    if (n < 0 || n > kMaxVars) throw ParseError("bad variable count");
    SymPoly r(n);
    for (long k = 0; k < terms; ++k) {
        std::string_view line = next_line(text);
        Partition p;
        std::string_view rest = line;
        for (int i = 0; i < n; ++i)
            p.parts[static_cast<std::size_t>(i)] =
                static_cast<int16_t>(parse_int(rest).get_si());
        skip_ws(rest);
        if (rest.rfind("->", 0) != 0) throw ParseError("term line missing '->'");
        rest.remove_prefix(2);
        r.add_term(p, laurent_from_canonical(rest));
    }
    return r;
}

std::string series_line(int degree, const SymPoly& coeff) {
    std::ostringstream os;
    os << "X^" << degree << ":";
    if (coeff.is_zero()) {
        os << " 0";
        return os.str();
    }
    bool first = true;
    for (const auto& [p, c] : coeff.terms()) {
        os << (first ? " " : " ; ") << p.str(coeff.vars()) << " -> " << to_canonical(c);
        first = false;
    }
    return os.str();
}

std::string pretty(const SymPoly& s) {
    if (s.is_zero()) return "0";
    int shift = 0;
    bool have = false;
    for (const auto& [p, c] : s.terms()) {
        const int m = c.min_exp();
        shift = have ? std::min(shift, m) : m;
        have = true;
    }
    std::ostringstream os;
    if (shift != 0) os << "p^" << shift << " * ";
    std::ostringstream body;
    bool first = true;
    bool several = s.term_count() > 1;
    for (const auto& [p, c] : s.terms()) {
        if (!first) body << " + ";
        first = false;
        const LaurentP cs = c.mul_p_pow(-shift);
        const bool trivial = cs.is_one();
        const bool constant = p.degree() == 0;
        if (constant) {
            body << cs.str();
            continue;
        }
        if (!trivial) {
            if (cs.term_count() > 1)
                body << "(" << cs.str() << ")";
            else
                body << cs.str();
            body << " * ";
        }
        body << "sym[";
        for (int i = 0; i < s.vars(); ++i) body << (i ? "," : "") << p[i];
        body << "]";
    }
    if (several && shift != 0)
        os << "(" << body.str() << ")";
    else
        os << body.str();
    return os.str();
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : data) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view data) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return std::string(buf);
}

}  // namespace hecke
