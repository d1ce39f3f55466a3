#include "hecke/exprdsl.hpp"

#include <cctype>
#include <fstream>

#include "hecke/errors.hpp"

namespace hecke::dsl {

namespace {

// one recursive-descent parser instantiated for both value domains
template <class Ring>
class Parser {
  public:
    Parser(std::string_view text, std::function<Ring(const std::string&)> atom,
           std::function<Ring(long)> constant)
        : s_(text), atom_(std::move(atom)), constant_(std::move(constant)) {}

    Ring parse() {
        Ring v = expr();
        skip();
        if (!s_.empty()) throw ParseError("trailing input near '" + take(16) + "'");
        return v;
    }

  private:
    void skip() {
        while (!s_.empty() && std::isspace(static_cast<unsigned char>(s_.front())))
            s_.remove_prefix(1);
    }

    bool eat(char c) {
        skip();
        if (s_.empty() || s_.front() != c) return false;
        s_.remove_prefix(1);
        return true;
    }

    char peek() {
        skip();
        return s_.empty() ? '\0' : s_.front();
    }

    std::string take(std::size_t k) { return std::string(s_.substr(0, k)); }

    long integer() {
        skip();
        std::size_t len = 0;
        while (len < s_.size() && std::isdigit(static_cast<unsigned char>(s_[len]))) ++len;
        if (!len) throw ParseError("expected integer near '" + take(16) + "'");
        long v = std::stol(std::string(s_.substr(0, len)));
        s_.remove_prefix(len);
        return v;
    }

    Ring expr() {
        Ring v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    Ring term() {
        Ring v = factor();
        while (eat('*')) v = v * factor();
        return v;
    }

    Ring factor() {
        Ring v = primary();
        if (eat('^')) {
            const long e = integer();
            if (e < 0) throw ParseError("negative exponent on a ring element");
            v = v.pow(static_cast<unsigned>(e));
        }
        return v;
    }

    Ring primary() {
        skip();
        if (eat('(')) {
            Ring v = expr();
            if (!eat(')')) throw ParseError("missing ')'");
            return v;
        }
        if (peek() == '-') {
            s_.remove_prefix(1);
            return constant_(0) - factor();
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) return constant_(integer());
        // identifier, possibly sym[...]
        std::size_t len = 0;
        while (len < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[len])) || s_[len] == '_'))
            ++len;
        if (!len) throw ParseError("expected atom near '" + take(16) + "'");
        std::string name(s_.substr(0, len));
        s_.remove_prefix(len);
        if (name == "sym") {
            if (!eat('[')) throw ParseError("sym needs [parts]");
            name += '[';
            for (;;) {
                name += std::to_string(integer());
                if (eat(']')) break;
                if (!eat(',')) throw ParseError("sym parts must be comma separated");
                name += ',';
            }
            name += ']';
        }
        return atom_(name);
    }

    std::string_view s_;
    std::function<Ring(const std::string&)> atom_;
    std::function<Ring(long)> constant_;
};

// p^k exponent parsing is handled by the generic '^' rule; p itself is an atom

}  // namespace

inv::HeckePoly parse_hecke(std::string_view text, int n) {
    auto atom = [n](const std::string& name) -> inv::HeckePoly {
        if (name == "p")
            return inv::HeckePoly::constant(n, LaurentP::p_pow(1));
        if (name == "pinv")
            return inv::HeckePoly::constant(n, LaurentP::p_pow(-1));
        if (name == "T")
            return inv::HeckePoly::generator(n, 0);
        if (name == "Pb")
            return inv::HeckePoly::generator(n, n);
        if (name.size() >= 2 && name[0] == 'T') {
            const int i = std::stoi(name.substr(1));
            if (i >= 1 && i <= n) return inv::HeckePoly::generator(n, i);
        }
        throw ParseError("unknown Hecke atom '" + name + "'");
    };
    auto constant = [n](long v) { return inv::HeckePoly::constant(n, LaurentP(v)); };
    return Parser<inv::HeckePoly>(text, atom, constant).parse();
}

SymPoly parse_sym(std::string_view text, int n) {
    auto atom = [n](const std::string& name) -> SymPoly {
        if (name == "p") return SymPoly::constant(n, LaurentP::p_pow(1));
        if (name == "pinv") return SymPoly::constant(n, LaurentP::p_pow(-1));
        if (name.rfind("sym[", 0) == 0) {
            Partition p;
            int idx = 0;
            std::size_t pos = 4;
            while (pos < name.size() && name[pos] != ']') {
                std::size_t next = name.find_first_of(",]", pos);
                p.parts[static_cast<std::size_t>(idx++)] =
                    static_cast<int16_t>(std::stoi(name.substr(pos, next - pos)));
                pos = next + (name[next] == ',' ? 1 : 0);
            }
            if (idx != n) throw ParseError("sym arity != n in '" + name + "'");
            return SymPoly::term(n, p, LaurentP::one());
        }
        throw ParseError("unknown symmetric atom '" + name + "'");
    };
    auto constant = [n](long v) { return SymPoly::constant(n, LaurentP(v)); };
    return Parser<SymPoly>(text, atom, constant).parse();
}

std::vector<Record> read_records(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open fixture file " + file.string());
    std::vector<Record> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("fixture line without '=': " + line);
        std::string name = line.substr(0, eq);
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
            name.pop_back();
        out.push_back(Record{name, line.substr(eq + 1)});
    }
    return out;
}

TheoremFixture load_theorem_fixture(const std::filesystem::path& file) {
    const std::vector<Record> records = read_records(file);
    TheoremFixture out;
    for (const auto& r : records)
        if (r.name == "n") out.n = std::stoi(r.expr);
    if (out.n < 1) throw ParseError("fixture must declare n");
    const int n = out.n;
    const std::size_t e_count = static_cast<std::size_t>((1 << n) - 2) + 1;
    const std::size_t f_count = static_cast<std::size_t>(1 << n) + 1;
    out.E.assign(e_count, {inv::HeckePoly(n), true});
    out.F.assign(f_count, {inv::HeckePoly(n), false});
    for (const auto& r : records) {
        if (r.name == "n") continue;
        const char side = r.name.front();
        if (side != 'E' && side != 'F') throw ParseError("unknown record " + r.name);
        const std::size_t k = static_cast<std::size_t>(std::stoi(r.name.substr(1)));
        auto& slot = side == 'E' ? out.E : out.F;
        if (k >= slot.size()) throw ParseError("degree out of range in " + r.name);
        slot[k] = {parse_hecke(r.expr, n), true};
    }
    // mirror rule for the untranscribed denominator half
    const int half = 1 << (n - 1);
    for (int i = half + 1; i <= (1 << n); ++i) {
        auto& [h, printed] = out.F[static_cast<std::size_t>(i)];
        if (printed) continue;
        const int j = i - half;
        h = out.F[static_cast<std::size_t>((1 << n) - i)].first.mul_scalar_power(
            j, LaurentP::p_pow(j * n * (n + 1) / 2));
    }
    for (std::size_t i = 0; i <= static_cast<std::size_t>(half); ++i)
        if (!out.F[i].second) throw ParseError("lower denominator half must be printed");
    return out;
}

}  // namespace hecke::dsl
