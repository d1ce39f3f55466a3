#include "hecke/verify.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hecke/canonical.hpp"
#include "hecke/errors.hpp"

namespace hecke::ver {

namespace fs = std::filesystem;

std::string CheckReport::status_str() const {
    switch (status) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::erratum_noted: return "erratum-noted";
    }
    return "?";
}

SymPoly functional_transform(const SymPoly& s, int k, int n) {
    const int cap = (1 << (n - 1)) - 1;
    (void)k;
    SymPoly out(n);
    for (const auto& [p, c] : s.terms()) {
        Partition q;
        for (int i = 0; i < n; ++i) {
            const int v = cap - p[n - 1 - i];
            if (v < 0)
                throw Error("functional transform misapplied: part " +
                            std::to_string(p[n - 1 - i]) + " exceeds " + std::to_string(cap));
            q.parts[static_cast<std::size_t>(i)] = static_cast<int16_t>(v);
        }
        out.add_term(q, c.invert_p());
    }
    const LaurentP prefactor =
        LaurentP::term(Int((n - 1) % 2 ? -1 : 1), -n * (n - 1) / 2);
    return out.mul_scalar(prefactor);
}

inv::HeckePoly genus_reduce_hecke(const inv::HeckePoly& h) {
    const int n = h.genus();
    if (n < 2) throw UsageError("cannot reduce below genus 1");
    inv::HeckePoly out(n - 1);
    for (const auto& [m, c] : h.terms()) {
        if (m.e > 0) continue;  // [p]_n maps to zero
        inv::GenMonomial r = inv::GenMonomial::unit(n - 1);
        r.a = m.a;
        for (int i = 0; i + 1 < n - 1; ++i) r.b[static_cast<std::size_t>(i)] = m.b[static_cast<std::size_t>(i)];
        r.e = m.b.back();  // T_{n-1}(p^2) becomes the scalar operator
        out.add_term(r, c);
    }
    return out;
}

std::string save_golden(const GoldenSide& g) {
    std::ostringstream os;
    os << "golden " << g.side << " n=" << g.n << " degrees=" << g.coefficients.size() << '\n';
    for (std::size_t k = 0; k < g.coefficients.size(); ++k) {
        const auto& [h, prov] = g.coefficients[k];
        os << "X " << k << ' ' << (prov == Provenance::printed ? "printed" : "derived")
           << '\n'
           << h.serialize();
    }
    return os.str();
}

GoldenSide load_golden(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open golden fixture " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::istringstream is(text);
    std::string header;
    std::getline(is, header);
    GoldenSide g;
    char side = 0;
    int n = 0;
    long degrees = 0;
    if (std::sscanf(header.c_str(), "golden %c n=%d degrees=%ld", &side, &n, &degrees) != 3)
        throw ParseError("bad golden header in " + file.string());
    g.side = side;
    g.n = n;
    for (long k = 0; k < degrees; ++k) {
        std::string mark;
        std::getline(is, mark);
        int deg = 0;
        char prov[16] = {0};
        if (std::sscanf(mark.c_str(), "X %d %15s", &deg, prov) != 2 || deg != k)
            throw ParseError("bad golden block marker '" + mark + "'");
        std::string hp_header;
        std::getline(is, hp_header);
        long terms = 0;
        int hp_n = 0;
        if (std::sscanf(hp_header.c_str(), "heckepoly n=%d terms=%ld", &hp_n, &terms) != 2)
            throw ParseError("bad heckepoly header in golden block");
        std::string block = hp_header + "\n";
        for (long t = 0; t < terms; ++t) {
            std::string line;
            std::getline(is, line);
            block += line + "\n";
        }
        g.coefficients.emplace_back(inv::HeckePoly::from_serialized(block),
                                    std::string(prov) == "printed" ? Provenance::printed
                                                                   : Provenance::derived);
    }
    return g;
}

const pipe::TheoremResult& Context::theorem(int n) {
    auto it = results_.find(n);
    if (it == results_.end()) {
        pipe::RunConfig cfg;
        cfg.n = n;
        cfg.cache_dir = cache_dir;
        cfg.jobs = jobs;
        it = results_.emplace(n, pipe::run_theorem(cfg, tables_.count(n) ? tables_[n] : nullptr))
                 .first;
    }
    return it->second;
}

gl::OmegaTable& Context::table(int n) {
    auto it = tables_.find(n);
    if (it == tables_.end())
        it = tables_.emplace(n, std::make_shared<gl::OmegaTable>(n, cache_dir)).first;
    return *it->second;
}

CheckReport check_functional_equation(const sp::SymSeries& e_img, int n) {
    CheckReport rep{"functional-eq-n" + std::to_string(n), CheckReport::Status::pass, ""};
    const int degree = (1 << n) - 2;
    for (int k = 0; k <= degree; ++k) {
        const SymPoly lhs = functional_transform(e_img.at(k), k, n);
        const SymPoly& rhs = e_img.at(degree - k);
        if (lhs != rhs) {
            rep.status = CheckReport::Status::fail;
            SymPoly diff = lhs - rhs;
            rep.witness = "k=" + std::to_string(k) + " first differing term sym[" +
                          diff.leading().str(n) + "]";
            return rep;
        }
    }
    return rep;
}

CheckReport check_satake_specialization(const sp::SymSeries& e_img) {
    CheckReport rep{"satake", CheckReport::Status::pass, ""};
    const int n = e_img.vars();
    if (n != 4) throw UsageError("the Satake specialization factors are stated for genus 4");
    std::vector<LaurentP> values;
    for (int i = 1; i <= 4; ++i) values.push_back(LaurentP::p_pow(i));

    // (1-pX)(1-p^2X)(1-p^3X)^2(1-p^4X)(1+p^5X)(1-p^5X)^2(1-p^6X)^2(1-p^7X)
    // (1-p^8X)(1 + (p+p^2+2p^3+p^4+p^5+2p^6+p^7+p^8)X + p^9X^2)
    std::vector<LaurentP> product{LaurentP::one()};
    auto mul_factor = [&](const std::vector<LaurentP>& f) {
        std::vector<LaurentP> next(product.size() + f.size() - 1);
        for (std::size_t i = 0; i < product.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += product[i] * f[j];
        product = std::move(next);
    };
    auto linear = [](int sign, int e) {
        return std::vector<LaurentP>{LaurentP::one(), LaurentP::term(Int(sign), e)};
    };
    mul_factor(linear(-1, 1));
    mul_factor(linear(-1, 2));
    mul_factor(linear(-1, 3));
    mul_factor(linear(-1, 3));
    mul_factor(linear(-1, 4));
    mul_factor(linear(+1, 5));
    mul_factor(linear(-1, 5));
    mul_factor(linear(-1, 5));
    mul_factor(linear(-1, 6));
    mul_factor(linear(-1, 6));
    mul_factor(linear(-1, 7));
    mul_factor(linear(-1, 8));
    {
        LaurentP mid;
        for (int e : {1, 2, 4, 5, 7, 8}) mid.add_term(e, Int(1));
        mid.add_term(3, Int(2));
        mid.add_term(6, Int(2));
        mul_factor({LaurentP::one(), mid, LaurentP::p_pow(9)});
    }
    if (product.size() != 15) throw Error("Satake factor product has wrong degree");

    for (int k = 0; k <= 14; ++k) {
        const LaurentP lhs = e_img.at(k).substitute_all(values);
        if (lhs != product[static_cast<std::size_t>(k)]) {
            rep.status = CheckReport::Status::fail;
            rep.witness = "X^" + std::to_string(k) + ": specialized coefficient " + lhs.str() +
                          " vs product " + product[static_cast<std::size_t>(k)].str();
            return rep;
        }
    }
    return rep;
}

namespace {

CheckReport compare_sides(const std::string& id, const std::vector<inv::HeckePoly>& got,
                          const GoldenSide& want) {
    CheckReport rep{id, CheckReport::Status::pass, ""};
    long printed = 0, derived = 0;
    if (got.size() != want.coefficients.size()) {
        rep.status = CheckReport::Status::fail;
        rep.witness = "degree count " + std::to_string(got.size()) + " vs fixture " +
                      std::to_string(want.coefficients.size());
        return rep;
    }
    for (std::size_t k = 0; k < got.size(); ++k) {
        const auto& [h, prov] = want.coefficients[k];
        (prov == Provenance::printed ? printed : derived) += 1;
        if (got[k].serialize() != h.serialize()) {
            rep.status = CheckReport::Status::fail;
            rep.witness = std::string(1, want.side) + " X^" + std::to_string(k) +
                          (prov == Provenance::printed ? " (printed)" : " (derived)") +
                          " differs";
            return rep;
        }
    }
    rep.witness = std::to_string(printed) + " printed + " + std::to_string(derived) +
                  " derived coefficients match";
    return rep;
}

}  // namespace

CheckReport check_golden(const pipe::TheoremResult& r, const fs::path& fixtures_dir) {
    const std::string base = "n" + std::to_string(r.n);
    const GoldenSide ge = load_golden(fixtures_dir / "golden" / (base + "_E.txt"));
    const GoldenSide gf = load_golden(fixtures_dir / "golden" / (base + "_F.txt"));
    CheckReport re = compare_sides("golden-" + std::to_string(r.n), r.E, ge);
    if (!re.ok()) return re;
    CheckReport rf = compare_sides("golden-" + std::to_string(r.n), r.F, gf);
    if (!rf.ok()) return rf;
    re.witness = "E: " + re.witness + "; F: " + rf.witness;
    return re;
}

CheckReport check_omega_homomorphism(int max_n) {
    CheckReport rep{"omega-hom", CheckReport::Status::pass, ""};
    for (int n = 1; n <= max_n; ++n) {
        std::vector<SymPoly> pi_images;
        for (int i = 1; i <= n; ++i)
            pi_images.push_back(gl::omega_pi(gl::PiLabel::of(n, i, 0)));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const SymPoly lhs = sym_mul(pi_images[static_cast<std::size_t>(i - 1)],
                                            pi_images[static_cast<std::size_t>(j - 1)]);
                SymPoly rhs(n);
                for (const auto& term : gl::pi_product(i, j, n))
                    rhs += gl::omega_pi(term.label).mul_scalar(term.coeff);
                if (lhs != rhs) {
                    rep.status = CheckReport::Status::fail;
                    rep.witness = "n=" + std::to_string(n) + " pi_" + std::to_string(i) +
                                  "*pi_" + std::to_string(j);
                    return rep;
                }
            }
    }
    rep.witness = "all products up to n=" + std::to_string(max_n);
    return rep;
}

CheckReport check_lp_oracle() {
    CheckReport rep{"lp-oracle", CheckReport::Status::pass, ""};
    for (long p : {2L, 3L, 5L})
        for (int a = 1; a <= 4; ++a) {
            const gl::RankCounts counts = gl::lp_oracle(p, a);
            Int total = 1;
            for (int i = 0; i < a * (a + 1) / 2; ++i) total *= p;
            Int sum = 0;
            for (int r = 0; r <= a; ++r) {
                const Int formula = gl::lp(r, a).eval_int(Int(p));
                if (formula != counts[static_cast<std::size_t>(r)]) {
                    rep.status = CheckReport::Status::fail;
                    rep.witness = "p=" + std::to_string(p) + " a=" + std::to_string(a) +
                                  " r=" + std::to_string(r);
                    return rep;
                }
                sum += counts[static_cast<std::size_t>(r)];
            }
            if (sum != total) {
                rep.status = CheckReport::Status::fail;
                rep.witness = "completeness p=" + std::to_string(p) + " a=" + std::to_string(a);
                return rep;
            }
        }
    rep.witness = "p in {2,3,5}, a <= 4";
    return rep;
}

std::vector<CheckReport> check_denominator_symmetry(Context& ctx) {
    std::vector<CheckReport> out;
    const pipe::TheoremResult& r4 = ctx.theorem(4);
    CheckReport rep{"denom-symmetry", CheckReport::Status::pass, ""};

    // relation f_i = f_{16-i} * (p^10 [p])^{i-8} on the solved output
    for (int i = 8; i <= 16 && rep.ok(); ++i) {
        const inv::HeckePoly expect = r4.F[static_cast<std::size_t>(16 - i)].mul_scalar_power(
            i - 8, LaurentP::p_pow(10 * (i - 8)));
        if (r4.F[static_cast<std::size_t>(i)] != expect) {
            rep.status = CheckReport::Status::fail;
            rep.witness = "f_" + std::to_string(i);
        }
    }
    // spherical side: the image of every solved f_i equals the explicit
    // product coefficient, including the mirrored half
    if (rep.ok()) {
        inv::ImageCache images(sp::generator_images(4, ctx.table(4)));
        for (int i = 0; i <= 16; ++i) {
            if (images.image_of(r4.F[static_cast<std::size_t>(i)]) != r4.omega_F.at(i)) {
                rep.status = CheckReport::Status::fail;
                rep.witness = "image of f_" + std::to_string(i);
                break;
            }
        }
        // one direct inversion above the mirror point proves the method
        if (rep.ok()) {
            const inv::HeckePoly f9 = inv::invert_coefficient(r4.omega_F.at(9), 9, images);
            if (f9 != r4.F[9]) {
                rep.status = CheckReport::Status::fail;
                rep.witness = "direct inversion of f_9";
            }
        }
    }
    if (rep.ok()) rep.witness = "relation + images + direct f_9";
    out.push_back(std::move(rep));
    return out;
}

std::vector<CheckReport> check_genus_reduction(Context& ctx) {
    std::vector<CheckReport> out;
    CheckReport rep{"genus-reduction", CheckReport::Status::pass, ""};
    const pipe::TheoremResult& r4 = ctx.theorem(4);
    const pipe::TheoremResult& r3 = ctx.theorem(3);

    // (i) Hecke side
    for (std::size_t k = 0; k < r4.E.size() && rep.ok(); ++k) {
        const inv::HeckePoly red = genus_reduce_hecke(r4.E[k]);
        const inv::HeckePoly expect =
            k < r3.E.size() ? r3.E[k] : inv::HeckePoly(3);
        if (red != expect) {
            rep.status = CheckReport::Status::fail;
            rep.witness = "E_" + std::to_string(k) + " under the Siegel reduction";
        }
    }
    for (std::size_t k = 0; k < r4.F.size() && rep.ok(); ++k) {
        const inv::HeckePoly red = genus_reduce_hecke(r4.F[k]);
        const inv::HeckePoly expect =
            k < r3.F.size() ? r3.F[k] : inv::HeckePoly(3);
        if (red != expect) {
            rep.status = CheckReport::Status::fail;
            rep.witness = "F_" + std::to_string(k) + " under the Siegel reduction";
        }
    }
    // (ii) spherical side through X^6
    for (int k = 0; k <= 6 && rep.ok(); ++k) {
        const SymPoly left = sp::d_coefficient_direct(4, k, ctx.table(4)).set_last_var_zero();
        const SymPoly right = sp::d_coefficient_direct(3, k, ctx.table(3));
        if (left != right) {
            rep.status = CheckReport::Status::fail;
            rep.witness = "Omega(D) X^" + std::to_string(k) + " at x4=0";
        }
    }
    // (iii) generator images reduce
    if (rep.ok()) {
        const auto g4 = sp::generator_images(4, ctx.table(4));
        const auto g3 = sp::generator_images(3, ctx.table(3));
        // T(p) -> T(p); T1 -> T1; T2 -> T2; T3 -> [p]_3; [p]_4 -> 0
        const std::vector<int> target{0, 1, 2, 3, -1};
        for (std::size_t i = 0; i < g4.size() && rep.ok(); ++i) {
            const SymPoly red = g4[i].image.set_last_var_zero();
            const SymPoly expect = target[i] >= 0
                                       ? g3[static_cast<std::size_t>(target[i])].image
                                       : SymPoly(3);
            if (red != expect) {
                rep.status = CheckReport::Status::fail;
                rep.witness = "image of generator " + g4[i].id.name(4) + " at x4=0";
            }
        }
    }
    if (rep.ok()) rep.witness = "Hecke side, Omega(D) side and generator images";
    out.push_back(std::move(rep));
    return out;
}

std::vector<CheckReport> check_series_crosscheck(Context& ctx) {
    std::vector<CheckReport> out;
    CheckReport rep{"series-crosscheck", CheckReport::Status::pass, ""};
    for (int n = 2; n <= 4 && rep.ok(); ++n) {
        const pipe::TheoremResult& r = ctx.theorem(n);
        gl::OmegaTable& table = ctx.table(n);
        const sp::SymSeries inv_f = sp::series_inverse(r.omega_F, 3);
        const sp::SymSeries quotient = sp::series_mul(r.omega_E, inv_f, 3);
        const sp::SymSeries s = sp::numerator_sum(n, 3, table, ctx.jobs);
        // geometric factors 1/(1-x0 X) and 1/(1-x0 x1..xn X)
        sp::SymSeries geom(n, 3);
        for (int k = 0; k <= 3; ++k) {
            Partition all;
            for (int i = 0; i < n; ++i) all.parts[static_cast<std::size_t>(i)] = static_cast<int16_t>(k);
            geom.at(k) = SymPoly::term(n, all, LaurentP::one());
        }
        sp::SymSeries ones(n, 3);
        for (int k = 0; k <= 3; ++k) ones.at(k) = SymPoly::one(n);
        const sp::SymSeries recon = sp::series_mul(sp::series_mul(s, ones, 3), geom, 3);
        for (int k = 0; k <= 3 && rep.ok(); ++k) {
            const SymPoly direct = sp::d_coefficient_direct(n, k, table);
            if (direct != quotient.at(k)) {
                rep.status = CheckReport::Status::fail;
                rep.witness = "n=" + std::to_string(n) + " X^" + std::to_string(k) +
                              " series quotient";
            } else if (direct != recon.at(k)) {
                rep.status = CheckReport::Status::fail;
                rep.witness = "n=" + std::to_string(n) + " X^" + std::to_string(k) +
                              " geometric-split reconstruction";
            }
        }
    }
    if (rep.ok()) rep.witness = "degrees <= 3 at n in {2,3,4}";
    out.push_back(std::move(rep));
    return out;
}

std::vector<std::string> all_check_ids() {
    return {"golden-1",      "golden-2", "golden-3",      "golden-4",
            "omega-hom",     "lp-oracle", "functional-eq", "denom-symmetry",
            "satake",        "genus-reduction", "series-crosscheck"};
}

std::vector<CheckReport> run_check(const std::string& id, Context& ctx) {
    if (id == "omega-hom") return {check_omega_homomorphism(4)};
    if (id == "lp-oracle") return {check_lp_oracle()};
    if (id.rfind("golden-", 0) == 0 && id.size() == 8 && id[7] >= '1' && id[7] <= '4')
        return {check_golden(ctx.theorem(id[7] - '0'), ctx.fixtures_dir)};
    if (id == "functional-eq") {
        // the genus-4 relation is the stated one; lower genera are the
        // conjectural analogues, reported alongside
        std::vector<CheckReport> out;
        out.push_back(check_functional_equation(ctx.theorem(4).omega_E, 4));
        out.front().id = "functional-eq";
        for (int n : {2, 3}) {
            CheckReport r = check_functional_equation(ctx.theorem(n).omega_E, n);
            r.witness = "conjectural analogue" + (r.witness.empty() ? "" : ": " + r.witness);
            out.push_back(std::move(r));
        }
        return out;
    }
    if (id == "denom-symmetry") return check_denominator_symmetry(ctx);
    if (id == "satake") return {check_satake_specialization(ctx.theorem(4).omega_E)};
    if (id == "genus-reduction") return check_genus_reduction(ctx);
    if (id == "series-crosscheck") return check_series_crosscheck(ctx);
    std::string valid;
    for (const auto& v : all_check_ids()) valid += (valid.empty() ? "" : ", ") + v;
    throw UsageError("unknown check id '" + id + "'; valid ids: " + valid);
}

std::string report_line(const CheckReport& r) {
    std::string line = "check " + r.id + ": " + r.status_str();
    if (!r.witness.empty()) line += " (" + r.witness + ")";
    return line;
}

std::string reports_json(const std::vector<CheckReport>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) {
        nlohmann::ordered_json j;
        j["check"] = r.id;
        j["status"] = r.status_str();
        if (!r.witness.empty()) j["witness"] = r.witness;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

}  // namespace hecke::ver
