#include "hecke/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "hecke/canonical.hpp"
#include "hecke/errors.hpp"

namespace hecke::pipe {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double elapsed(Clock::time_point since) {
    return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string deg_name(const char* prefix, int k) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s_deg%02d.txt", prefix, k);
    return buf;
}

nlohmann::ordered_json hecke_json(const inv::HeckePoly& h, int k) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : h.terms()) {
        nlohmann::ordered_json t;
        t["gen"] = m.key();
        nlohmann::ordered_json pc;
        pc["min"] = c.min_exp();
        std::vector<std::string> coeffs;
        for (int e = c.min_exp(); e <= c.max_exp(); ++e) coeffs.push_back(c.coeff(e).get_str());
        pc["coeffs"] = coeffs;
        t["p"] = pc;
        terms.push_back(t);
    }
    nlohmann::ordered_json out;
    out["X"] = k;
    out["terms"] = terms;
    return out;
}

}  // namespace

std::string TheoremResult::manifest_id() const {
    return "n" + std::to_string(n) + "-B" + std::to_string(bound) + "-v" + kEngineVersion;
}

TheoremResult run_theorem(const RunConfig& cfg, std::shared_ptr<gl::OmegaTable> table) {
    const int n = cfg.n;
    if (n < 1 || n > kMaxVars) throw UsageError("genus out of range");
    const int e_degree = (1 << n) - 2;
    const int f_degree = 1 << n;
    const int half = 1 << (n - 1);
    const int bound = cfg.degree ? std::max(0, std::min(*cfg.degree, e_degree)) : e_degree;
    const int f_bound = cfg.degree ? std::min(*cfg.degree, f_degree) : f_degree;
    const int jobs = std::max(1, cfg.jobs);

    if (!table) table = std::make_shared<gl::OmegaTable>(n, cfg.cache_dir);

    TheoremResult out{.n = n,
                      .bound = bound,
                      .E = {},
                      .F = {},
                      .omega_E = sp::SymSeries(n, std::max(bound, 0)),
                      .omega_F = sp::SymSeries(n, f_degree),
                      .omega_evaluations = 0,
                      .e_system_sizes = {},
                      .f_system_sizes = {},
                      .timings = {},
                      .omega_computed = 0,
                      .omega_loaded = 0};

    auto t0 = Clock::now();
    table->build(bound, jobs);
    out.timings.push_back({"omega-table", elapsed(t0)});
    out.omega_evaluations = table->size();

    t0 = Clock::now();
    if (bound == e_degree) {
        out.omega_E = sp::e_image(n, *table, jobs);
    } else {
        // partial run: truncated numerator sum times the inner factors
        sp::SymSeries s = sp::numerator_sum(n, bound, *table, jobs);
        std::vector<MultiPoly> coef;
        for (int k = 0; k <= bound; ++k) coef.push_back(s.at(k).expand());
        // reuse the e_image construction degree by degree
        // (subsets excluding the empty and the full one)
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            ExpVec mono{};
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) mono[static_cast<std::size_t>(i)] = 1;
            for (int k = bound; k >= 1; --k)
                coef[static_cast<std::size_t>(k)].add_scaled_shift(
                    coef[static_cast<std::size_t>(k - 1)], mono, LaurentP(-1));
        }
        for (int k = 0; k <= bound; ++k)
            out.omega_E.at(k) = sym_from_multi(coef[static_cast<std::size_t>(k)]);
    }
    out.timings.push_back({"e-image", elapsed(t0)});

    t0 = Clock::now();
    out.omega_F = sp::f_image(n, f_degree);
    out.timings.push_back({"f-image", elapsed(t0)});

    t0 = Clock::now();
    inv::ImageCache images(sp::generator_images(n, *table));

    out.E.reserve(static_cast<std::size_t>(bound) + 1);
    for (int k = 0; k <= bound; ++k) {
        out.e_system_sizes.push_back(inv::enumerate_monomials(n, k).size());
        out.E.push_back(k < half ? inv::invert_coefficient(out.omega_E.at(k), k, images)
                                 : inv::invert_via_divide_out(out.omega_E.at(k), k, images));
    }
    out.timings.push_back({"invert-E", elapsed(t0)});

    t0 = Clock::now();
    const int f_direct = std::min(f_bound, half);
    for (int k = 0; k <= f_direct; ++k) {
        out.f_system_sizes.push_back(inv::enumerate_monomials(n, k).size());
        out.F.push_back(inv::invert_coefficient(out.omega_F.at(k), k, images));
    }
    // the higher half mirrors the lower one
    for (int k = f_direct + 1; k <= f_bound && k <= f_degree; ++k) {
        const int j = k - half;
        out.F.push_back(out.F[static_cast<std::size_t>(f_degree - k)].mul_scalar_power(
            j, LaurentP::p_pow(j * n * (n + 1) / 2)));
        out.f_system_sizes.push_back(0);
    }
    out.timings.push_back({"invert-F", elapsed(t0)});

    out.omega_computed = table->computed();
    out.omega_loaded = table->loaded();
    return out;
}

std::string manifest_json(const TheoremResult& r) {
    nlohmann::ordered_json m;
    m["id"] = r.manifest_id();
    m["engine_version"] = kEngineVersion;
    m["genus"] = r.n;
    m["truncation_bound"] = r.bound;
    nlohmann::ordered_json counts;
    counts["omega_evaluations"] = r.omega_evaluations;
    counts["e_coefficients"] = r.E.size();
    counts["f_coefficients"] = r.F.size();
    counts["e_system_sizes"] = r.e_system_sizes;
    counts["f_system_sizes"] = r.f_system_sizes;
    m["counts"] = counts;
    nlohmann::ordered_json t;
    for (const auto& st : r.timings) t[st.stage] = st.seconds;
    t["omega_computed"] = r.omega_computed;
    t["omega_cache_loaded"] = r.omega_loaded;
    m["timings"] = t;
    return m.dump(2) + "\n";
}

void write_results(const TheoremResult& r, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    const std::string ref = "# manifest: manifest.json; run " + r.manifest_id() + "\n";

    auto write = [&](const fs::path& name, const std::string& body) {
        std::ofstream out(out_dir / name, std::ios::binary);
        out << body;
    };

    for (std::size_t k = 0; k < r.E.size(); ++k)
        write(deg_name("E", static_cast<int>(k)), ref + r.E[k].serialize());
    for (std::size_t k = 0; k < r.F.size(); ++k)
        write(deg_name("F", static_cast<int>(k)), ref + r.F[k].serialize());
    write("omega_E.txt", ref + r.omega_E.serialize());
    write("omega_F.txt", ref + r.omega_F.serialize());

    for (const char* side : {"E", "F"}) {
        const auto& polys = *side == 'E' ? r.E : r.F;
        nlohmann::ordered_json j;
        j["manifest"] = r.manifest_id();
        j["side"] = side;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < polys.size(); ++k)
            arr.push_back(hecke_json(polys[k], static_cast<int>(k)));
        j["coefficients"] = arr;
        write(std::string(side) + ".json", j.dump(2) + "\n");
    }
    write("manifest.json", manifest_json(r));
}

}  // namespace hecke::pipe
