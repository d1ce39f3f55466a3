// Command-line driver: compute spherical images, run the full generating
// series pipeline, and execute the verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "hecke/canonical.hpp"
#include "hecke/errors.hpp"
#include "hecke/verify.hpp"

#ifndef HECKE_FIXTURES_DEFAULT
#define HECKE_FIXTURES_DEFAULT "fixtures"
#endif

namespace {

using namespace hecke;

int cmd_omega(int n, const std::string& delta_csv, const std::string& format) {
    std::vector<int> deltas;
    std::stringstream ss(delta_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) deltas.push_back(std::stoi(tok));
    const gl::DeltaTuple d = gl::DeltaTuple::of(n, deltas);  // rejects unsorted input
    const SymPoly value = gl::omega_t(d);
    const auto note = gl::erratum_note(d);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["delta"] = deltas;
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [part, c] : value.terms()) {
            nlohmann::ordered_json t;
            std::vector<int> sym;
            for (int i = 0; i < n; ++i) sym.push_back(part[i]);
            t["sym"] = sym;
            t["p"]["min"] = c.min_exp();
            std::vector<std::string> coeffs;
            for (int e = c.min_exp(); e <= c.max_exp(); ++e)
                coeffs.push_back(c.coeff(e).get_str());
            t["p"]["coeffs"] = coeffs;
            terms.push_back(t);
        }
        j["terms"] = terms;
        if (note) j["erratum"] = *note;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << pretty(value) << "\n";
        if (note) std::cout << *note << "\n";
    }
    return 0;
}

int cmd_theorem(const pipe::RunConfig& cfg, const std::string& out_dir) {
    std::cerr << "theorem: genus " << cfg.n << ", jobs " << cfg.jobs << "\n";
    const pipe::TheoremResult r = pipe::run_theorem(cfg);
    for (const auto& t : r.timings)
        std::cerr << "stage " << t.stage << ": " << t.seconds << " s\n";
    pipe::write_results(r, out_dir);
    std::cout << out_dir << "/manifest.json\n";
    return 0;
}

int cmd_verify(const std::vector<std::string>& ids, ver::Context& ctx,
               const std::string& format) {
    std::vector<std::string> run = ids.empty() ? ver::all_check_ids() : ids;
    std::vector<ver::CheckReport> reports;
    for (const auto& id : run) {
        std::cerr << "running check " << id << "\n";
        for (auto& r : ver::run_check(id, ctx)) reports.push_back(std::move(r));
    }
    bool ok = true;
    if (format == "json") {
        std::cout << ver::reports_json(reports);
        for (const auto& r : reports) ok = ok && r.ok();
    } else {
        for (const auto& r : reports) {
            std::cout << ver::report_line(r) << "\n";
            ok = ok && r.ok();
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hecke-operator generating series engine"};
    app.require_subcommand(1);

    int n = 4;
    std::string delta;
    std::string format = "text";
    std::string out_dir;
    std::string cache_dir;
    std::string fixtures = HECKE_FIXTURES_DEFAULT;
    int jobs = 1;
    int degree = -1;
    std::vector<std::string> checks;

    auto* omega = app.add_subcommand("omega", "spherical image of one diagonal coset");
    omega->add_option("--n", n, "genus")->required();
    omega->add_option("--delta", delta, "comma separated non-decreasing exponents")
        ->required();
    omega->add_option("--format", format, "text|json")->envname("HECKE_FORMAT");

    auto* theorem = app.add_subcommand("theorem", "compute E(X) and F(X) for one genus");
    theorem->add_option("--n", n, "genus")->required();
    theorem->add_option("--degree", degree, "truncation override")->envname("HECKE_DEGREE");
    theorem->add_option("--out", out_dir, "output directory")->envname("HECKE_OUT");
    theorem->add_option("--cache", cache_dir, "omega cache directory")->envname("HECKE_CACHE");
    theorem->add_option("--jobs", jobs, "worker count")->envname("HECKE_JOBS");

    auto* verify = app.add_subcommand("verify", "run identity checks");
    verify->add_option("--check", checks, "check ids (default: all)");
    verify->add_option("--cache", cache_dir, "omega cache directory")->envname("HECKE_CACHE");
    verify->add_option("--jobs", jobs, "worker count")->envname("HECKE_JOBS");
    verify->add_option("--fixtures", fixtures, "fixtures directory")->envname("HECKE_FIXTURES");
    verify->add_option("--format", format, "text|json")->envname("HECKE_FORMAT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (format != "text" && format != "json")
            throw hecke::UsageError("--format must be text or json");
        if (omega->parsed()) return cmd_omega(n, delta, format);
        if (theorem->parsed()) {
            hecke::pipe::RunConfig cfg;
            cfg.n = n;
            if (degree >= 0) cfg.degree = degree;
            if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
            cfg.jobs = jobs;
            if (out_dir.empty()) out_dir = "out-n" + std::to_string(n);
            return cmd_theorem(cfg, out_dir);
        }
        hecke::ver::Context ctx;
        if (!cache_dir.empty()) ctx.cache_dir = cache_dir;
        ctx.fixtures_dir = fixtures;
        ctx.jobs = jobs;
        return cmd_verify(checks, ctx, format);
    } catch (const hecke::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const hecke::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
