#ifndef HECKE_VERIFY_HPP
#define HECKE_VERIFY_HPP

#include <map>
#include <memory>

#include "hecke/pipeline.hpp"

namespace hecke::ver {

struct CheckReport {
    std::string id;
    enum class Status { pass, fail, erratum_noted } status = Status::pass;
    std::string witness;  // first differing coefficient for failures

    bool ok() const { return status != Status::fail; }
    std::string status_str() const;
};

// Right side of the numerator functional relation as a partition transform:
// p -> 1/p on coefficients, partition -> (M - reversed partition) with
// M = 2^{n-1} - 1, all times (-1)^{n-1} p^{-n(n-1)/2}.  Maps the X^k
// coefficient onto the X^{(2^n-2)-k} one; an involution.
SymPoly functional_transform(const SymPoly& s, int k, int n);

// Siegel-operator genus reduction on Hecke coordinates: [p]_n -> 0,
// T(p) -> T(p), T_i(p^2) -> T_i(p^2) for i < n-1, T_{n-1}(p^2) -> [p]_{n-1}.
inv::HeckePoly genus_reduce_hecke(const inv::HeckePoly& h);

/// Provenance class of a golden coefficient: transcribed from a printed
/// display, or reconstructed by a stated rule.
enum class Provenance { printed, derived };

struct GoldenSide {
    char side = 'E';
    int n = 0;
    std::vector<std::pair<inv::HeckePoly, Provenance>> coefficients;
};

GoldenSide load_golden(const std::filesystem::path& file);
std::string save_golden(const GoldenSide& g);

/// Lazily computed pipelines shared by the checks.
class Context {
  public:
    std::optional<std::filesystem::path> cache_dir;
    std::filesystem::path fixtures_dir;
    int jobs = 1;

    const pipe::TheoremResult& theorem(int n);
    gl::OmegaTable& table(int n);

    // install a precomputed (or deliberately perturbed) result
    void inject(int n, pipe::TheoremResult r) { results_.insert_or_assign(n, std::move(r)); }

  private:
    std::map<int, pipe::TheoremResult> results_;
    std::map<int, std::shared_ptr<gl::OmegaTable>> tables_;
};

std::vector<std::string> all_check_ids();

// Runs one registered check; unknown ids raise UsageError listing the
// valid ones.  A check may emit several reports (informational analogues).
std::vector<CheckReport> run_check(const std::string& id, Context& ctx);

// Individual checks, callable directly on computed data.
CheckReport check_functional_equation(const sp::SymSeries& e_img, int n);
CheckReport check_satake_specialization(const sp::SymSeries& e_img);
std::vector<CheckReport> check_genus_reduction(Context& ctx);
CheckReport check_golden(const pipe::TheoremResult& r,
                         const std::filesystem::path& fixtures_dir);
CheckReport check_omega_homomorphism(int max_n);
CheckReport check_lp_oracle();
std::vector<CheckReport> check_denominator_symmetry(Context& ctx);
std::vector<CheckReport> check_series_crosscheck(Context& ctx);

std::string report_line(const CheckReport& r);
std::string reports_json(const std::vector<CheckReport>& rs);

}  // namespace hecke::ver

#endif
