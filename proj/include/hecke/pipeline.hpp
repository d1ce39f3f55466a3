#ifndef HECKE_PIPELINE_HPP
#define HECKE_PIPELINE_HPP

#include <filesystem>
#include <memory>
#include <optional>

#include "hecke/inversion.hpp"

namespace hecke::pipe {

inline constexpr const char* kEngineVersion = "1.0.0";

struct StageTiming {
    std::string stage;
    double seconds = 0.0;
};

/// Everything one theorem run produces, plus the deterministic counts the
/// manifest records.  Timings are the only non-deterministic payload.
struct TheoremResult {
    int n = 0;
    int bound = 0;  // requested numerator truncation (2^n - 2 for a full run)
    std::vector<inv::HeckePoly> E;  // X-degrees 0..min(bound, 2^n-2)
    std::vector<inv::HeckePoly> F;  // X-degrees 0..min(2^n, ...)
    sp::SymSeries omega_E;          // spherical image of the numerator
    sp::SymSeries omega_F;          // spherical image of the denominator
    std::size_t omega_evaluations = 0;   // primitive table size the run rests on
    std::vector<std::size_t> e_system_sizes;  // unknown counts per degree
    std::vector<std::size_t> f_system_sizes;
    std::vector<StageTiming> timings;
    std::size_t omega_computed = 0;  // cold evaluations this run
    std::size_t omega_loaded = 0;    // cache hits this run

    std::string manifest_id() const;
    bool full() const { return bound >= (1 << n) - 2; }
};

struct RunConfig {
    int n = 4;
    std::optional<int> degree;  // truncation override
    std::optional<std::filesystem::path> cache_dir;
    int jobs = 1;
};

TheoremResult run_theorem(const RunConfig& cfg,
                          std::shared_ptr<gl::OmegaTable> table = nullptr);

// Writes E_deg*.txt / F_deg*.txt, omega_E.txt / omega_F.txt, E.json /
// F.json and manifest.json under out_dir.  Byte-identical for identical
// configurations except for the manifest "timings" object.
void write_results(const TheoremResult& r, const std::filesystem::path& out_dir);

std::string manifest_json(const TheoremResult& r);

}  // namespace hecke::pipe

#endif
