// Compares the serial reference implementations against the OpenMP paths
// on the three data-parallel kernels: the rank-count enumeration, the
// primitive omega table, and the numerator-sum assembly.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "hecke/spseries.hpp"

using namespace hecke;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const std::function<void()>& fn) {
    const auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.3f s %10.3f s %8.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    const int jobs = argc > 1 ? std::atoi(argv[1]) : 4;
    const int depth = argc > 2 ? std::atoi(argv[2]) : 8;
    std::printf("jobs=%d omega-depth=%d\n", jobs, depth);
    std::printf("%-28s %12s %12s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        gl::RankCounts a, b;
        const double ts = time_of([&] { a = gl::lp_oracle_serial(5, 4); });
        const double tp = time_of([&] { b = gl::lp_oracle(5, 4); });
        if (a != b) {
            std::fprintf(stderr, "rank-count mismatch between implementations\n");
            return 1;
        }
        row("lp_oracle p=5 a=4", ts, tp);
    }
    {
        gl::OmegaTable serial(4), parallel(4);
        const double ts = time_of([&] { serial.build(depth, 1); });
        const double tp = time_of([&] { parallel.build(depth, jobs); });
        row("omega table n=4", ts, tp);
    }
    {
        gl::OmegaTable t1(4), t2(4);
        t1.build(depth, jobs);
        t2.build(depth, jobs);
        sp::SymSeries s1(4, depth), s2(4, depth);
        const double ts = time_of([&] { s1 = sp::numerator_sum(4, depth, t1, 1); });
        const double tp = time_of([&] { s2 = sp::numerator_sum(4, depth, t2, jobs); });
        if (!(s1 == s2)) {
            std::fprintf(stderr, "numerator-sum mismatch between implementations\n");
            return 1;
        }
        row("numerator_sum n=4", ts, tp);
    }
    return 0;
}
