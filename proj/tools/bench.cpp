// Timing harness for the parallel kernels against their serial reference
// implementations: dense matrix product and subset distance cache.

#include "wdist/cmatrix.hpp"
#include "wdist/parallel.hpp"
#include "wdist/states.hpp"
#include "wdist/weighted.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

wdist::CMatrix random_matrix(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    wdist::CMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = wdist::cplx(g(rng), g(rng));
    return m;
}

void report(const char* name, double serial_s, double parallel_s, bool match) {
    std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n", name,
                serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s,
                match ? "results match" : "RESULTS DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    int n = 8;
    int reps = 3;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--n" && i + 1 < argc) n = std::atoi(argv[++i]);
        else if (arg == "--reps" && i + 1 < argc) reps = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--n QUBITS] [--reps REPS]\n", argv[0]);
            return 1;
        }
    }

    std::printf("workers available: %d\n", wdist::resolve_workers(0));

    std::mt19937_64 rng(12345);
    {
        const std::size_t dim = 256;
        const wdist::CMatrix a = random_matrix(dim, rng);
        const wdist::CMatrix b = random_matrix(dim, rng);
        double ts = 0.0, tp = 0.0;
        wdist::CMatrix cs, cp;
        for (int r = 0; r < reps; ++r) {
            auto t0 = clock_type::now();
            cs = wdist::matmul_serial(a, b);
            ts += seconds_since(t0);
            t0 = clock_type::now();
            cp = wdist::matmul(a, b);
            tp += seconds_since(t0);
        }
        report("matmul dim=256", ts / reps, tp / reps, cs == cp);
    }

    {
        const wdist::cplx h(1.0 / std::sqrt(2.0), 0.0);
        wdist::StateSpec ga, gb;
        ga.factors.push_back(wdist::ghz_factor(n, h, h));
        gb.factors.push_back(wdist::mixed_factor(n));
        const wdist::DensityMatrix rho = wdist::build_state(ga);
        const wdist::DensityMatrix sigma = wdist::build_state(gb);

        double ts = 0.0, tp = 0.0;
        bool match = true;
        for (int r = 0; r < reps; ++r) {
            auto t0 = clock_type::now();
            const auto cs = wdist::subset_distance_cache_serial(rho, sigma);
            ts += seconds_since(t0);
            t0 = clock_type::now();
            const auto cp = wdist::subset_distance_cache(rho, sigma);
            tp += seconds_since(t0);
            match = match && cs.bures == cp.bures && cs.fidelity == cp.fidelity;
        }
        const std::string name = "subset cache n=" + std::to_string(n);
        report(name.c_str(), ts / reps, tp / reps, match);
    }
    return 0;
}
