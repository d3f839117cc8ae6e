// Benchmark comparing the serial reference kernels against the OpenMP ones:
// adjacency table rows, hexagon scans, and the full verification sweep.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "midlevels/graphs.hpp"
#include "midlevels/hamilton.hpp"

using namespace midlevels;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return static_cast<double>(clock()) / CLOCKS_PER_SEC;
#endif
}

template <typename F>
double time_best_of(int reps, F&& f) {
    f(); // warm-up
    double best = 1e100;
    for (int r = 0; r < reps; ++r) {
        double t0 = now();
        f();
        best = std::min(best, now() - t0);
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-34s %9.3f ms %9.3f ms %6.2fx\n", name, serial * 1e3, parallel * 1e3,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    int kcat = argc > 1 ? std::atoi(argv[1]) : 8;
    int kham = argc > 2 ? std::atoi(argv[2]) : 6;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-34s %12s %12s %7s\n", "kernel", "serial", "parallel", "speedup");

    {
        CatTable ref;
        double s = time_best_of(3, [&] { ref = cat_table_serial(kcat); });
        CatTable par;
        double p = time_best_of(3, [&] { par = cat_table(kcat); });
        if (!(ref.neighbors == par.neighbors)) {
            std::fprintf(stderr, "adjacency table mismatch between serial and parallel\n");
            return 1;
        }
        report(("adjacency table rows, k=" + std::to_string(kcat)).c_str(), s, p);
    }
    {
        CycleDecomposition dec = two_factor_w01(kham);
        std::vector<SixCycle> ref, par;
        double s = time_best_of(3, [&] { ref = find_six_cycles_serial(dec); });
        double p = time_best_of(3, [&] { par = find_six_cycles(dec); });
        if (ref.size() != par.size()) {
            std::fprintf(stderr, "hexagon scan mismatch between serial and parallel\n");
            return 1;
        }
        report(("hexagon scan, k=" + std::to_string(kham)).c_str(), s, p);
    }
    {
        // full lexical edge-color sweep of M_k from the lower level
        const int k = kcat;
        const int n = 2 * k + 1;
        auto lower = words_of_weight(n, k);
        std::vector<int> ref(lower.size() * static_cast<std::size_t>(n), -1);
        std::vector<int> par(ref.size(), -1);
        double s = time_best_of(3, [&] {
            for (std::size_t i = 0; i < lower.size(); ++i)
                for (int x = 0; x < n; ++x)
                    if (!((lower[i] >> x) & 1u))
                        ref[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)] =
                            edge_color(lower[i], n, x);
        });
        double p = time_best_of(3, [&] {
            const std::int64_t count = static_cast<std::int64_t>(lower.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (std::int64_t i = 0; i < count; ++i)
                for (int x = 0; x < n; ++x)
                    if (!((lower[static_cast<std::size_t>(i)] >> x) & 1u))
                        par[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(x)] =
                            edge_color(lower[static_cast<std::size_t>(i)], n, x);
        });
        if (ref != par) {
            std::fprintf(stderr, "edge color sweep mismatch between serial and parallel\n");
            return 1;
        }
        report(("edge color sweep, k=" + std::to_string(k)).c_str(), s, p);
    }
    return 0;
}
