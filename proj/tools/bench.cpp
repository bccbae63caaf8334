// Benchmark of the OpenMP kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <omp.h>

#include "cliquelab/cliques.hpp"
#include "cliquelab/gnp.hpp"
#include "cliquelab/lowerbound.hpp"

using namespace cliquelab;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto elapsed = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(elapsed).count();
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());

    {
        Graph g = generate_gnp(4000, 0.01, Seed{1, 0});
        double frac_p = 0, frac_s = 0;
        double tp = time_ms([&] { frac_p = triangle_edge_fraction(g); });
        double ts = time_ms([&] { frac_s = triangle_edge_fraction_serial(g); });
        std::printf("triangle_edge_fraction  n=4000 p=0.01  parallel %8.2f ms  serial %8.2f ms  %s\n",
                    tp, ts, frac_p == frac_s ? "results agree" : "MISMATCH");
    }

    {
        Graph g = generate_gnp(1500, 0.05, Seed{2, 0});
        std::vector<int> s;
        for (int v = 0; v < 300; ++v) s.push_back(v * 5);
        UncoveredStats a, b;
        double tp = time_ms([&] { a = count_stats(g, s, 2, 40); });
        double ts = time_ms([&] { b = count_stats_naive(g, s, 2, 40); });
        bool same = a.xs == b.xs && a.xprime == b.xprime && a.ys == b.ys;
        std::printf("count_stats             n=1500 |S|=300  bitset   %8.2f ms  naive  %8.2f ms  %s\n",
                    tp, ts, same ? "results agree" : "MISMATCH");
    }

    {
        double t1 = 0, tn = 0;
        ConcentrationSummary s1, sn;
        int procs = omp_get_max_threads();
        omp_set_num_threads(1);
        t1 = time_ms([&] { s1 = concentration_experiment(1000, 0.03, 2, 60, 16, 4, Seed{3, 0}); });
        omp_set_num_threads(procs);
        tn = time_ms([&] { sn = concentration_experiment(1000, 0.03, 2, 60, 16, 4, Seed{3, 0}); });
        bool same = s1.mean_xs == sn.mean_xs && s1.frac_xs_below_half == sn.frac_xs_below_half;
        std::printf("concentration_experiment 16x4 trials    1 thread %8.2f ms  %d thr %8.2f ms  %s\n",
                    t1, procs, tn, same ? "results agree" : "MISMATCH");
    }
    return 0;
}
