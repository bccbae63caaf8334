#pragma once

#include <span>
#include <vector>

#include "cliquelab/graph.hpp"
#include "cliquelab/rng.hpp"

namespace cliquelab {

struct SizeParameter {
    double value = 0;
    long long ceiled = 0;
};

// s := C * max{np, p^{-k/2} [k! k log(1/p)]^{1/(k-1)}} * (1-p^k)^{-n/(k-1)}
SizeParameter size_parameter_s(long long n, double p, int k, double C);

// x := ceil(6 s p)
long long truncation_x(double s, double p);

// z_i := 12 s log2(e n / s) / ((i+1) 2^{i+1} x)
double vertex_class_budget(int i, double s, double x, long long n);

// Per outside vertex w: the first x edges into S in ascending S-endpoint
// order (all of them when w has at most x edges into S).
struct MarkedEdges {
    long long x = 0;
    // indexed like the graph's vertices; empty for vertices of S
    std::vector<std::vector<int>> marked;
};

MarkedEdges mark_edges(const Graph& g, std::span<const int> s, long long x);

struct UncoveredStats {
    long long xs = 0;      // uncovered k-subsets of S
    long long xprime = 0;  // not safely covered k-subsets (marked edges only)
    long long ys = 0;      // uncovered k-subsets inducing cliques
    int k = 0;
    long long x = 0;
};

UncoveredStats count_stats(const Graph& g, std::span<const int> s, int k, long long x);
// Naive reference: per k-set scan over all outside vertices.
UncoveredStats count_stats_naive(const Graph& g, std::span<const int> s, int k, long long x);

// E X_S = C(s,k) (1-p^k)^{n-s}
double expected_xs(long long n, long long s, double p, int k);

struct ConcentrationSummary {
    int trials = 0;
    int sets_per_trial = 0;
    double expected = 0;            // closed-form E X_S
    double mean_xs = 0;
    double stddev_xs = 0;
    double mean_xprime = 0;
    double frac_xs_below_half = 0;      // fraction with X_S < E X_S / 2
    double frac_xprime_below_gamma = 0; // fraction with X'_S < (1-gamma) mean X'_S
    double gamma = 0.25;
};

ConcentrationSummary concentration_experiment(long long n, double p, int k, long long s, int trials,
                                              int sets_per_trial, Seed seed, long long x = -1,
                                              double gamma = 0.25);

struct ClassSizeHistogram {
    struct Row {
        int i = 0;
        long long size = 0;     // |V_{i,S}|
        double budget = 0;      // z_i
        bool in_window = false; // 2^i x <= 2np
        bool exceeds = false;
    };
    std::vector<Row> rows;
    int exceedances_in_window = 0;
};

// |V_{i,S}| = outside vertices with deg_S in [2^i x, 2^{i+1} x).
ClassSizeHistogram class_size_experiment(const Graph& g, std::span<const int> s, long long x, double p);

}  // namespace cliquelab
