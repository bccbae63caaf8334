#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "cliquelab/coloring.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/rng.hpp"

namespace cliquelab {

struct DegreeThresholds {
    int r = 1;
    double gamma = 0;         // max{e^{-np^2} np / r, log n}
    double gamma_alt = 0;     // max{e^{-np^2} p^{-1/2} sqrt(log n), log n}
    double xi = 0;            // 2np^2 - (log n + log log n)
    bool xi_applicable = false;
    long long lambda = 0;     // ceil(9 log n / xi), only when xi > 0
};

DegreeThresholds compute_thresholds(long long n, double p);

struct PartitionPlan {
    std::vector<std::vector<int>> parts;
    int part_count() const { return static_cast<int>(parts.size()); }
};

// Random balanced partition: uniform shuffle then contiguous slices whose
// sizes differ by at most one.
PartitionPlan partition_vertices(int n, int r, Seed seed);

// Subgraph on part vertices: edges of G[part] minus those that are in a
// triangle of G but in no triangle of G[part]. Returned relabeled, with
// the new-index -> original-label map.
std::pair<Graph, std::vector<int>> build_gi(const Graph& g, std::span<const int> part);

struct InapplicableRegime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstructiveDiagnostics {
    int r = 0;
    double gamma = 0;
    double xi = 0;
    long long lambda = 0;
    std::vector<int> part_max_degree;
    std::vector<int> part_palette;
    int repairs = 0;
    int palette = 0;
    std::string to_json() const;
};

// Low-p pipeline: balanced partition into r parts, edge-deletion
// subgraphs, per-part coloring with disjoint palettes, final
// check-and-repair on the full graph.
std::pair<CliqueColoring, ConstructiveDiagnostics> color_low_p(const Graph& g, double p, Seed seed);

// Mid-p pipeline over a coupled pair: classes triangle-free in G_high,
// per-class edge-deletion subgraphs of G_low colored properly.
// Throws InapplicableRegime when xi <= 0.
std::pair<CliqueColoring, ConstructiveDiagnostics> color_mid_p(const Graph& g_low, const Graph& g_high,
                                                               double p, Seed seed);

// Partition into classes that each induce a triangle-free subgraph.
// target_classes 0 derives the initial class count from the graph density.
PartitionPlan triangle_free_partition(const Graph& g, Seed seed, int target_classes = 0);

struct GiDegreeReport {
    struct Part {
        int max_degree = 0;
        std::vector<int> x_v;          // triangles of G[S_i] containing v
        std::vector<int> y_v;          // neighbors in S_i with no common neighbor outside S_i
        std::vector<int> gi_degree;
        int violations = 0;            // vertices with gi degree > 42*Gamma
    };
    std::vector<Part> parts;
    double bound = 0;  // 42 * Gamma
    int total_violations = 0;
};

GiDegreeReport gi_max_degree_report(const Graph& g, const PartitionPlan& plan,
                                    const DegreeThresholds& thresholds);

}  // namespace cliquelab
