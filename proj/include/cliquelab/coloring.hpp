#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliquelab/graph.hpp"

namespace cliquelab {

struct CliqueColoring {
    std::vector<int> colors;
    int palette = 0;
};

// Remap colors onto 0..palette-1 in order of first appearance.
CliqueColoring normalize_coloring(std::vector<int> colors);

struct ValidityReport {
    bool valid = true;
    std::optional<std::vector<int>> witness;  // a monochromatic maximal clique
};

// A clique coloring is valid iff every inclusion-maximal clique of size
// >= 2 sees at least two colors; isolated vertices impose no constraint.
ValidityReport is_valid_clique_coloring(const Graph& g, const CliqueColoring& c);

// All monochromatic maximal cliques of size >= 2 (or just the first).
std::vector<std::vector<int>> monochromatic_maximal_cliques(const Graph& g, const CliqueColoring& c,
                                                            bool first_only = false);

// Recolor one vertex of each monochromatic maximal clique with a fresh
// color until the coloring is valid; returns the number of recolorings.
int repair_clique_coloring(const Graph& g, CliqueColoring& c);

struct ExactResult {
    int value = 0;
    CliqueColoring certificate;
    bool proven = true;  // false when the node budget ran out
    long long nodes = 0;
};

struct ExactBudget {
    long long node_limit = 100'000'000;
    long long clique_cap = 10'000'000;
};

// Exact clique chromatic number by iterative deepening on the palette
// size over the maximal-clique hypergraph. Edgeless graphs give 1.
ExactResult exact_clique_chromatic(const Graph& g, const ExactBudget& budget = {});

CliqueColoring greedy_proper_coloring(const Graph& g, std::span<const int> order);
// Default order: descending degree, ties by index.
CliqueColoring greedy_proper_coloring(const Graph& g);

std::vector<int> greedy_dominating_set(const Graph& g);

struct DominatingColoringResult {
    CliqueColoring coloring;
    int dominating_size = 0;
    int repairs = 0;
};

// Dominators get distinct colors 1..|D|, everyone else color 0, then
// check-and-repair until valid.
DominatingColoringResult dominating_set_coloring(const Graph& g);

std::string serialize_coloring(const CliqueColoring& c);
CliqueColoring parse_coloring(const std::string& text);

}  // namespace cliquelab
