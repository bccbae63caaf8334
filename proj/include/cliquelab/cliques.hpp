#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cliquelab/graph.hpp"

namespace cliquelab {

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(long long cap_)
        : std::runtime_error("maximal clique count exceeds cap " + std::to_string(cap_)), cap(cap_) {}
    long long cap;
};

// Visit every inclusion-maximal clique of g (isolated vertices appear as
// singletons). Pivoted Bron-Kerbosch over bit rows. Throws CapExceeded
// once more than cap cliques have been reported (cap < 0: unlimited).
void for_each_maximal_clique(const Graph& g, const std::function<void(std::span<const int>)>& visit,
                             long long cap = -1);

// Sorted list of all maximal cliques (each clique sorted ascending,
// cliques in lexicographic order).
std::vector<std::vector<int>> maximal_cliques(const Graph& g, long long cap = 10'000'000);

// True iff q is a clique and no outside vertex is adjacent to all of q.
bool is_maximal_clique(const Graph& g, std::span<const int> q);

// True iff edge {u,v} has a common neighbor. Rejects non-edges.
bool edge_in_triangle(const Graph& g, int u, int v);

// Fraction of edges contained in at least one triangle. Rejects m = 0.
double triangle_edge_fraction(const Graph& g);
double triangle_edge_fraction_serial(const Graph& g);

// Per-vertex count of incident edges not contained in any triangle.
std::vector<int> non_triangle_edge_counts(const Graph& g);

// True iff no vertex outside s is adjacent to every vertex of t
// (t is not covered). Requires t to be a subset of s.
bool uncovered(const Graph& g, std::span<const int> s, std::span<const int> t);

}  // namespace cliquelab
