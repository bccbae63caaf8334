#pragma once

#include "cliquelab/graph.hpp"
#include "cliquelab/rng.hpp"

namespace cliquelab {

// G(n,p): every pair is an edge independently with probability p.
// Rows are sampled from per-row streams derived from the seed, so output
// is identical for identical (n, p, seed) regardless of thread count.
Graph generate_gnp(int n, double p, Seed seed);

// Coupled pair (G_low, G_high): G_high ~ G(n,2p); G_low keeps each
// G_high edge independently with probability 1/2, so G_low ~ G(n,p)
// and G_low is a subgraph of G_high. Requires p <= 1/2.
std::pair<Graph, Graph> generate_coupled(int n, double p, Seed seed);

}  // namespace cliquelab
