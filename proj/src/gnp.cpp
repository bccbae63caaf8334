#include "cliquelab/gnp.hpp"

#include <cmath>
#include <stdexcept>

namespace cliquelab {

namespace {

constexpr std::uint64_t kGnpTag = 0x676e702d67656e00ULL;
constexpr std::uint64_t kThinTag = 0x7468696e2d746167ULL;

// Fill the upper part (v > u) of row u by geometric skipping: the gap to
// the next edge is floor(log(U)/log(1-p)). O(row edges) expected time.
void sample_row(Graph::Builder& b, int n, int u, double p, Seed row_seed) {
    Rng rng(row_seed);
    if (p >= 1.0) {
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
        return;
    }
    const double inv_log_q = 1.0 / std::log1p(-p);
    long long v = u;
    while (true) {
        double x = rng.next_double();
        if (x <= 0.0) x = 0x1.0p-53;
        double gap = std::floor(std::log(x) * inv_log_q);
        if (gap >= static_cast<double>(n)) break;
        v += 1 + static_cast<long long>(gap);
        if (v >= n) break;
        b.add_edge(u, static_cast<int>(v));
    }
}

}  // namespace

Graph generate_gnp(int n, double p, Seed seed) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");
    Graph::Builder b(n);
    if (p > 0.0) {
        Seed base = derive(seed, kGnpTag);
        for (int u = 0; u < n - 1; ++u) sample_row(b, n, u, p, derive(base, static_cast<std::uint64_t>(u)));
    }
    return std::move(b).build();
}

std::pair<Graph, Graph> generate_coupled(int n, double p, Seed seed) {
    if (!(p >= 0.0 && p <= 0.5)) throw std::invalid_argument("coupling requires p in [0,1/2]");
    Graph high = generate_gnp(n, 2.0 * p, seed);
    Graph::Builder low(n);
    Seed base = derive(seed, kThinTag);
    for (int u = 0; u < n; ++u) {
        Rng rng(derive(base, static_cast<std::uint64_t>(u)));
        const std::uint64_t* r = high.row(u);
        for (int w = (u + 1) >> 6; w < high.row_words(); ++w) {
            std::uint64_t bits = r[w];
            if (w == (u >> 6)) bits &= ~((2ULL << (u & 63)) - 1);
            while (bits) {
                int v = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                if (rng.next_bool()) low.add_edge(u, v);
            }
        }
    }
    return {std::move(low).build(), std::move(high)};
}

}  // namespace cliquelab
