#include "cliquelab/cliques.hpp"

#include <algorithm>
#include <bit>

namespace cliquelab {

namespace {

using Row = std::vector<std::uint64_t>;

struct BkState {
    const Graph* g;
    int words;
    const std::function<void(std::span<const int>)>* visit;
    long long cap;
    long long count = 0;
    std::vector<int> current;

    void expand(Row& cand, Row& excl) {
        bool cand_empty = true, excl_empty = true;
        for (int w = 0; w < words; ++w) {
            if (cand[w]) cand_empty = false;
            if (excl[w]) excl_empty = false;
        }
        if (cand_empty) {
            if (excl_empty) {
                if (cap >= 0 && ++count > cap) throw CapExceeded(cap);
                (*visit)(current);
            }
            return;
        }
        // pivot: vertex of cand|excl with most neighbors in cand
        int pivot = -1, best = -1;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = cand[w] | excl[w];
            while (bits) {
                int v = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                const std::uint64_t* rv = g->row(v);
                int cnt = 0;
                for (int x = 0; x < words; ++x) cnt += std::popcount(rv[x] & cand[x]);
                if (cnt > best) {
                    best = cnt;
                    pivot = v;
                }
            }
        }
        const std::uint64_t* rp = g->row(pivot);
        Row branch(words);
        for (int w = 0; w < words; ++w) branch[w] = cand[w] & ~rp[w];
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = branch[w];
            while (bits) {
                int v = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                const std::uint64_t* rv = g->row(v);
                Row next_cand(words), next_excl(words);
                for (int x = 0; x < words; ++x) {
                    next_cand[x] = cand[x] & rv[x];
                    next_excl[x] = excl[x] & rv[x];
                }
                current.push_back(v);
                expand(next_cand, next_excl);
                current.pop_back();
                cand[w] &= ~(1ULL << (v & 63));
                excl[w] |= 1ULL << (v & 63);
            }
        }
    }
};

}  // namespace

void for_each_maximal_clique(const Graph& g, const std::function<void(std::span<const int>)>& visit,
                             long long cap) {
    int n = g.num_vertices();
    if (n == 0) return;
    int words = g.row_words();
    BkState st{&g, words, &visit, cap};
    Row cand(words, 0), excl(words, 0);
    for (int v = 0; v < n; ++v) cand[v >> 6] |= 1ULL << (v & 63);
    st.expand(cand, excl);
}

std::vector<std::vector<int>> maximal_cliques(const Graph& g, long long cap) {
    std::vector<std::vector<int>> out;
    for_each_maximal_clique(
        g,
        [&](std::span<const int> q) {
            std::vector<int> c(q.begin(), q.end());
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        },
        cap);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_maximal_clique(const Graph& g, std::span<const int> q) {
    if (q.empty()) throw std::invalid_argument("empty vertex set");
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            if (!g.has_edge(q[i], q[j])) return false;
    int words = g.row_words();
    std::vector<std::uint64_t> common(g.row(q[0]), g.row(q[0]) + words);
    for (std::size_t i = 1; i < q.size(); ++i) {
        const std::uint64_t* r = g.row(q[i]);
        for (int w = 0; w < words; ++w) common[w] &= r[w];
    }
    for (int v : q) common[v >> 6] &= ~(1ULL << (v & 63));
    for (int w = 0; w < words; ++w)
        if (common[w]) return false;
    return true;
}

bool edge_in_triangle(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("not an edge");
    return g.common_neighbor_exists(u, v);
}

double triangle_edge_fraction(const Graph& g) {
    if (g.num_edges() == 0) throw std::invalid_argument("edgeless graph");
    long long in_tri = 0;
    int n = g.num_vertices();
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : in_tri)
    for (int u = 0; u < n; ++u) {
        g.for_neighbors(u, [&](int v) {
            if (v > u && g.common_neighbor_exists(u, v)) ++in_tri;
        });
    }
    return static_cast<double>(in_tri) / static_cast<double>(g.num_edges());
}

double triangle_edge_fraction_serial(const Graph& g) {
    if (g.num_edges() == 0) throw std::invalid_argument("edgeless graph");
    long long in_tri = 0;
    g.for_edges([&](int u, int v) {
        if (g.common_neighbor_exists(u, v)) ++in_tri;
    });
    return static_cast<double>(in_tri) / static_cast<double>(g.num_edges());
}

std::vector<int> non_triangle_edge_counts(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> counts(n, 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (int u = 0; u < n; ++u) {
        int c = 0;
        g.for_neighbors(u, [&](int v) {
            if (!g.common_neighbor_exists(u, v)) ++c;
        });
        counts[u] = c;
    }
    return counts;
}

bool uncovered(const Graph& g, std::span<const int> s, std::span<const int> t) {
    std::vector<char> in_s(g.num_vertices(), 0);
    for (int v : s) in_s[v] = 1;
    for (int v : t)
        if (!in_s[v]) throw std::invalid_argument("t is not a subset of s");
    if (t.empty()) throw std::invalid_argument("empty t");
    int words = g.row_words();
    std::vector<std::uint64_t> common(g.row(t[0]), g.row(t[0]) + words);
    for (std::size_t i = 1; i < t.size(); ++i) {
        const std::uint64_t* r = g.row(t[i]);
        for (int w = 0; w < words; ++w) common[w] &= r[w];
    }
    for (int v : s) common[v >> 6] &= ~(1ULL << (v & 63));
    for (int w = 0; w < words; ++w)
        if (common[w]) return false;
    return true;
}

}  // namespace cliquelab
