#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquelab {

// Immutable simple undirected graph with bit-packed adjacency rows.
// Vertices are 0..n-1; rows are symmetric and self-loop free.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    long long num_edges() const { return m_; }
    int row_words() const { return words_; }

    bool has_edge(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1ULL;
    }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    int max_degree() const;

    // true iff u and v have a common neighbor
    bool common_neighbor_exists(int u, int v) const;

    template <class Fn>
    void for_neighbors(int v, Fn&& fn) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                fn(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    // Iterate edges {u,v} with u < v.
    template <class Fn>
    void for_edges(Fn&& fn) const {
        for (int u = 0; u < n_; ++u) {
            const std::uint64_t* r = row(u);
            for (int w = (u + 1) >> 6; w < words_; ++w) {
                std::uint64_t bits = r[w];
                if (w == (u >> 6)) bits &= ~((2ULL << (u & 63)) - 1);
                while (bits) {
                    int b = __builtin_ctzll(bits);
                    fn(u, w * 64 + b);
                    bits &= bits - 1;
                }
            }
        }
    }

    class Builder;

private:
    int n_ = 0;
    long long m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

class Graph::Builder {
public:
    explicit Builder(int n) : g_(n) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    Graph build() && { return std::move(g_); }

private:
    Graph g_;
};

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& msg);
    int line;
};

Graph parse_edge_list(const std::string& text);

// First line "n m", then m lines "u v" with u < v, sorted, 0-based.
std::string serialize_edge_list(const Graph& g);

// Relabeled graph on |S| vertices plus the map new-index -> original label.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, std::span<const int> vertices);

}  // namespace cliquelab
