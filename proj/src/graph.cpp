#include "cliquelab/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cliquelab {

void Graph::Builder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (g_.has_edge(u, v)) return;
    g_.bits_[static_cast<std::size_t>(u) * g_.words_ + (v >> 6)] |= 1ULL << (v & 63);
    g_.bits_[static_cast<std::size_t>(v) * g_.words_ + (u >> 6)] |= 1ULL << (u & 63);
    ++g_.m_;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Builder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

int Graph::degree(int v) const {
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(16);
    for_neighbors(v, [&](int u) { out.push_back(u); });
    return out;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

bool Graph::common_neighbor_exists(int u, int v) const {
    const std::uint64_t* ru = row(u);
    const std::uint64_t* rv = row(v);
    for (int w = 0; w < words_; ++w)
        if (ru[w] & rv[w]) return true;
    return false;
}

ParseError::ParseError(int line_no, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    if (!std::getline(in, line)) throw ParseError(1, "missing header");
    ++line_no;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> m) || n < 0 || m < 0) throw ParseError(line_no, "malformed header, expected \"n m\"");
        std::string rest;
        if (hs >> rest) throw ParseError(line_no, "trailing tokens in header");
    }
    if (n > (1LL << 30)) throw ParseError(line_no, "vertex count too large");
    Graph::Builder b(static_cast<int>(n));
    long long seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) throw ParseError(line_no, "malformed edge line");
        std::string rest;
        if (es >> rest) throw ParseError(line_no, "trailing tokens in edge line");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "vertex index out of range");
        if (u == v) throw ParseError(line_no, "self-loop");
        if (b.has_edge(static_cast<int>(u), static_cast<int>(v))) throw ParseError(line_no, "duplicate edge");
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (seen != m) throw ParseError(line_no, "edge count mismatch: header says " + std::to_string(m) + ", got " + std::to_string(seen));
    return std::move(b).build();
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    g.for_edges([&](int u, int v) { out << u << ' ' << v << '\n'; });
    return out.str();
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> map(vertices.begin(), vertices.end());
    std::vector<int> inv(g.num_vertices(), -1);
    for (std::size_t i = 0; i < map.size(); ++i) {
        int v = map[i];
        if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
        if (inv[v] != -1) throw std::invalid_argument("duplicate vertex in subset");
        inv[v] = static_cast<int>(i);
    }
    Graph::Builder b(static_cast<int>(map.size()));
    for (std::size_t i = 0; i < map.size(); ++i) {
        g.for_neighbors(map[i], [&](int u) {
            int j = inv[u];
            if (j > static_cast<int>(i)) b.add_edge(static_cast<int>(i), j);
        });
    }
    return {std::move(b).build(), std::move(map)};
}

}  // namespace cliquelab
