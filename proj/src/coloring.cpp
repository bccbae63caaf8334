#include "cliquelab/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "cliquelab/cliques.hpp"

namespace cliquelab {

CliqueColoring normalize_coloring(std::vector<int> colors) {
    std::unordered_map<int, int> remap;
    int next = 0;
    for (auto& c : colors) {
        auto [it, inserted] = remap.try_emplace(c, next);
        if (inserted) ++next;
        c = it->second;
    }
    return CliqueColoring{std::move(colors), next};
}

// A maximal clique of g that lies inside one color class is also maximal
// in the class-induced subgraph, so it suffices to scan each class.
std::vector<std::vector<int>> monochromatic_maximal_cliques(const Graph& g, const CliqueColoring& c,
                                                            bool first_only) {
    std::vector<std::vector<int>> out;
    int n = g.num_vertices();
    int palette = 0;
    for (int v = 0; v < n; ++v) palette = std::max(palette, c.colors[v] + 1);
    std::vector<std::vector<int>> classes(palette);
    for (int v = 0; v < n; ++v) classes[c.colors[v]].push_back(v);
    for (const auto& cls : classes) {
        if (cls.size() < 2) continue;
        auto [sub, map] = induced_subgraph(g, cls);
        bool done = false;
        try {
            for_each_maximal_clique(sub, [&](std::span<const int> q) {
                if (done || q.size() < 2) return;
                std::vector<int> orig(q.size());
                for (std::size_t i = 0; i < q.size(); ++i) orig[i] = map[q[i]];
                if (is_maximal_clique(g, orig)) {
                    std::sort(orig.begin(), orig.end());
                    out.push_back(std::move(orig));
                    if (first_only) done = true;
                }
            });
        } catch (const CapExceeded&) {
        }
        if (first_only && !out.empty()) return out;
    }
    return out;
}

int repair_clique_coloring(const Graph& g, CliqueColoring& c) {
    int repairs = 0;
    while (true) {
        auto witnesses = monochromatic_maximal_cliques(g, c, /*first_only=*/false);
        if (witnesses.empty()) break;
        std::vector<char> touched(g.num_vertices(), 0);
        for (const auto& w : witnesses) {
            bool already = false;
            for (int v : w)
                if (touched[v]) already = true;
            if (already) continue;
            c.colors[w.front()] = c.palette++;
            touched[w.front()] = 1;
            ++repairs;
        }
    }
    return repairs;
}

ValidityReport is_valid_clique_coloring(const Graph& g, const CliqueColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.num_vertices())
        throw std::invalid_argument("coloring does not cover all vertices");
    auto witnesses = monochromatic_maximal_cliques(g, c, /*first_only=*/true);
    if (witnesses.empty()) return ValidityReport{true, std::nullopt};
    return ValidityReport{false, std::move(witnesses.front())};
}

namespace {

struct ExactSolver {
    int n;
    int t;  // palette size being tested
    long long node_limit;
    long long nodes = 0;
    bool out_of_budget = false;
    std::vector<std::vector<int>> edges;          // hyperedges (maximal cliques, size >= 2)
    std::vector<std::vector<int>> vertex_edges;   // vertex -> incident hyperedge ids
    std::vector<int> order;                       // assignment order
    std::vector<int> color;                       // -1 = unassigned
    std::vector<int> colored_count;               // per edge
    std::vector<int> mono;                        // per edge: -1 none, -2 mixed, else color

    bool assign(int pos, int max_used) {
        if (pos == static_cast<int>(order.size())) return true;
        if (++nodes > node_limit) {
            out_of_budget = true;
            return false;
        }
        int v = order[pos];
        int limit = std::min(t - 1, max_used + 1);  // symmetry breaking
        for (int c = 0; c <= limit; ++c) {
            std::vector<std::pair<int, int>> undo;  // (edge, previous mono)
            bool conflict = false;
            for (int e : vertex_edges[v]) {
                ++colored_count[e];
                undo.emplace_back(e, mono[e]);
                if (mono[e] == -1)
                    mono[e] = c;
                else if (mono[e] >= 0 && mono[e] != c)
                    mono[e] = -2;
                if (colored_count[e] == static_cast<int>(edges[e].size()) && mono[e] == c) {
                    conflict = true;
                    break;
                }
            }
            if (!conflict) {
                color[v] = c;
                if (assign(pos + 1, std::max(max_used, c))) return true;
                color[v] = -1;
                if (out_of_budget) {
                    for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
                        mono[it->first] = it->second;
                        --colored_count[it->first];
                    }
                    return false;
                }
            }
            for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
                mono[it->first] = it->second;
                --colored_count[it->first];
            }
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

ExactResult exact_clique_chromatic(const Graph& g, const ExactBudget& budget) {
    int n = g.num_vertices();
    ExactResult res;
    if (n == 0) {
        res.value = 0;
        res.certificate = CliqueColoring{{}, 0};
        return res;
    }
    std::vector<std::vector<int>> hyper;
    for_each_maximal_clique(
        g,
        [&](std::span<const int> q) {
            if (q.size() >= 2) hyper.emplace_back(q.begin(), q.end());
        },
        budget.clique_cap);
    if (hyper.empty()) {
        // edgeless: one color by convention
        res.value = 1;
        res.certificate = CliqueColoring{std::vector<int>(n, 0), 1};
        return res;
    }

    CliqueColoring best = greedy_proper_coloring(g);
    int ub = best.palette;

    ExactSolver solver;
    solver.n = n;
    solver.node_limit = budget.node_limit;
    solver.edges = std::move(hyper);
    solver.vertex_edges.assign(n, {});
    for (std::size_t e = 0; e < solver.edges.size(); ++e)
        for (int v : solver.edges[e]) solver.vertex_edges[v].push_back(static_cast<int>(e));
    solver.order.resize(n);
    std::iota(solver.order.begin(), solver.order.end(), 0);
    std::sort(solver.order.begin(), solver.order.end(), [&](int a, int b) {
        auto da = solver.vertex_edges[a].size(), db = solver.vertex_edges[b].size();
        return da != db ? da > db : a < b;
    });

    for (int t = 2; t < ub; ++t) {
        solver.t = t;
        solver.color.assign(n, -1);
        solver.colored_count.assign(solver.edges.size(), 0);
        solver.mono.assign(solver.edges.size(), -1);
        if (solver.assign(0, -1)) {
            res.value = t;
            res.certificate = normalize_coloring(solver.color);
            res.nodes = solver.nodes;
            return res;
        }
        if (solver.out_of_budget) {
            res.value = ub;
            res.certificate = best;
            res.proven = false;
            res.nodes = solver.nodes;
            return res;
        }
    }
    res.value = ub;
    res.certificate = best;
    res.nodes = solver.nodes;
    return res;
}

CliqueColoring greedy_proper_coloring(const Graph& g, std::span<const int> order) {
    int n = g.num_vertices();
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("order must be a permutation");
    std::vector<int> colors(n, -1);
    int palette = 0;
    std::vector<char> used;
    for (int v : order) {
        used.assign(palette + 1, 0);
        g.for_neighbors(v, [&](int u) {
            if (colors[u] >= 0) used[colors[u]] = 1;
        });
        int c = 0;
        while (used[c]) ++c;
        colors[v] = c;
        palette = std::max(palette, c + 1);
    }
    return CliqueColoring{std::move(colors), palette};
}

CliqueColoring greedy_proper_coloring(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] != deg[b] ? deg[a] > deg[b] : a < b; });
    return greedy_proper_coloring(g, order);
}

std::vector<int> greedy_dominating_set(const Graph& g) {
    int n = g.num_vertices();
    std::vector<char> dominated(n, 0);
    std::vector<char> in_dom(n, 0);
    std::vector<int> gain(n);  // undominated vertices in closed neighborhood
    for (int v = 0; v < n; ++v) gain[v] = g.degree(v) + 1;
    // max-heap with lazy invalidation; ties resolved by smaller index
    std::priority_queue<std::pair<int, int>> heap;
    for (int v = 0; v < n; ++v) heap.emplace(gain[v], -v);
    auto mark_dominated = [&](int u) {
        if (dominated[u]) return;
        dominated[u] = 1;
        --gain[u];
        heap.emplace(gain[u], -u);
        g.for_neighbors(u, [&](int w) {
            --gain[w];
            heap.emplace(gain[w], -w);
        });
    };
    std::vector<int> dom;
    int remaining = n;
    while (remaining > 0) {
        auto [gv, nv] = heap.top();
        int v = -nv;
        heap.pop();
        if (gv != gain[v] || in_dom[v]) continue;
        in_dom[v] = 1;
        dom.push_back(v);
        if (!dominated[v]) --remaining;
        mark_dominated(v);
        g.for_neighbors(v, [&](int u) {
            if (!dominated[u]) {
                --remaining;
                mark_dominated(u);
            }
        });
    }
    std::sort(dom.begin(), dom.end());
    return dom;
}

DominatingColoringResult dominating_set_coloring(const Graph& g) {
    int n = g.num_vertices();
    auto dom = greedy_dominating_set(g);
    std::vector<int> colors(n, 0);
    int next = 1;
    for (int v : dom) colors[v] = next++;
    DominatingColoringResult res;
    res.dominating_size = static_cast<int>(dom.size());
    CliqueColoring c{std::move(colors), next};
    res.repairs = repair_clique_coloring(g, c);
    res.coloring = normalize_coloring(std::move(c.colors));
    return res;
}

std::string serialize_coloring(const CliqueColoring& c) {
    std::ostringstream out;
    out << "palette " << c.palette << '\n';
    for (std::size_t v = 0; v < c.colors.size(); ++v) out << v << ' ' << c.colors[v] << '\n';
    return out.str();
}

CliqueColoring parse_coloring(const std::string& text) {
    std::istringstream in(text);
    std::string kw;
    int palette;
    if (!(in >> kw >> palette) || kw != "palette") throw std::runtime_error("malformed coloring header");
    std::vector<std::pair<int, int>> rows;
    int v, c;
    while (in >> v >> c) rows.emplace_back(v, c);
    std::vector<int> colors(rows.size(), -1);
    for (auto [vv, cc] : rows) {
        if (vv < 0 || vv >= static_cast<int>(rows.size()) || cc < 0 || cc >= palette)
            throw std::runtime_error("coloring entry out of range");
        colors[vv] = cc;
    }
    for (int x : colors)
        if (x < 0) throw std::runtime_error("missing vertex in coloring");
    return CliqueColoring{std::move(colors), palette};
}

}  // namespace cliquelab
