#include "cliquelab/constructive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cliquelab/cliques.hpp"

namespace cliquelab {

DegreeThresholds compute_thresholds(long long n, double p) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must be in (0,1)");
    DegreeThresholds t;
    const double logn = std::log(static_cast<double>(n));
    const double np = static_cast<double>(n) * p;
    const double raw_r = std::pow(p, 1.5) * static_cast<double>(n) / std::sqrt(logn);
    t.r = std::max(1, static_cast<int>(std::ceil(raw_r)));
    const double decay = std::exp(-np * p);
    t.gamma = std::max(decay * np / t.r, logn);
    t.gamma_alt = std::max(decay * std::sqrt(logn) / std::sqrt(p), logn);
    t.xi = 2.0 * np * p - (logn + std::log(logn));
    t.xi_applicable = t.xi > 0.0;
    if (t.xi_applicable) t.lambda = static_cast<long long>(std::ceil(9.0 * logn / t.xi));
    return t;
}

PartitionPlan partition_vertices(int n, int r, Seed seed) {
    if (r < 1 || r > std::max(n, 1)) throw std::invalid_argument("part count out of range");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    PartitionPlan plan;
    plan.parts.resize(r);
    int base = n / r, rem = n % r, pos = 0;
    for (int i = 0; i < r; ++i) {
        int size = base + (i < rem ? 1 : 0);
        plan.parts[i].assign(perm.begin() + pos, perm.begin() + pos + size);
        std::sort(plan.parts[i].begin(), plan.parts[i].end());
        pos += size;
    }
    return plan;
}

namespace {

std::vector<std::uint64_t> vertex_mask(int n, std::span<const int> vertices) {
    std::vector<std::uint64_t> mask((n + 63) / 64, 0);
    for (int v : vertices) mask[v >> 6] |= 1ULL << (v & 63);
    return mask;
}

bool intersect_nonempty(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* m, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w] & b[w] & m[w]) return true;
    return false;
}

}  // namespace

std::pair<Graph, std::vector<int>> build_gi(const Graph& g, std::span<const int> part) {
    auto mask = vertex_mask(g.num_vertices(), part);
    int words = g.row_words();
    std::vector<int> inv(g.num_vertices(), -1);
    for (std::size_t i = 0; i < part.size(); ++i) inv[part[i]] = static_cast<int>(i);
    Graph::Builder b(static_cast<int>(part.size()));
    for (std::size_t i = 0; i < part.size(); ++i) {
        int u = part[i];
        g.for_neighbors(u, [&](int v) {
            if (inv[v] <= static_cast<int>(i) || inv[v] < 0) return;
            bool in_part_triangle = intersect_nonempty(g.row(u), g.row(v), mask.data(), words);
            bool in_any_triangle = in_part_triangle || g.common_neighbor_exists(u, v);
            // delete iff in a triangle of G but in no triangle of G[part]
            if (!(in_any_triangle && !in_part_triangle)) b.add_edge(static_cast<int>(i), inv[v]);
        });
    }
    return {std::move(b).build(), std::vector<int>(part.begin(), part.end())};
}

std::string ConstructiveDiagnostics::to_json() const {
    std::ostringstream out;
    out << "{\"r\":" << r << ",\"gamma\":" << gamma << ",\"xi\":" << xi << ",\"lambda\":" << lambda
        << ",\"part_max_degrees\":[";
    for (std::size_t i = 0; i < part_max_degree.size(); ++i)
        out << (i ? "," : "") << part_max_degree[i];
    out << "],\"part_palettes\":[";
    for (std::size_t i = 0; i < part_palette.size(); ++i) out << (i ? "," : "") << part_palette[i];
    out << "],\"repairs\":" << repairs << ",\"palette\":" << palette << "}";
    return out.str();
}

namespace {

// Randomized target-palette clique coloring: t = max(2, ceil(2D/ln D))
// colors, uniform assignment, recolor one vertex of each monochromatic
// maximal clique until valid; greedy proper fallback.
CliqueColoring color_part(const Graph& gi, Seed seed) {
    int n = gi.num_vertices();
    if (n == 0) return CliqueColoring{{}, 0};
    if (gi.num_edges() == 0) return CliqueColoring{std::vector<int>(n, 0), 1};
    int delta = gi.max_degree();
    int t = std::max(2, static_cast<int>(std::ceil(2.0 * delta / std::max(1.0, std::log(delta)))));
    Rng rng(seed);
    CliqueColoring c;
    c.palette = t;
    c.colors.resize(n);
    for (int v = 0; v < n; ++v) c.colors[v] = static_cast<int>(rng.below(t));
    long long attempts_left = 100LL * n;
    while (attempts_left > 0) {
        auto witnesses = monochromatic_maximal_cliques(gi, c, /*first_only=*/false);
        if (witnesses.empty()) return c;
        for (const auto& w : witnesses) {
            if (attempts_left-- <= 0) break;
            int v = w[rng.below(w.size())];
            c.colors[v] = static_cast<int>(rng.below(t));
        }
    }
    return greedy_proper_coloring(gi);
}

}  // namespace

std::pair<CliqueColoring, ConstructiveDiagnostics> color_low_p(const Graph& g, double p, Seed seed) {
    int n = g.num_vertices();
    auto th = compute_thresholds(std::max<long long>(n, 2), p);
    int r = std::min(th.r, std::max(n, 1));
    ConstructiveDiagnostics diag;
    diag.r = r;
    diag.gamma = th.gamma;
    diag.xi = th.xi;
    diag.lambda = th.lambda;
    auto plan = partition_vertices(n, r, derive(seed, 0x706c616eULL));
    std::vector<int> colors(n, 0);
    int offset = 0;
    for (int i = 0; i < plan.part_count(); ++i) {
        auto [gi, map] = build_gi(g, plan.parts[i]);
        auto part_coloring = color_part(gi, derive(seed, 0x70617274ULL + i));
        diag.part_max_degree.push_back(gi.num_vertices() ? gi.max_degree() : 0);
        diag.part_palette.push_back(part_coloring.palette);
        for (std::size_t j = 0; j < map.size(); ++j) colors[map[j]] = offset + part_coloring.colors[j];
        offset += part_coloring.palette;
    }
    CliqueColoring c{std::move(colors), offset};
    diag.repairs = repair_clique_coloring(g, c);
    c = normalize_coloring(std::move(c.colors));
    diag.palette = c.palette;
    return {std::move(c), std::move(diag)};
}

PartitionPlan triangle_free_partition(const Graph& g, Seed seed, int target_classes) {
    int n = g.num_vertices();
    if (n == 0) return PartitionPlan{};
    if (target_classes <= 0) {
        double p_est = n > 1 ? 2.0 * static_cast<double>(g.num_edges()) / (static_cast<double>(n) * (n - 1)) : 0.0;
        if (p_est <= 0.0) {
            target_classes = 1;
        } else {
            double class_size = std::ceil(1.0 / (2.0 * p_est));
            target_classes = static_cast<int>(std::ceil(n / std::max(1.0, class_size)));
            target_classes = std::clamp(target_classes, 1, n);
        }
    }
    auto plan = partition_vertices(n, target_classes, derive(seed, 0x74667061ULL));
    std::vector<int> cls_of(n);
    for (int c = 0; c < plan.part_count(); ++c)
        for (int v : plan.parts[c]) cls_of[v] = c;
    auto& parts = plan.parts;

    auto find_triangle = [&](const std::vector<int>& cls) -> std::vector<int> {
        auto mask = vertex_mask(n, cls);
        int words = g.row_words();
        for (std::size_t i = 0; i < cls.size(); ++i) {
            int u = cls[i];
            for (std::size_t j = i + 1; j < cls.size(); ++j) {
                int v = cls[j];
                if (!g.has_edge(u, v)) continue;
                for (int w = 0; w < words; ++w) {
                    std::uint64_t common = g.row(u)[w] & g.row(v)[w] & mask[w];
                    if (common) return {u, v, w * 64 + __builtin_ctzll(common)};
                }
            }
        }
        return {};
    };
    auto creates_triangle = [&](int v, const std::vector<int>& cls) {
        auto mask = vertex_mask(n, cls);
        int words = g.row_words();
        for (int u : cls) {
            if (!g.has_edge(u, v)) continue;
            if (intersect_nonempty(g.row(u), g.row(v), mask.data(), words)) return true;
        }
        return false;
    };

    for (std::size_t c = 0; c < parts.size(); ++c) {
        while (true) {
            auto tri = find_triangle(parts[c]);
            if (tri.empty()) break;
            int v = tri.front();
            int dest = -1;
            for (std::size_t d = 0; d < parts.size(); ++d) {
                if (d == c) continue;
                if (!creates_triangle(v, parts[d])) {
                    dest = static_cast<int>(d);
                    break;
                }
            }
            if (dest < 0) {
                parts.emplace_back();
                dest = static_cast<int>(parts.size()) - 1;
            }
            auto& src = parts[c];
            src.erase(std::find(src.begin(), src.end(), v));
            parts[dest].push_back(v);
            std::sort(parts[dest].begin(), parts[dest].end());
            cls_of[v] = dest;
        }
    }
    // drop classes emptied by moves
    parts.erase(std::remove_if(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); }),
                parts.end());
    return plan;
}

std::pair<CliqueColoring, ConstructiveDiagnostics> color_mid_p(const Graph& g_low, const Graph& g_high,
                                                               double p, Seed seed) {
    int n = g_low.num_vertices();
    if (g_high.num_vertices() != n) throw std::invalid_argument("coupled pair size mismatch");
    auto th = compute_thresholds(std::max<long long>(n, 2), p);
    if (!th.xi_applicable)
        throw InapplicableRegime("xi <= 0: mid-p pipeline requires 2np^2 > log n + log log n");
    ConstructiveDiagnostics diag;
    diag.gamma = th.gamma;
    diag.xi = th.xi;
    diag.lambda = th.lambda;

    int target = 0;
    double phat = 2.0 * p;
    if (phat > 0 && phat < 1) {
        double class_size = std::ceil(1.0 / (2.0 * phat));
        target = std::clamp(static_cast<int>(std::ceil(n / std::max(1.0, class_size))), 1, n);
    }
    auto plan = triangle_free_partition(g_high, derive(seed, 0x6d696470ULL), target);
    diag.r = plan.part_count();

    std::vector<int> colors(n, 0);
    int offset = 0;
    for (int i = 0; i < plan.part_count(); ++i) {
        auto [gi, map] = build_gi(g_low, plan.parts[i]);
        auto part_coloring = gi.num_edges() == 0
                                 ? CliqueColoring{std::vector<int>(gi.num_vertices(), 0), 1}
                                 : greedy_proper_coloring(gi);
        diag.part_max_degree.push_back(gi.num_vertices() ? gi.max_degree() : 0);
        diag.part_palette.push_back(part_coloring.palette);
        for (std::size_t j = 0; j < map.size(); ++j) colors[map[j]] = offset + part_coloring.colors[j];
        offset += part_coloring.palette;
    }
    CliqueColoring c{std::move(colors), offset};
    diag.repairs = repair_clique_coloring(g_low, c);
    c = normalize_coloring(std::move(c.colors));
    diag.palette = c.palette;
    return {std::move(c), std::move(diag)};
}

GiDegreeReport gi_max_degree_report(const Graph& g, const PartitionPlan& plan,
                                    const DegreeThresholds& thresholds) {
    GiDegreeReport report;
    report.bound = 42.0 * thresholds.gamma;
    int words = g.row_words();
    for (const auto& part : plan.parts) {
        GiDegreeReport::Part pr;
        auto mask = vertex_mask(g.num_vertices(), part);
        auto [gi, map] = build_gi(g, part);
        pr.x_v.resize(part.size());
        pr.y_v.resize(part.size());
        pr.gi_degree.resize(part.size());
        for (std::size_t i = 0; i < part.size(); ++i) {
            int v = part[i];
            int x2 = 0;  // twice the number of in-part triangles at v
            int y = 0;
            g.for_neighbors(v, [&](int u) {
                if (!(mask[u >> 6] >> (u & 63) & 1ULL)) return;
                int common_in_part = 0;
                bool outside_common = false;
                for (int w = 0; w < words; ++w) {
                    std::uint64_t both = g.row(u)[w] & g.row(v)[w];
                    common_in_part += std::popcount(both & mask[w]);
                    if (both & ~mask[w]) outside_common = true;
                }
                x2 += common_in_part;
                if (!outside_common) ++y;
            });
            pr.x_v[i] = x2 / 2;
            pr.y_v[i] = y;
            pr.gi_degree[i] = gi.degree(static_cast<int>(i));
            pr.max_degree = std::max(pr.max_degree, pr.gi_degree[i]);
            if (pr.gi_degree[i] > report.bound) ++pr.violations;
        }
        report.total_violations += pr.violations;
        report.parts.push_back(std::move(pr));
    }
    return report;
}

}  // namespace cliquelab
