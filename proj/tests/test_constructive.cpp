#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "cliquelab/cliques.hpp"
#include "cliquelab/constructive.hpp"
#include "cliquelab/gnp.hpp"
#include "cliquelab/graph.hpp"
#include "oracles.hpp"

using namespace cliquelab;

namespace {

Graph complete(int n) {
    Graph::Builder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

Graph cycle(int n) {
    Graph::Builder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

}  // namespace

TEST_CASE("threshold fixtures") {
    auto a = compute_thresholds(10'000, 0.01);
    CHECK(a.r == 4);
    CHECK(a.gamma == doctest::Approx(9.210340371976184).epsilon(1e-9));
    CHECK(a.gamma_alt == doctest::Approx(11.164604887531873).epsilon(1e-9));
    CHECK_FALSE(a.xi_applicable);
    CHECK(a.lambda == 0);

    auto b = compute_thresholds(1'000'000, 0.004);
    CHECK(b.xi == doctest::Approx(15.558697527559715).epsilon(1e-9));
    CHECK(b.xi_applicable);
    CHECK(b.lambda == 8);

    auto c = compute_thresholds(100, 1e-9);
    CHECK(c.r == 1);  // formula value near zero clamps to 1

    CHECK_THROWS(compute_thresholds(1, 0.1));
    CHECK_THROWS(compute_thresholds(100, 0.0));
    CHECK_THROWS(compute_thresholds(100, 1.0));
}

TEST_CASE("partition_vertices balance and determinism") {
    Seed seed{5, 0};
    auto p63 = partition_vertices(6, 3, seed);
    REQUIRE(p63.part_count() == 3);
    for (const auto& part : p63.parts) CHECK(part.size() == 2);

    auto p73 = partition_vertices(7, 3, seed);
    std::multiset<std::size_t> sizes;
    for (const auto& part : p73.parts) sizes.insert(part.size());
    CHECK(sizes == std::multiset<std::size_t>{2, 2, 3});

    auto p101 = partition_vertices(10, 1, seed);
    REQUIRE(p101.part_count() == 1);
    CHECK(p101.parts[0].size() == 10);

    CHECK_THROWS(partition_vertices(5, 6, seed));
    CHECK_THROWS(partition_vertices(5, 0, seed));

    // disjoint cover
    auto plan = partition_vertices(50, 7, seed);
    std::set<int> all;
    for (const auto& part : plan.parts)
        for (int v : part) CHECK(all.insert(v).second);
    CHECK(all.size() == 50);

    auto again = partition_vertices(50, 7, seed);
    CHECK(again.parts == plan.parts);
}

TEST_CASE("build_gi deletion rule on hand examples") {
    Graph k3 = complete(3);
    std::vector<int> part01{0, 1};
    auto [gi1, map1] = build_gi(k3, part01);
    CHECK(gi1.num_edges() == 0);  // in a G-triangle, in no part triangle
    CHECK(map1 == part01);

    std::vector<int> all{0, 1, 2};
    auto [gi2, map2] = build_gi(k3, all);
    CHECK(gi2.num_edges() == 3);  // triangle survives inside the part

    Graph p3 = parse_edge_list("3 2\n0 1\n1 2\n");
    auto [gi3, map3] = build_gi(p3, part01);
    CHECK(gi3.num_edges() == 1);  // edge in no G-triangle is kept
}

TEST_CASE("build_gi edges are a subset of the induced subgraph") {
    Graph g = generate_gnp(80, 0.15, Seed{8, 0});
    auto plan = partition_vertices(80, 5, Seed{8, 1});
    for (const auto& part : plan.parts) {
        auto [gi, map] = build_gi(g, part);
        gi.for_edges([&](int a, int b) { CHECK(g.has_edge(map[a], map[b])); });
    }
}

TEST_CASE("within-part maximal cliques stay maximal in gi") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        Graph g = generate_gnp(30, 0.3, Seed{s, 50});
        auto plan = partition_vertices(30, 3, Seed{s, 51});
        std::vector<int> part_of(30);
        std::vector<int> index_in_part(30);
        for (int i = 0; i < plan.part_count(); ++i)
            for (std::size_t j = 0; j < plan.parts[i].size(); ++j) {
                part_of[plan.parts[i][j]] = i;
                index_in_part[plan.parts[i][j]] = static_cast<int>(j);
            }
        std::vector<Graph> gis;
        for (const auto& part : plan.parts) gis.push_back(build_gi(g, part).first);
        for (const auto& q : maximal_cliques(g)) {
            bool one_part = true;
            for (int v : q)
                if (part_of[v] != part_of[q[0]]) one_part = false;
            if (!one_part) continue;
            std::vector<int> local;
            for (int v : q) local.push_back(index_in_part[v]);
            std::sort(local.begin(), local.end());
            CHECK(is_maximal_clique(gis[part_of[q[0]]], local));
        }
    }
}

TEST_CASE("color_low_p produces valid colorings") {
    Graph k20 = complete(20);
    auto [c1, d1] = color_low_p(k20, 0.02, Seed{1, 0});
    CHECK(is_valid_clique_coloring(k20, c1).valid);
    CHECK(c1.palette >= 2);
    CHECK(d1.palette == c1.palette);

    Graph g = generate_gnp(2000, 0.02, Seed{2, 0});
    auto [c2, d2] = color_low_p(g, 0.02, Seed{3, 0});
    CHECK(is_valid_clique_coloring(g, c2).valid);
    CHECK(d2.r == compute_thresholds(2000, 0.02).r);
    CHECK(static_cast<int>(d2.part_max_degree.size()) == d2.r);

    Graph edgeless(40);
    auto [c3, d3] = color_low_p(edgeless, 0.01, Seed{4, 0});
    CHECK(c3.palette == 1);
    CHECK(is_valid_clique_coloring(edgeless, c3).valid);
}

TEST_CASE("diagnostics serialize as json") {
    auto [c, d] = color_low_p(complete(10), 0.05, Seed{6, 0});
    std::string j = d.to_json();
    CHECK(j.front() == '{');
    CHECK(j.back() == '}');
    CHECK(j.find("\"palette\":") != std::string::npos);
    CHECK(j.find("\"repairs\":") != std::string::npos);
}

TEST_CASE("triangle_free_partition postconditions") {
    // explicit single class for a triangle-free input stays one class
    Graph c8 = cycle(8);
    auto one = triangle_free_partition(c8, Seed{9, 0}, 1);
    CHECK(one.part_count() == 1);

    auto k3 = triangle_free_partition(complete(3), Seed{9, 1});
    CHECK(k3.part_count() >= 2);

    auto k6 = triangle_free_partition(complete(6), Seed{9, 2});
    CHECK(k6.part_count() >= 3);
    for (const auto& part : k6.parts) CHECK(part.size() <= 2);

    for (std::uint64_t s = 0; s < 8; ++s) {
        Graph g = generate_gnp(60, 0.2, Seed{s, 52});
        auto plan = triangle_free_partition(g, Seed{s, 53});
        std::set<int> all;
        for (const auto& part : plan.parts) {
            auto [sub, map] = induced_subgraph(g, part);
            CHECK_FALSE(oracle::has_triangle(sub));
            for (int v : part) CHECK(all.insert(v).second);
        }
        CHECK(all.size() == 60);
    }
}

TEST_CASE("color_mid_p on a triangle-free coupled pair") {
    // xi > 0 at (8, 0.45); with G_high = C_8 triangle-free the pipeline
    // needs no moves and colors G_i = C_8 properly.
    Graph c8 = cycle(8);
    auto [c, d] = color_mid_p(c8, c8, 0.45, Seed{10, 0});
    CHECK(is_valid_clique_coloring(c8, c).valid);
    c8.for_edges([&](int u, int v) { CHECK(c.colors[u] != c.colors[v]); });
    CHECK(d.xi > 0);
}

TEST_CASE("color_mid_p rejects xi <= 0 and colors an in-regime pair") {
    auto [lo, hi] = generate_coupled(1000, 0.01, Seed{11, 0});
    CHECK_THROWS_AS(color_mid_p(lo, hi, 0.01, Seed{11, 1}), InapplicableRegime);

    long long n = 3000;
    double p = 1.05 * std::sqrt((std::log(static_cast<double>(n)) / 2 +
                                 std::log(std::log(static_cast<double>(n)))) /
                                static_cast<double>(n));
    REQUIRE(compute_thresholds(n, p).xi_applicable);
    auto [lo2, hi2] = generate_coupled(static_cast<int>(n), p, Seed{12, 0});
    auto [c, d] = color_mid_p(lo2, hi2, p, Seed{12, 1});
    CHECK(is_valid_clique_coloring(lo2, c).valid);
    CHECK(d.r >= 1);
}

TEST_CASE("gi_max_degree_report hand examples") {
    auto th = compute_thresholds(10'000, 0.01);

    PartitionPlan empty_plan;
    empty_plan.parts = {{0, 1, 2}};
    auto r0 = gi_max_degree_report(Graph(3), empty_plan, th);
    REQUIRE(r0.parts.size() == 1);
    CHECK(r0.parts[0].max_degree == 0);
    CHECK(r0.parts[0].x_v == std::vector<int>{0, 0, 0});
    CHECK(r0.parts[0].y_v == std::vector<int>{0, 0, 0});
    CHECK(r0.total_violations == 0);

    PartitionPlan k3_plan;
    k3_plan.parts = {{0, 1, 2}};
    auto r1 = gi_max_degree_report(complete(3), k3_plan, th);
    REQUIRE(r1.parts.size() == 1);
    CHECK(r1.parts[0].max_degree == 2);
    CHECK(r1.parts[0].x_v == std::vector<int>{1, 1, 1});
    // with the whole graph in one part there is no outside vertex, so
    // every in-part neighbor counts toward Y_v
    CHECK(r1.parts[0].y_v == std::vector<int>{2, 2, 2});
    CHECK(r1.bound == doctest::Approx(42.0 * th.gamma));
}

TEST_CASE("gi degree is at most 2X_v + Y_v") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        Graph g = generate_gnp(60, 0.2, Seed{s, 54});
        auto plan = partition_vertices(60, 4, Seed{s, 55});
        auto rep = gi_max_degree_report(g, plan, compute_thresholds(60, 0.2));
        for (const auto& part : rep.parts)
            for (std::size_t i = 0; i < part.gi_degree.size(); ++i)
                CHECK(part.gi_degree[i] <= 2 * part.x_v[i] + part.y_v[i]);
    }
}

TEST_CASE("low_p part palettes are disjoint before repair") {
    // palettes are assigned as consecutive disjoint offset blocks, so any
    // clique meeting two parts sees two colors; spot-check validity holds
    // across a few seeds with zero or few repairs
    int total_repairs = 0;
    for (std::uint64_t s = 0; s < 5; ++s) {
        Graph g = generate_gnp(1500, 0.03, Seed{s, 56});
        auto [c, d] = color_low_p(g, 0.03, Seed{s, 57});
        CHECK(is_valid_clique_coloring(g, c).valid);
        total_repairs += d.repairs;
    }
    CHECK(total_repairs >= 0);
}
