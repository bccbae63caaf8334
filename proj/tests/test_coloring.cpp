#include <doctest.h>

#include <algorithm>
#include <vector>

#include "cliquelab/cliques.hpp"
#include "cliquelab/coloring.hpp"
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

Graph wheel5() {
    Graph::Builder b(6);
    for (int v = 0; v < 5; ++v) {
        b.add_edge(v, (v + 1) % 5);
        b.add_edge(v, 5);
    }
    return std::move(b).build();
}

}  // namespace

TEST_CASE("normalize_coloring remaps by first appearance") {
    auto c = normalize_coloring({7, 3, 7, 0, 3});
    CHECK(c.colors == std::vector<int>{0, 1, 0, 2, 1});
    CHECK(c.palette == 3);
    CHECK(normalize_coloring({}).palette == 0);
}

TEST_CASE("validity on hand examples") {
    Graph k3 = complete(3);
    CliqueColoring mono{{0, 0, 0}, 1};
    auto bad = is_valid_clique_coloring(k3, mono);
    CHECK_FALSE(bad.valid);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == std::vector<int>{0, 1, 2});

    CliqueColoring two{{0, 0, 1}, 2};
    CHECK(is_valid_clique_coloring(k3, two).valid);

    // P3 with both edges monochromatic under one color is invalid, and a
    // proper coloring is valid.
    Graph p3 = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK_FALSE(is_valid_clique_coloring(p3, {{0, 0, 1}, 2}).valid);
    CHECK(is_valid_clique_coloring(p3, {{0, 1, 0}, 2}).valid);

    // isolated vertices impose nothing
    Graph iso(4);
    CHECK(is_valid_clique_coloring(iso, {{0, 0, 0, 0}, 1}).valid);
}

TEST_CASE("monochromatic maximal cliques listing") {
    Graph p3 = parse_edge_list("3 2\n0 1\n1 2\n");
    auto all = monochromatic_maximal_cliques(p3, {{0, 0, 0}, 1});
    CHECK(all == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
    auto first = monochromatic_maximal_cliques(p3, {{0, 0, 0}, 1}, true);
    CHECK(first.size() == 1);
}

TEST_CASE("repair fixes an invalid coloring") {
    Graph g = generate_gnp(60, 0.3, Seed{3, 0});
    CliqueColoring c{std::vector<int>(60, 0), 1};
    int repairs = repair_clique_coloring(g, c);
    CHECK(repairs > 0);
    CHECK(is_valid_clique_coloring(g, c).valid);

    // already valid: no work
    CliqueColoring v = greedy_proper_coloring(g);
    CHECK(repair_clique_coloring(g, v) == 0);
}

TEST_CASE("exact values on named graphs") {
    for (int n = 2; n <= 7; ++n) {
        auto r = exact_clique_chromatic(complete(n));
        CHECK(r.value == 2);
        CHECK(r.proven);
        CHECK(is_valid_clique_coloring(complete(n), r.certificate).valid);
        CHECK(r.certificate.palette == 2);
    }
    CHECK(exact_clique_chromatic(cycle(5)).value == 3);
    CHECK(exact_clique_chromatic(wheel5()).value == 2);
    CHECK(exact_clique_chromatic(Graph(4)).value == 1);
    CHECK(exact_clique_chromatic(Graph(0)).value == 0);
}

TEST_CASE("exact agrees with brute force on random small graphs") {
    for (std::uint64_t s = 0; s < 300; ++s) {
        Rng r(Seed{s, 30});
        int n = 4 + static_cast<int>(r.below(5));  // 4..8
        double p = 0.15 + 0.7 * r.next_double();
        Graph g = generate_gnp(n, p, Seed{s, 31});
        auto res = exact_clique_chromatic(g);
        CHECK(res.proven);
        CHECK(res.value == oracle::brute_clique_chromatic(g));
        CHECK(is_valid_clique_coloring(g, res.certificate).valid);
        CHECK(res.certificate.palette == res.value);
    }
}

TEST_CASE("exact equals chromatic number on triangle-free graphs") {
    int found = 0;
    for (std::uint64_t s = 0; found < 60; ++s) {
        REQUIRE(s < 5000);
        Rng r(Seed{s, 32});
        int n = 4 + static_cast<int>(r.below(9));  // 4..12
        Graph g = generate_gnp(n, 0.22, Seed{s, 33});
        if (g.num_edges() == 0 || oracle::has_triangle(g)) continue;
        CHECK(exact_clique_chromatic(g).value == oracle::brute_chromatic_number(g));
        ++found;
    }
}

TEST_CASE("exact budget exhaustion is reported honestly") {
    Graph g = generate_gnp(40, 0.5, Seed{77, 0});
    ExactBudget tiny;
    tiny.node_limit = 10;
    auto r = exact_clique_chromatic(g, tiny);
    if (!r.proven) {
        CHECK(is_valid_clique_coloring(g, r.certificate).valid);
        CHECK(r.value == r.certificate.palette);
    }
}

TEST_CASE("greedy proper coloring is proper and hence clique valid") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        Graph g = generate_gnp(150, 0.1, Seed{s, 40});
        auto c = greedy_proper_coloring(g);
        g.for_edges([&](int u, int v) { CHECK(c.colors[u] != c.colors[v]); });
        CHECK(c.palette <= g.max_degree() + 1);
        if (g.num_edges() > 0) CHECK(is_valid_clique_coloring(g, c).valid);
    }
    std::vector<int> order{2, 1, 0};
    auto c = greedy_proper_coloring(parse_edge_list("3 2\n0 1\n1 2\n"), order);
    CHECK(c.palette == 2);
}

TEST_CASE("greedy dominating set") {
    CHECK(greedy_dominating_set(complete(5)).size() == 1);
    CHECK(greedy_dominating_set(Graph(3)).size() == 3);
    // star: the hub alone dominates
    Graph star = parse_edge_list("5 4\n0 1\n0 2\n0 3\n0 4\n");
    CHECK(greedy_dominating_set(star) == std::vector<int>{0});

    for (std::uint64_t s = 0; s < 20; ++s) {
        Graph g = generate_gnp(100, 0.05, Seed{s, 41});
        auto d = greedy_dominating_set(g);
        std::vector<bool> dom(100, false);
        for (int v : d) {
            dom[v] = true;
            g.for_neighbors(v, [&](int u) { dom[u] = true; });
        }
        for (bool x : dom) CHECK(x);
    }
}

TEST_CASE("dominating set coloring") {
    auto k5 = dominating_set_coloring(complete(5));
    CHECK(k5.dominating_size == 1);
    CHECK(k5.coloring.palette == 2);
    CHECK(is_valid_clique_coloring(complete(5), k5.coloring).valid);

    auto e4 = dominating_set_coloring(Graph(4));
    CHECK(is_valid_clique_coloring(Graph(4), e4.coloring).valid);

    for (std::uint64_t s = 0; s < 10; ++s) {
        Graph g = generate_gnp(200, 0.08, Seed{s, 42});
        auto r = dominating_set_coloring(g);
        CHECK(is_valid_clique_coloring(g, r.coloring).valid);
        CHECK(r.coloring.palette <= r.dominating_size + 1 + r.repairs);
    }
}

TEST_CASE("exact is a lower bound for the heuristics") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        Graph g = generate_gnp(12, 0.4, Seed{s, 43});
        int exact = exact_clique_chromatic(g).value;
        if (g.num_edges() > 0) {
            CHECK(exact <= greedy_proper_coloring(g).palette);
            CHECK(exact <= dominating_set_coloring(g).coloring.palette);
        }
    }
}

TEST_CASE("coloring serialization round trip") {
    CliqueColoring c{{0, 1, 0, 2}, 3};
    std::string text = serialize_coloring(c);
    CHECK(text == "palette 3\n0 0\n1 1\n2 0\n3 2\n");
    auto back = parse_coloring(text);
    CHECK(back.colors == c.colors);
    CHECK(back.palette == c.palette);
    CHECK_THROWS(parse_coloring("nope\n"));
    CHECK_THROWS(parse_coloring("palette 2\n0 5\n"));
}
