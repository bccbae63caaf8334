#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "cliquelab/cliques.hpp"
#include "cliquelab/gnp.hpp"
#include "cliquelab/graph.hpp"
#include "oracles.hpp"

using namespace cliquelab;

namespace {

Graph from_mask(int n, unsigned mask) {
    Graph::Builder b(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) b.add_edge(u, v);
    return std::move(b).build();
}

}  // namespace

TEST_CASE("maximal cliques of small named graphs") {
    Graph k3 = parse_edge_list("3 3\n0 1\n0 2\n1 2\n");
    CHECK(maximal_cliques(k3) == std::vector<std::vector<int>>{{0, 1, 2}});

    Graph p3 = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK(maximal_cliques(p3) == std::vector<std::vector<int>>{{0, 1}, {1, 2}});

    // K4 minus the edge {2,3}
    Graph diamond = parse_edge_list("4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n");
    CHECK(maximal_cliques(diamond) == std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 3}});

    Graph edgeless(3);
    CHECK(maximal_cliques(edgeless) == std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("maximal cliques agree with brute force on every graph up to n=5") {
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            Graph g = from_mask(n, mask);
            CHECK(maximal_cliques(g) == oracle::brute_maximal_cliques(g));
        }
    }
}

TEST_CASE("maximal cliques agree with brute force on random graphs") {
    int checked = 0;
    for (std::uint64_t s = 0; s < 1200; ++s) {
        Rng r(Seed{s, 10});
        int n = 6 + static_cast<int>(r.below(7));  // 6..12
        double p = 0.1 + 0.8 * r.next_double();
        Graph g = generate_gnp(n, p, Seed{s, 11});
        CHECK(maximal_cliques(g) == oracle::brute_maximal_cliques(g));
        ++checked;
    }
    CHECK(checked >= 1000);
}

TEST_CASE("clique list is an antichain covering all vertices") {
    Graph g = generate_gnp(60, 0.3, Seed{17, 0});
    auto cliques = maximal_cliques(g);
    std::vector<bool> covered(60, false);
    for (const auto& q : cliques) {
        CHECK(is_maximal_clique(g, q));
        for (int v : q) covered[v] = true;
    }
    for (bool c : covered) CHECK(c);
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = 0; j < cliques.size(); ++j) {
            if (i == j) continue;
            CHECK_FALSE(std::includes(cliques[i].begin(), cliques[i].end(), cliques[j].begin(),
                                      cliques[j].end()));
        }
}

TEST_CASE("cap aborts enumeration") {
    Graph g = generate_gnp(40, 0.5, Seed{23, 0});
    auto all = maximal_cliques(g);
    REQUIRE(all.size() > 5);
    CHECK_THROWS_AS(maximal_cliques(g, 5), CapExceeded);
    long long visited = 0;
    CHECK_THROWS_AS(
        for_each_maximal_clique(g, [&](std::span<const int>) { ++visited; }, 5), CapExceeded);
    CHECK(visited == 5);
}

TEST_CASE("is_maximal_clique rejects non-cliques and extendable cliques") {
    Graph diamond = parse_edge_list("4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n");
    std::vector<int> q1{0, 1, 2};
    CHECK(is_maximal_clique(diamond, q1));
    std::vector<int> q2{0, 1};  // extends to {0,1,2}
    CHECK_FALSE(is_maximal_clique(diamond, q2));
    std::vector<int> q3{2, 3};  // not a clique
    CHECK_FALSE(is_maximal_clique(diamond, q3));
}

TEST_CASE("edge_in_triangle") {
    Graph g = parse_edge_list("4 4\n0 1\n0 2\n1 2\n2 3\n");
    CHECK(edge_in_triangle(g, 0, 1));
    CHECK(edge_in_triangle(g, 2, 0));
    CHECK_FALSE(edge_in_triangle(g, 2, 3));
    CHECK_THROWS(edge_in_triangle(g, 0, 3));  // not an edge

    // exhaustive cross-check on a denser random graph
    Graph h = generate_gnp(40, 0.2, Seed{29, 0});
    h.for_edges([&](int u, int v) {
        bool brute = false;
        for (int w = 0; w < 40; ++w)
            if (w != u && w != v && h.has_edge(u, w) && h.has_edge(v, w)) brute = true;
        CHECK(edge_in_triangle(h, u, v) == brute);
    });
}

TEST_CASE("triangle edge fraction on named graphs") {
    Graph k3 = parse_edge_list("3 3\n0 1\n0 2\n1 2\n");
    CHECK(triangle_edge_fraction(k3) == 1.0);
    Graph c5 = parse_edge_list("5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    CHECK(triangle_edge_fraction(c5) == 0.0);
    Graph g = parse_edge_list("4 4\n0 1\n0 2\n1 2\n2 3\n");
    CHECK(triangle_edge_fraction(g) == doctest::Approx(0.75));
    CHECK_THROWS(triangle_edge_fraction(Graph(3)));
}

TEST_CASE("parallel and serial triangle fraction agree") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        Graph g = generate_gnp(500, 0.02, Seed{s, 20});
        if (g.num_edges() == 0) continue;
        CHECK(triangle_edge_fraction(g) == triangle_edge_fraction_serial(g));
    }
}

TEST_CASE("triangle edge fraction matches the ensemble mean") {
    // n=2000, p=0.002: per-edge triangle probability 1-(1-p^2)^(n-2)
    // = 0.0079615. Average over 60 graphs; the sd of the mean is a few
    // 1e-4, so +-0.0015 is a comfortable window.
    double expected = 1.0 - std::pow(1.0 - 0.002 * 0.002, 1998);
    double total = 0;
    for (std::uint64_t s = 0; s < 60; ++s)
        total += triangle_edge_fraction(generate_gnp(2000, 0.002, Seed{s, 21}));
    CHECK(std::abs(total / 60.0 - expected) < 0.0015);
}

TEST_CASE("non_triangle_edge_counts") {
    Graph g = parse_edge_list("4 4\n0 1\n0 2\n1 2\n2 3\n");
    CHECK(non_triangle_edge_counts(g) == std::vector<int>{0, 0, 1, 1});
    Graph c5 = parse_edge_list("5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    CHECK(non_triangle_edge_counts(c5) == std::vector<int>{2, 2, 2, 2, 2});
    CHECK(non_triangle_edge_counts(Graph(2)) == std::vector<int>{0, 0});
}

TEST_CASE("uncovered") {
    Graph g = parse_edge_list("4 4\n0 1\n0 2\n1 2\n2 3\n");
    std::vector<int> s{0, 1};
    std::vector<int> t01{0, 1};
    CHECK_FALSE(uncovered(g, s, t01));  // vertex 2 covers {0,1}
    std::vector<int> s3{0, 1, 3};
    CHECK_FALSE(uncovered(g, s3, t01));
    std::vector<int> s23{2, 3};
    std::vector<int> t23{2, 3};
    CHECK(uncovered(g, s23, t23));  // no outside vertex sees both 2 and 3
    std::vector<int> bad{2};
    CHECK_THROWS(uncovered(g, s, bad));  // t not inside s
}
