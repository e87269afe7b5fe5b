#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oneplane/graph.hpp"
#include "oneplane/rational.hpp"

using namespace oneplane;

namespace {

Graph complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph(n, es);
}

Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, es);
}

Graph star(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
    return Graph(leaves + 1, es);
}

Graph biclique(int a, int b) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.push_back({u, a + v});
    return Graph(a + b, es);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng_unit(rng) < p) es.push_back({u, v});
    return Graph(n, es);
}

} // namespace

TEST_CASE("degree basics") {
    CHECK(complete(3).degree(0) == 2);
    CHECK(complete(3).degree(2) == 2);
    CHECK(star(20).degree(0) == 20);
    CHECK(cycle(5).degree(3) == 2);
    CHECK_THROWS_AS(cycle(5).degree(7), InputError);
}

TEST_CASE("degree extremes") {
    CHECK(cycle(5).degree_extremes() == std::pair{2, 2});
    CHECK(star(20).degree_extremes() == std::pair{1, 20});
    CHECK(biclique(2, 4).degree_extremes() == std::pair{2, 4});
    CHECK_THROWS_AS(Graph(0).degree_extremes(), InputError);
}

TEST_CASE("connectivity") {
    CHECK(cycle(5).is_connected());
    CHECK(Graph(1).is_connected());
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(two_triangles.is_connected());
}

TEST_CASE("remove_edge value semantics") {
    const Graph k3 = complete(3);
    const Graph p3 = k3.remove_edge(0, 1);
    CHECK(k3.edge_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(0) == 1);
    CHECK(p3.degree(2) == 2);

    const Graph c5 = cycle(5);
    const Graph path = c5.remove_edge(0, 4);
    CHECK(path.degree_extremes() == std::pair{1, 2});
    CHECK(path.is_connected());

    Graph k24 = biclique(2, 4).remove_edge(0, 2);
    std::multiset<int> degs;
    for (int v = 0; v < 6; ++v) degs.insert(k24.degree(v));
    CHECK(degs == std::multiset<int>{1, 2, 2, 2, 3, 4});

    CHECK_THROWS_AS(c5.remove_edge(0, 2), InputError);
}

TEST_CASE("simple graph invariants") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), InputError);
}

TEST_CASE("handshake and roundtrip over random graphs") {
    std::mt19937_64 rng(20240711);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 1 + static_cast<int>(rng_below(rng, 14));
        const Graph g = random_graph(rng, n, rng_unit(rng));
        long long total = 0;
        int lo = n > 0 ? g.degree(0) : 0, hi = lo;
        for (int v = 0; v < n; ++v) {
            total += g.degree(v);
            lo = std::min(lo, g.degree(v));
            hi = std::max(hi, g.degree(v));
        }
        CHECK(total == 2LL * g.edge_count());
        if (n > 0) CHECK(g.degree_extremes() == std::pair{lo, hi});
        if (g.edge_count() > 0) {
            const auto e = g.edges()[rng_below(rng, g.edges().size())];
            CHECK(g.remove_edge(e.first, e.second).add_edge(e.first, e.second) == g);
        }
    }
}

TEST_CASE("rational arithmetic stays exact") {
    const Rational third(1, 3);
    const Rational r = third + Rational(1, 2) - Rational(5, 6);
    CHECK(r.zero());
    CHECK(Rational::sixths(8) == Rational(4, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK((Rational(7, 9) * Rational(3, 7)) == Rational(1, 3));
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(1, 3) < Rational(1, 2));
    Rational sum = 0;
    for (int i = 0; i < 1000; ++i) sum += Rational(1, 7);
    CHECK(sum == Rational(1000, 7));
}
