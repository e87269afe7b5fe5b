#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oneplane/gen.hpp"
#include "oneplane/structure.hpp"

using namespace oneplane;

namespace {

Graph complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph(n, es);
}

Graph biclique(int a, int b) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.push_back({u, a + v});
    return Graph(a + b, es);
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

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng_unit(rng) < p) es.push_back({u, v});
    return Graph(n, es);
}

} // namespace

TEST_CASE("classification basics") {
    const auto k4 = named_drawing("K4");
    const auto cls = classify(k4);
    for (int v = 0; v < 4; ++v) CHECK(cls.letter[v] == 'S');
    for (int f = 0; f < k4.face_count(); ++f) {
        CHECK(cls.signature[f] == "SSS");
        CHECK(cls.burdened[f]);
    }

    const auto w18 = named_drawing("W18");
    const auto cw = classify(w18);
    const Graph g = w18.recover_original();
    for (int v = 0; v < 19; ++v)
        CHECK(cw.letter[v] == (g.degree(v) == 18 ? 'B' : 'S'));
}

TEST_CASE("canonical signatures") {
    CHECK(canonical_cyclic("FSBS") == canonical_cyclic("SFSB"));
    CHECK(canonical_cyclic("FSBS") == canonical_cyclic("SBSF"));
    CHECK(canonical_cyclic("FSB") == canonical_cyclic("FBS")); // reflection
    CHECK(canonical_cyclic("FSSB") != canonical_cyclic("FSBS"));
}

TEST_CASE("config (a) detection") {
    CHECK(find_config_a(complete(3)) == Edge{0, 1});
    CHECK_FALSE(find_config_a(star(20)).has_value()); // every edge sums to 21
    const Graph w18 = named_drawing("W18").recover_original();
    const auto e = find_config_a(w18);
    REQUIRE(e.has_value());
    CHECK(check_config_a(w18, *e));
    CHECK(w18.degree(e->first) + w18.degree(e->second) <= 19);
}

TEST_CASE("config (b) detection") {
    const auto e = find_config_b(complete(7));
    REQUIRE(e.has_value());
    CHECK(check_config_b(complete(7), *e));
    CHECK_FALSE(find_config_b(complete(3)).has_value());

    const Graph hubs = named_graph("two-hubs");
    const auto f = find_config_b(hubs);
    REQUIRE(f.has_value());
    CHECK(*f == Edge{0, 1}); // 8 + 8 = 16
}

TEST_CASE("alternator detection on K_{2,4}") {
    const Graph g = biclique(2, 4);
    const auto r = find_alternator(g, 2, AlternatorKind::Alternator);
    REQUIRE(r.status == SearchStatus::Found);
    REQUIRE(check_alternator(g, *r.witness));
    CHECK(r.witness->x == std::vector<int>{2, 3, 4, 5});
    CHECK(r.witness->y == std::vector<int>{0, 1});

    const auto oracle = alternator_oracle(g, 2, AlternatorKind::Alternator);
    CHECK(oracle.status == SearchStatus::Found);
    CHECK(check_alternator(g, *oracle.witness));
}

TEST_CASE("no alternator when no low-degree vertices") {
    const Graph k5 = complete(5);
    CHECK(find_alternator(k5, 2, AlternatorKind::Alternator).status == SearchStatus::None);
    CHECK(alternator_oracle(k5, 2, AlternatorKind::Alternator).status == SearchStatus::None);
}

TEST_CASE("subdivided K9 has no 2-alternator but a master") {
    const Graph g = named_graph("subdivided-K9");
    CHECK(find_alternator(g, 2, AlternatorKind::Alternator).status == SearchStatus::None);
    CHECK(alternator_oracle(g, 2, AlternatorKind::Alternator).status == SearchStatus::None);

    const auto m = build_master_assignment(g, 2);
    REQUIRE(std::holds_alternative<MasterAssignment>(m));
    const auto& ma = std::get<MasterAssignment>(m);
    REQUIRE(ma.pairs.size() == 1);
    CHECK(ma.pairs[0].first == 9);
    CHECK((ma.pairs[0].second == 7 || ma.pairs[0].second == 8));
    CHECK(check_master(g, ma));
}

TEST_CASE("k out of range is an input error") {
    CHECK_THROWS_AS(find_alternator(cycle(8), 2, AlternatorKind::Alternator), InputError);
    CHECK_THROWS_AS(alternator_oracle(cycle(8), 2, AlternatorKind::Alternator), InputError);
    CHECK_THROWS_AS(build_master_assignment(cycle(8), 2), InputError);
}

TEST_CASE("master assignment infeasible on K_{2,4} with certificate") {
    const Graph g = biclique(2, 4);
    const auto m = build_master_assignment(g, 2);
    REQUIRE(std::holds_alternative<DeficientSet>(m));
    const auto& cert = std::get<DeficientSet>(m);
    CHECK(check_deficient(g, cert));
    CHECK(cert.clients.size() > 2); // capacity is only 2
}

TEST_CASE("empty X_k yields the empty assignment") {
    const Graph k5 = complete(5);
    const auto m = build_master_assignment(k5, 2);
    REQUIRE(std::holds_alternative<MasterAssignment>(m));
    CHECK(std::get<MasterAssignment>(m).pairs.empty());
}

TEST_CASE("masters chain on W18") {
    const Graph g = named_drawing("W18").recover_original();

    const auto chain = masters_chain(g, AlternatorKind::AlternatingSubgraph);
    CHECK(chain.entries.at(2).status == ChainEntry::Status::Empty);
    for (int k = 3; k <= 5; ++k) {
        REQUIRE(chain.entries.at(k).status == ChainEntry::Status::Masters);
        const auto& m = *chain.entries.at(k).masters;
        CHECK(m.pairs.size() == 18);
        CHECK(check_master(g, m));
        // fact (2): every vertex masters at most k-1 clients
        std::map<int, int> load;
        for (const auto& [x, y] : m.pairs) ++load[y];
        for (const auto& [y, c] : load) CHECK(c <= k - 1);
    }

    const auto blocked = masters_chain(g, AlternatorKind::Alternator);
    for (int k = 3; k <= 5; ++k) {
        REQUIRE(blocked.entries.at(k).status == ChainEntry::Status::Blocked);
        CHECK(check_alternator(g, *blocked.entries.at(k).blocking));
    }

    // masters_of: rim vertices (degree 3) have k-masters for k = 3..5.
    const auto got = chain.masters_of(g, 1);
    CHECK(got.size() == 3);

    CHECK_THROWS_AS(masters_chain(complete(5)), InputError);
    CHECK_THROWS_AS(masters_chain(named_graph("subdivided-K9")), InputError); // Delta = 8
}

TEST_CASE("structure theorem check") {
    const auto k3 = named_drawing("K3");
    const auto w = structure_theorem_check(k3);
    REQUIRE(w.has_value());
    CHECK(w->type == StructureWitness::Type::ConfigA);

    const auto k7mm = named_drawing("K7-minus-matching");
    const auto w2 = structure_theorem_check(k7mm);
    REQUIRE(w2.has_value());
    // all degrees 5 or 6, so a light edge of type (a) exists
    CHECK(w2->type == StructureWitness::Type::ConfigA);

    const auto star21 = generate({Family::Star, 21, 0.0, 0});
    CHECK_THROWS_AS(structure_theorem_check(star21), InputError); // delta = 1
}

TEST_CASE("detector agrees with oracle on random graphs") {
    std::mt19937_64 rng(555);
    int compared = 0;
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 4 + static_cast<int>(rng_below(rng, 7));
        const Graph g = random_graph(rng, n, 0.15 + 0.5 * rng_unit(rng));
        if (g.vertex_count() == 0 || g.edge_count() == 0) continue;
        for (int k : {2, 3}) {
            if (k > g.max_degree() / 2) continue;
            for (const auto kind :
                 {AlternatorKind::Alternator, AlternatorKind::AlternatingSubgraph}) {
                const auto fast = find_alternator(g, k, kind);
                const auto slow = alternator_oracle(g, k, kind);
                REQUIRE(fast.status != SearchStatus::ScopeExceeded);
                CHECK(fast.status == slow.status);
                if (fast.status == SearchStatus::Found) {
                    CHECK(check_alternator(g, *fast.witness));
                    CHECK(check_alternator(g, *slow.witness));
                }
                ++compared;
            }
        }
    }
    CHECK(compared > 100);
}

TEST_CASE("peeling maximality: every feasible subset of the seed is kept") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 4 + static_cast<int>(rng_below(rng, 6));
        const Graph g = random_graph(rng, n, 0.3 + 0.4 * rng_unit(rng));
        if (g.vertex_count() == 0 || g.edge_count() == 0) continue;
        for (int k : {2, 3}) {
            if (k > g.max_degree() / 2) continue;
            std::vector<int> lows;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) <= k) lows.push_back(v);
            if (lows.empty()) continue;
            // Only the regime where the seed covers all candidates.
            bool independent_lows = true;
            for (int v : lows)
                for (int w : g.neighbors(v))
                    if (g.degree(w) <= k) independent_lows = false;
            if (!independent_lows) continue;

            const auto fast = find_alternator(g, k, AlternatorKind::Alternator);
            // Enumerate all feasible subsets; each must be inside the peel.
            const int L = static_cast<int>(lows.size());
            for (std::uint64_t mask = 1; mask < (1ULL << L); ++mask) {
                AlternatorWitness cand;
                cand.k = k;
                cand.kind = AlternatorKind::Alternator;
                std::set<int> xs;
                for (int i = 0; i < L; ++i)
                    if (mask >> i & 1) xs.insert(lows[i]);
                cand.x.assign(xs.begin(), xs.end());
                std::set<int> ys;
                for (int v : cand.x)
                    for (int u : g.neighbors(v)) ys.insert(u);
                cand.y.assign(ys.begin(), ys.end());
                if (!check_alternator(g, cand)) continue;
                REQUIRE(fast.status == SearchStatus::Found);
                for (int v : cand.x) {
                    const auto& wx = fast.witness->x;
                    CHECK(std::binary_search(wx.begin(), wx.end(), v));
                }
            }
        }
    }
}

TEST_CASE("deficient certificates are mutually exclusive with assignments") {
    std::mt19937_64 rng(999);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 4 + static_cast<int>(rng_below(rng, 8));
        const Graph g = random_graph(rng, n, 0.2 + 0.5 * rng_unit(rng));
        if (g.vertex_count() == 0 || g.edge_count() == 0) continue;
        for (int k : {2, 3}) {
            if (k > g.max_degree() / 2) continue;
            const auto r = build_master_assignment(g, k);
            if (std::holds_alternative<MasterAssignment>(r)) {
                CHECK(check_master(g, std::get<MasterAssignment>(r)));
            } else {
                CHECK(check_deficient(g, std::get<DeficientSet>(r)));
            }
        }
    }
}
