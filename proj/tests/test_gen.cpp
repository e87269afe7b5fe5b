#include <catch2/catch_amalgamated.hpp>

#include "oneplane/gen.hpp"

using namespace oneplane;

namespace {

bool drawings_equal(const OnePlaneDrawing& a, const OnePlaneDrawing& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (int v = 0; v < a.vertex_count(); ++v) {
        if (a.kind(v) != b.kind(v)) return false;
        if (a.rotation(v) != b.rotation(v)) return false;
    }
    return a.edge_list() == b.edge_list();
}

} // namespace

TEST_CASE("wheel drawing") {
    const auto d = generate({Family::Wheel, 19, 0.0, 0});
    REQUIRE(d.validate().ok());
    const Graph g = d.recover_original();
    CHECK(g.vertex_count() == 19);
    CHECK(g.degree_extremes() == std::pair{3, 18});
    // n-1 triangles plus the rim face
    CHECK(d.face_count() == 19);
}

TEST_CASE("cycle drawing") {
    const auto d = generate({Family::Cycle, 5, 0.0, 0});
    CHECK(d.validate().ok());
    CHECK(d.face_count() == 2);
}

TEST_CASE("triangulation has 2n-4 faces") {
    const auto d = generate({Family::Triangulation, 12, 0.0, 7});
    REQUIRE(d.validate().ok());
    CHECK(d.face_count() == 2 * 12 - 4);
    for (const Face& f : d.faces()) CHECK(f.degree() == 3);
    const Graph g = d.recover_original();
    CHECK(g.edge_count() == 3 * 12 - 6);
    CHECK(g.min_degree() >= 3);
}

TEST_CASE("fan triangulation concentrates degree on the hub") {
    const auto d = generate({Family::FanTriangulation, 13, 0.0, 3});
    REQUIRE(d.validate().ok());
    const Graph g = d.recover_original();
    CHECK(g.degree(0) >= 10);
    CHECK(g.max_degree() == g.degree(0));
}

TEST_CASE("quadrangulation base and crossing insertion") {
    const auto base = detail::quadrangulation(16, 3, false);
    REQUIRE(base.validate().ok());
    for (const Face& f : base.faces()) CHECK(f.degree() == 4);

    const auto filled = insert_crossings(base, 0.5, 99);
    REQUIRE(filled.validate().ok());
    CHECK(filled.vertex_count() > base.vertex_count()); // some fill happened
    const Graph g = filled.recover_original();
    CHECK(g.vertex_count() == 16);

    const auto identity = insert_crossings(base, 0.0, 99);
    CHECK(drawings_equal(identity, base));
}

TEST_CASE("single quad fill recovers K4") {
    DrawingBuilder b = detail::cycle_builder(4);
    const auto base = freeze(b);
    const auto filled = insert_crossings(base, 1.0, 1);
    REQUIRE(filled.validate().ok());
    // Both faces of C4 are 4-faces; the second fill is skipped because the
    // diagonals already exist.
    const Graph g = filled.recover_original();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
}

TEST_CASE("hex crossed family validates and keeps 4-faces with false corners") {
    const auto d = generate({Family::CrossedHexangulation, 20, 1.0, 11});
    REQUIRE(d.validate().ok());
    bool quad_with_false = false;
    for (int f = 0; f < d.face_count(); ++f)
        if (d.faces()[f].degree() == 4 && d.face_has_false_vertex(f)) quad_with_false = true;
    CHECK(quad_with_false);
    CHECK(d.recover_original().min_degree() >= 2);
}

TEST_CASE("determinism: same spec, same drawing") {
    const GenSpec spec{Family::CrossedQuadrangulation, 24, 0.6, 42};
    const auto a = generate(spec);
    const auto b = generate(spec);
    CHECK(drawings_equal(a, b));
}

TEST_CASE("named drawings and graphs") {
    CHECK_THROWS_AS(named_drawing("no-such"), InputError);
    CHECK_THROWS_AS(named_graph("no-such"), InputError);

    const Graph sk9 = named_graph("subdivided-K9");
    CHECK(sk9.vertex_count() == 10);
    CHECK(sk9.degree(9) == 2);
    CHECK(sk9.degree(0) == 8);
    CHECK(sk9.degree(7) == 8);

    const Graph hubs = named_graph("two-hubs");
    CHECK(hubs.degree(0) == 8);
    CHECK(hubs.degree(1) == 8);

    const auto k7mm = named_drawing("K7-minus-matching");
    REQUIRE(k7mm.validate().ok());
    const Graph g = k7mm.recover_original();
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 18);
    // hub recovers to degree 6, ring vertices to degree 5
    std::multiset<int> degs;
    for (int v = 0; v < 7; ++v) degs.insert(g.degree(v));
    CHECK(degs == std::multiset<int>{5, 5, 5, 5, 5, 5, 6});
}

TEST_CASE("corpus: all drawings validate, recover simple, delta >= 2") {
    const auto specs = corpus_specs(40, 7);
    for (const auto& spec : specs) {
        const auto d = generate(spec);
        INFO(family_name(spec.family) << " n=" << spec.n << " seed=" << spec.seed);
        REQUIRE(d.validate().ok());
        const Graph g = d.recover_original();
        CHECK(g.is_connected());
        CHECK(g.min_degree() >= 2);
        CHECK(g.vertex_count() >= 10);
        CHECK(g.vertex_count() <= 80);
    }
}

TEST_CASE("generator round-trip: recovery is simple on 100 seeded instances") {
    const auto specs = corpus_specs(100, 2024);
    for (const auto& spec : specs) {
        const auto d = generate(spec);
        REQUIRE(d.validate().ok());
        const Graph g = d.recover_original();
        long long total = 0;
        for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
        CHECK(total == 2LL * g.edge_count());
    }
}
