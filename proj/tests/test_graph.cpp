#include <doctest.h>

#include "daisy/families.hpp"
#include "daisy/graph.hpp"

using daisy::BitLabel;
using daisy::Error;
using daisy::Graph;
using daisy::VertexSet;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph::build(n, es);
}

}  // namespace

TEST_CASE("build validates input") {
    CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), Error);
    CHECK_THROWS_AS(Graph::build(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(Graph::build(2, {{0, 1}}, std::nullopt, 2), Error);
    // Labelled edges must join labels at Hamming distance one.
    std::vector<BitLabel> bad = {BitLabel::from_string("00"), BitLabel::from_string("11")};
    CHECK_THROWS_AS(Graph::build(2, {{0, 1}}, bad), Error);
    std::vector<BitLabel> dup = {BitLabel::from_string("01"), BitLabel::from_string("01")};
    CHECK_THROWS_AS(Graph::build(2, {}, dup), Error);
    std::vector<BitLabel> mixed = {BitLabel::from_string("0"), BitLabel::from_string("01")};
    CHECK_THROWS_AS(Graph::build(2, {}, mixed), Error);
}

TEST_CASE("adjacency structure") {
    Graph g = Graph::build(4, {{2, 3}, {0, 1}, {1, 2}, {1, 3}});
    CHECK(g.n_edges() == 4);
    CHECK(g.edges()[0] == daisy::Edge{0, 1});  // sorted regardless of input order
    CHECK(g.neighbors(1) == std::vector<int>{0, 2, 3});
    CHECK(g.degree(1) == 3);
    CHECK(g.adjacent(3, 1));
    CHECK(!g.adjacent(0, 3));
    CHECK(!g.adjacent(2, 2));
}

TEST_CASE("from_labels derives hypercube edges") {
    std::vector<BitLabel> q2 = {BitLabel::from_string("00"), BitLabel::from_string("10"),
                                BitLabel::from_string("01"), BitLabel::from_string("11")};
    Graph g = Graph::from_labels(q2, 0);
    CHECK(g.n_edges() == 4);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 2));
    CHECK(!g.adjacent(0, 3));
    CHECK(g.base() == 0);
    CHECK(g.label(3).to_string() == "11");
}

TEST_CASE("distances") {
    Graph g = path(5);
    daisy::DistanceMatrix dm = daisy::all_pairs_distances(g);
    CHECK(dm.at(0, 4) == 4);
    CHECK(dm.at(2, 2) == 0);
    CHECK(dm == daisy::all_pairs_distances_serial(g));

    Graph two = Graph::build(4, {{0, 1}, {2, 3}});
    daisy::DistanceMatrix dm2 = daisy::all_pairs_distances(two);
    CHECK(dm2.at(0, 1) == 1);
    CHECK(dm2.at(1, 2) == daisy::DistanceMatrix::unreachable);
    CHECK(!daisy::is_connected(two));
    CHECK(daisy::is_connected(g));
    CHECK(daisy::is_connected(Graph::build(1, {})));
}

TEST_CASE("bipartition and odd cycle witness") {
    daisy::Bipartition bp = daisy::bipartition(daisy::cycle_graph(6));
    REQUIRE(bp.ok);
    CHECK(bp.side[0] != bp.side[1]);
    CHECK(bp.side[0] == bp.side[2]);

    Graph c5 = daisy::cycle_graph(5);
    daisy::Bipartition bad = daisy::bipartition(c5);
    REQUIRE(!bad.ok);
    REQUIRE(bad.odd_cycle.size() % 2 == 1);
    for (size_t i = 0; i < bad.odd_cycle.size(); ++i) {
        int u = bad.odd_cycle[i];
        int v = bad.odd_cycle[(i + 1) % bad.odd_cycle.size()];
        CHECK(c5.adjacent(u, v));
    }
}

TEST_CASE("intervals") {
    Graph c6 = daisy::cycle_graph(6);
    daisy::DistanceMatrix dm = daisy::all_pairs_distances(c6);
    CHECK(daisy::interval(c6, dm, 0, 2) == VertexSet::of(6, {0, 1, 2}));
    // Antipodal pair: both ways around are geodesics.
    CHECK(daisy::interval(c6, dm, 0, 3).count() == 6);
    CHECK(daisy::interval(c6, dm, 4, 4) == VertexSet::of(6, {4}));

    Graph two = Graph::build(4, {{0, 1}, {2, 3}});
    daisy::DistanceMatrix dm2 = daisy::all_pairs_distances(two);
    CHECK_THROWS_AS(daisy::interval(two, dm2, 0, 2), Error);
}

TEST_CASE("induced subgraphs and isometry") {
    Graph c6 = daisy::cycle_graph(6);
    daisy::DistanceMatrix dm = daisy::all_pairs_distances(c6);

    daisy::InducedSubgraph sub = daisy::induced_subgraph(c6, VertexSet::of(6, {1, 2, 4}));
    CHECK(sub.to_parent == std::vector<int>{1, 2, 4});
    CHECK(sub.graph.n_edges() == 1);  // only 1-2 survives

    // A 4-vertex arc of the hexagon is isometric, a 5-vertex arc is not.
    CHECK(daisy::is_isometric_subgraph(c6, dm, VertexSet::of(6, {0, 1, 2, 3})));
    CHECK(!daisy::is_isometric_subgraph(c6, dm, VertexSet::of(6, {0, 1, 2, 3, 4})));
    // Disconnected pieces are never isometric.
    CHECK(!daisy::is_isometric_subgraph(c6, dm, VertexSet::of(6, {0, 3})));
}

TEST_CASE("convexity and hulls") {
    Graph c6 = daisy::cycle_graph(6);
    daisy::DistanceMatrix dm = daisy::all_pairs_distances(c6);
    CHECK(daisy::is_convex(c6, dm, VertexSet::of(6, {0, 1, 2})));
    CHECK(!daisy::is_convex(c6, dm, VertexSet::of(6, {0, 2})));
    CHECK(daisy::convex_hull(c6, dm, VertexSet::of(6, {0, 2})) == VertexSet::of(6, {0, 1, 2}));
    CHECK(daisy::convex_hull(c6, dm, VertexSet::of(6, {0, 3})).count() == 6);

    // Hull in a hypercube is the spanned subcube.
    Graph q3 = daisy::hypercube(3);
    daisy::DistanceMatrix dmq = daisy::all_pairs_distances(q3);
    VertexSet corners = VertexSet::of(8, {0, 6});  // 000 and 011
    VertexSet hull = daisy::convex_hull(q3, dmq, corners);
    CHECK(hull == VertexSet::of(8, {0, 2, 4, 6}));
    CHECK(daisy::is_convex(q3, dmq, hull));
}

TEST_CASE("vertex set operations") {
    VertexSet a = VertexSet::of(70, {0, 1, 65});
    VertexSet b = VertexSet::of(70, {1, 65, 69});
    CHECK((a & b) == VertexSet::of(70, {1, 65}));
    CHECK((a | b).count() == 4);
    CHECK(VertexSet::of(70, {1, 65}).subset_of(a));
    CHECK(!a.subset_of(b));
    CHECK(a.to_vector() == std::vector<int>{0, 1, 65});
    a.reset(65);
    CHECK(a == VertexSet::of(70, {0, 1}));
    CHECK(VertexSet(5).empty());
}
