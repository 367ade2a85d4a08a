#include <doctest.h>

#include "daisy/classify.hpp"
#include "daisy/families.hpp"

using daisy::AnalysisReport;
using daisy::BitLabel;
using daisy::CanonicalEmbedding;
using daisy::Graph;
using daisy::Poly1;
using daisy::Poly2;

namespace {

std::vector<std::string> maximal_labels(const AnalysisReport& r) {
    std::vector<std::string> out;
    for (int v : r.flags.maximal) out.push_back(r.recognition.embedding.labels[v].to_string());
    return out;
}

}  // namespace

TEST_CASE("maximal vertices") {
    AnalysisReport r = daisy::analyze(daisy::fibonacci_cube(3));
    CHECK(r.flags.maximal == std::vector<int>{2, 4});
    CHECK(maximal_labels(r) == std::vector<std::string>{"010", "101"});
    // A hypercube has a single maximal vertex, the all-ones one.
    AnalysisReport q = daisy::analyze(daisy::hypercube(3));
    CHECK(q.flags.maximal.size() == 1);
    CHECK(q.recognition.embedding.labels[q.flags.maximal[0]].weight() == 3);
}

TEST_CASE("downward closure decision") {
    CHECK(daisy::analyze(daisy::fibonacci_cube(5)).flags.is_daisy_at_base);
    CHECK(daisy::analyze(daisy::lucas_cube(4)).flags.is_daisy_at_base);
    CHECK(daisy::analyze(daisy::hypercube(4)).flags.is_daisy_at_base);
    CHECK(!daisy::analyze(daisy::figure1_graph()).flags.is_daisy_at_base);

    AnalysisReport c6 = daisy::analyze(daisy::cycle_graph(6));
    CHECK(!c6.flags.is_daisy_at_base);
    REQUIRE(c6.flags.daisy_missing_label.has_value());
    // The reported label is genuinely missing yet sits under a present one.
    const auto& labels = c6.recognition.embedding.labels;
    BitLabel miss = *c6.flags.daisy_missing_label;
    bool present = false, under = false;
    for (const BitLabel& l : labels) {
        if (l == miss) present = true;
        if (miss.subsumed_by(l) && l != miss) under = true;
    }
    CHECK(!present);
    CHECK(under);
}

TEST_CASE("base changes the downward closure verdict") {
    // The cube-minus-vertex is closed when based opposite the hole and not
    // closed when based next to it.
    CHECK(daisy::analyze(daisy::figure2_q3_minus()).flags.is_daisy_at_base);
    AnalysisReport off = daisy::analyze(daisy::figure2_q3_minus(), 0);
    CHECK(off.base == 0);
    CHECK(off.base_rule == "flag");
    CHECK(!off.flags.is_daisy_at_base);
    CHECK(!off.theorems.prop_a);
    CHECK(!off.theorems.prop_b);
    CHECK(!off.theorems.prop_c);
    CHECK(off.theorems.equivalence_consistent);
    CHECK(off.theorems.dw_leq);
    CHECK(off.theorems.cw_leq);
}

TEST_CASE("interval criterion matches the label scan") {
    for (const Graph& g :
         {daisy::fibonacci_cube(4), daisy::lucas_cube(5), daisy::cycle_graph(6),
          daisy::figure1_graph(), daisy::figure2_q3_minus(), daisy::grid_graph(2, 3),
          daisy::random_downset(5, 3, 0.5), daisy::hypercube(4)}) {
        daisy::DistanceMatrix dm = daisy::all_pairs_distances(g);
        int base = g.base().value_or(0);
        CanonicalEmbedding e = daisy::canonical_embedding(g, dm, base);
        CHECK(daisy::is_daisy(e).ok == daisy::is_daisy_interval_criterion(g, dm, e));
    }
}

TEST_CASE("median decision") {
    CHECK(daisy::analyze(daisy::hypercube(4)).flags.is_median);
    CHECK(daisy::analyze(daisy::fibonacci_cube(5)).flags.is_median);
    CHECK(daisy::analyze(daisy::grid_graph(3, 4)).flags.is_median);
    CHECK(daisy::analyze(daisy::figure2_path()).flags.is_median);

    AnalysisReport c6 = daisy::analyze(daisy::cycle_graph(6));
    CHECK(!c6.flags.is_median);
    REQUIRE(c6.flags.median_bad_triple.has_value());
    // Recount the medians of the reported triple by hand.
    Graph g = daisy::cycle_graph(6);
    daisy::DistanceMatrix dm = daisy::all_pairs_distances(g);
    auto [a, b, c] = *c6.flags.median_bad_triple;
    int found = 0;
    for (int m = 0; m < 6; ++m)
        if (dm.at(a, m) + dm.at(m, b) == dm.at(a, b) && dm.at(a, m) + dm.at(m, c) == dm.at(a, c) &&
            dm.at(b, m) + dm.at(m, c) == dm.at(b, c))
            ++found;
    CHECK(found == *c6.flags.median_count);
    CHECK(found != 1);

    CHECK(!daisy::analyze(daisy::figure1_graph()).flags.is_median);
}

TEST_CASE("clique identities against the crossing graph") {
    // Hypercubes: the crossing graph is complete and everything is equal.
    AnalysisReport q = daisy::analyze(daisy::hypercube(4));
    CHECK(q.theorems.Cl == Poly1::from_terms({{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}}));
    CHECK(q.theorems.ccl_equal);
    CHECK(q.theorems.wcl_equal);
    CHECK(q.flags.is_simplex_at_base);

    AnalysisReport f = daisy::analyze(daisy::figure1_graph());
    CHECK(f.theorems.Cl == Poly1::from_terms({{0, 1}, {1, 4}, {2, 5}, {3, 2}}));
    CHECK(f.theorems.ccl_leq);
    CHECK(!f.theorems.ccl_equal);
    CHECK(!f.theorems.wcl_equal);

    // The two "equality iff structure" verdicts hold across the corpus.
    for (const Graph& g :
         {daisy::hypercube(3), daisy::fibonacci_cube(5), daisy::lucas_cube(4),
          daisy::cycle_graph(8), daisy::figure1_graph(), daisy::grid_graph(3, 3),
          daisy::simplex_graph(daisy::cycle_graph(5)), daisy::random_downset(5, 9, 0.45)}) {
        AnalysisReport r = daisy::analyze(g, g.base().value_or(0));
        REQUIRE(r.recognition.ok);
        CHECK(r.theorems.ccl_equal_matches_median);
        CHECK(r.theorems.wcl_equal_matches_simplex);
        CHECK(r.theorems.equivalence_consistent);
        CHECK(r.theorems.dw_leq);
        CHECK(r.theorems.cw_leq);
        CHECK(r.theorems.ccl_leq);
    }
}

TEST_CASE("simplex graphs are simplex at the empty clique") {
    for (const Graph& h : {daisy::cycle_graph(5), daisy::figure2_path(),
                           Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}})}) {
        AnalysisReport r = daisy::analyze(daisy::simplex_graph(h));
        REQUIRE(r.recognition.ok);
        CHECK(r.flags.is_simplex_at_base);
        CHECK(r.theorems.wcl_equal);
        // The crossing graph's clique polynomial is the clique polynomial
        // of h itself.
        CHECK(r.theorems.Cl == daisy::clique_census(h));
    }
}

TEST_CASE("ten vertex example report") {
    AnalysisReport r = daisy::analyze(daisy::figure1_graph());
    CHECK(r.base == 5);
    CHECK(r.base_rule == "file");
    CHECK(r.idim == 4);
    CHECK(r.theorems.C == Poly1::from_terms({{0, 10}, {1, 14}, {2, 5}}));
    CHECK(r.theorems.W == Poly1::from_terms({{0, 1}, {1, 4}, {2, 3}, {3, 2}}));
    // D and C(x+y-1) are incomparable in both directions.
    Poly2 csub = daisy::subst_shift_sum(r.theorems.C);
    CHECK(!daisy::leq(r.theorems.D, csub));
    CHECK(!daisy::leq(csub, r.theorems.D));
    CHECK(!r.theorems.prop_a);
    CHECK(r.theorems.dw_leq);
}

TEST_CASE("degenerate one vertex graph") {
    AnalysisReport r = daisy::analyze(Graph::build(1, {}));
    REQUIRE(r.recognition.ok);
    CHECK(r.idim == 0);
    CHECK(r.flags.is_daisy_at_base);
    CHECK(r.flags.is_median);
    CHECK(r.theorems.crossing_skipped);
    CHECK(r.theorems.prop_a);
    CHECK(r.theorems.W == Poly1::constant(1));
}

TEST_CASE("analyze falls back when carried labels lie") {
    std::vector<BitLabel> bad;
    for (const char* s : {"000", "100", "110", "111", "011"}) bad.push_back(BitLabel::from_string(s));
    AnalysisReport r = daisy::analyze(Graph::from_labels(bad, 0));
    CHECK(r.label_fallback);
    REQUIRE(r.recognition.ok);  // the underlying path is a partial cube
    CHECK(r.idim == 4);

    // Isometric carried labels are trusted and kept.
    AnalysisReport good = daisy::analyze(daisy::fibonacci_cube(4));
    CHECK(!good.label_fallback);
}

TEST_CASE("analyze rejects non partial cubes with witnesses") {
    AnalysisReport odd = daisy::analyze(daisy::cycle_graph(5));
    CHECK(!odd.recognition.ok);
    CHECK(odd.recognition.witness.kind == daisy::PartialCubeWitness::Kind::odd_cycle);

    Graph k23 = Graph::build(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    AnalysisReport nt = daisy::analyze(k23);
    CHECK(!nt.recognition.ok);
    CHECK(nt.recognition.witness.kind == daisy::PartialCubeWitness::Kind::non_transitive);
}
