#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "daisy/classify.hpp"
#include "daisy/families.hpp"
#include "daisy/io.hpp"

using daisy::Error;
using daisy::Graph;
using daisy::Json;

TEST_CASE("graph json round trips") {
    // Labels form.
    Graph g = daisy::fibonacci_cube(3);
    Json j = daisy::graph_to_json(g, "fib3");
    CHECK(j["format"] == "pcg-1");
    CHECK(j["labels"].size() == 5);
    daisy::NamedGraph back = daisy::graph_from_json(j);
    CHECK(back.name == "fib3");
    CHECK(back.graph.labels() == g.labels());
    CHECK(back.graph.edges() == g.edges());
    CHECK(back.graph.base() == g.base());

    // Edge form.
    Graph e = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}}, std::nullopt, 2);
    Json je = daisy::graph_to_json(e, "p4");
    CHECK(je.contains("vertices"));
    CHECK(!je.contains("labels"));
    daisy::NamedGraph eback = daisy::graph_from_json(je);
    CHECK(eback.graph.edges() == e.edges());
    CHECK(eback.graph.base() == 2);
}

TEST_CASE("base can be given as a label string") {
    Json j;
    j["format"] = "pcg-1";
    j["labels"] = {"00", "10", "11"};
    j["base"] = "10";
    daisy::NamedGraph g = daisy::graph_from_json(j);
    CHECK(g.graph.label(*g.graph.base()).to_string() == "10");
}

TEST_CASE("malformed graph json is rejected") {
    CHECK_THROWS_AS(daisy::graph_from_json(Json::parse(R"({"format":"nope"})")), Error);
    CHECK_THROWS_AS(daisy::graph_from_json(Json::parse(R"({"format":"pcg-1"})")), Error);
    CHECK_THROWS_AS(
        daisy::graph_from_json(Json::parse(R"({"format":"pcg-1","labels":["0","01"]})")), Error);
    CHECK_THROWS_AS(
        daisy::graph_from_json(Json::parse(
            R"({"format":"pcg-1","vertices":2,"edges":[[0,1]],"base":5})")),
        Error);
    CHECK_THROWS_AS(
        daisy::graph_from_json(Json::parse(
            R"({"format":"pcg-1","vertices":2,"edges":[[0,0]]})")),
        Error);
    CHECK_THROWS_AS(
        daisy::graph_from_json(Json::parse(R"({"format":"pcg-1","labels":[],"base":"0"})")),
        Error);
}

TEST_CASE("graph files") {
    std::string path = "io_test_graph.json";
    daisy::write_graph_file(path, daisy::figure2_q3_minus(), "hole");
    daisy::NamedGraph g = daisy::read_graph_file(path);
    CHECK(g.name == "hole");
    CHECK(g.graph.n_vertices() == 7);
    CHECK(g.graph.base() == 3);
    std::remove(path.c_str());
    CHECK_THROWS_AS(daisy::read_graph_file("no_such_file.json"), Error);

    std::ofstream bad("io_test_bad.json");
    bad << "{ not json";
    bad.close();
    CHECK_THROWS_AS(daisy::read_graph_file("io_test_bad.json"), Error);
    std::remove("io_test_bad.json");
}

TEST_CASE("report json carries the headline facts") {
    daisy::AnalysisReport rep = daisy::analyze(daisy::figure1_graph());
    Json j = daisy::report_to_json(rep, "fig1");
    CHECK(j["format"] == "pcr-1");
    CHECK(j["name"] == "fig1");
    CHECK(j["flags"]["is_partial_cube"] == true);
    CHECK(j["idim"] == 4);
    CHECK(j["base"] == 5);
    CHECK(j["flags"]["is_daisy_at_base"] == false);
    CHECK(j["polynomials"]["cube_str"] == "5x^2 + 14x + 10");
    CHECK(j["polynomials"]["distance_str"] == "2x^3 + 3x^2 + 4x + 1");
    CHECK(j["theorems"]["bound_bivariate_leq_distance_sum"] == true);
    CHECK(j["theorems"]["identity_cube_eq_shifted_distance"] == false);

    daisy::AnalysisReport no = daisy::analyze(daisy::cycle_graph(5));
    Json jn = daisy::report_to_json(no, "c5");
    CHECK(jn["flags"]["is_partial_cube"] == false);
    CHECK(jn["witnesses"].contains("odd_cycle"));
}

TEST_CASE("closure trace json") {
    daisy::GPlusTrace t = daisy::g_plus(daisy::cycle_graph(6), 0);
    daisy::GPlusVerification v = daisy::verify_gplus(daisy::cycle_graph(6), t);
    Json j = daisy::gplus_trace_to_json(t, v, "c6");
    CHECK(j["stages"].size() == 2);
    CHECK(j["growth_steps"] == 1);
    CHECK(j["result"]["labels"].size() == 8);
    CHECK(j["verification"]["input_is_induced_subgraph"] == true);
    CHECK(j["verification"]["result_is_median"] == true);
    CHECK(j["verification"]["crossing_graphs_equal"] == true);
}

TEST_CASE("canonical dump is stable") {
    Json j;
    j["b"] = 1;
    j["a"] = 2;
    // Insertion order, 2-space indent, trailing newline.
    CHECK(daisy::canonical_dump(j) == "{\n  \"b\": 1,\n  \"a\": 2\n}\n");
    daisy::AnalysisReport rep = daisy::analyze(daisy::lucas_cube(4));
    CHECK(daisy::canonical_dump(daisy::report_to_json(rep, "l4")) ==
          daisy::canonical_dump(daisy::report_to_json(daisy::analyze(daisy::lucas_cube(4)), "l4")));
}
