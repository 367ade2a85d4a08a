#include "daisy/io.hpp"

#include <fstream>
#include <sstream>

namespace daisy {

namespace {

Json poly1_terms(const Poly1& p) {
    Json a = Json::array();
    for (auto [e, c] : p.terms()) a.push_back(Json::array({e, c}));
    return a;
}

Json poly2_terms(const Poly2& p) {
    Json a = Json::array();
    for (auto [k, c] : p.terms()) a.push_back(Json::array({k.first, k.second, c}));
    return a;
}

Json label_list(const std::vector<BitLabel>& labels) {
    Json a = Json::array();
    for (const BitLabel& l : labels) a.push_back(l.to_string());
    return a;
}

}  // namespace

NamedGraph graph_from_json(const Json& j) {
    if (!j.is_object()) fail(ErrorCode::ParseError, "graph file is not a JSON object");
    if (!j.contains("format") || j["format"] != "pcg-1")
        fail(ErrorCode::ParseError, "missing or unsupported format tag (want \"pcg-1\")");

    NamedGraph out;
    out.name = j.value("name", std::string{});

    bool has_labels = j.contains("labels");
    bool has_edges = j.contains("vertices") || j.contains("edges");
    if (has_labels == has_edges)
        fail(ErrorCode::ParseError, "need exactly one of labels form and edge form");

    if (has_labels) {
        if (!j["labels"].is_array() || j["labels"].empty())
            fail(ErrorCode::ParseError, "\"labels\" must be a non-empty array");
        std::vector<BitLabel> labels;
        size_t width = std::string(j["labels"][0].get<std::string>()).size();
        for (const auto& s : j["labels"]) {
            if (!s.is_string()) fail(ErrorCode::ParseError, "labels must be strings");
            std::string str = s.get<std::string>();
            if (str.size() != width)
                fail(ErrorCode::LabelWidthMismatch, "labels of unequal width in file");
            labels.push_back(BitLabel::from_string(str));
        }
        std::optional<int> base;
        if (j.contains("base")) {
            if (j["base"].is_string()) {
                BitLabel bl = BitLabel::from_string(j["base"].get<std::string>());
                for (size_t i = 0; i < labels.size(); ++i)
                    if (labels[i] == bl) base = static_cast<int>(i);
                if (!base)
                    fail(ErrorCode::BaseOutOfRange,
                         "base label " + bl.to_string() + " is not a vertex");
            } else if (j["base"].is_number_integer()) {
                base = j["base"].get<int>();
            } else {
                fail(ErrorCode::ParseError, "base must be an id or a label string");
            }
        }
        out.graph = Graph::from_labels(std::move(labels), base);
        return out;
    }

    if (!j.contains("vertices") || !j["vertices"].is_number_integer())
        fail(ErrorCode::ParseError, "edge form needs an integer \"vertices\"");
    int n = j["vertices"].get<int>();
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) fail(ErrorCode::ParseError, "\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                fail(ErrorCode::ParseError, "each edge must be a pair of vertex ids");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
    }
    std::optional<int> base;
    if (j.contains("base")) {
        if (!j["base"].is_number_integer())
            fail(ErrorCode::ParseError, "base must be an id in edge form");
        base = j["base"].get<int>();
    }
    out.graph = Graph::build(n, std::move(edges), std::nullopt, base);
    return out;
}

Json graph_to_json(const Graph& g, const std::string& name) {
    Json j;
    j["format"] = "pcg-1";
    if (!name.empty()) j["name"] = name;
    if (g.has_labels()) {
        j["labels"] = label_list(g.labels());
    } else {
        j["vertices"] = g.n_vertices();
        Json edges = Json::array();
        for (const Edge& e : g.edges()) edges.push_back(Json::array({e.a, e.b}));
        j["edges"] = edges;
    }
    if (g.base()) j["base"] = *g.base();
    return j;
}

NamedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    return graph_from_json(j);
}

void write_graph_file(const std::string& path, const Graph& g, const std::string& name) {
    write_json_file(path, graph_to_json(g, name));
}

Json report_to_json(const AnalysisReport& rep, const std::string& name) {
    Json j;
    j["format"] = "pcr-1";
    if (!name.empty()) j["name"] = name;
    j["base"] = rep.base;
    j["base_rule"] = rep.base_rule;
    if (rep.label_fallback) j["label_fallback"] = true;

    Json flags;
    flags["is_partial_cube"] = rep.recognition.ok;
    if (rep.recognition.ok) {
        flags["is_daisy_at_base"] = rep.flags.is_daisy_at_base;
        flags["is_median"] = rep.flags.is_median;
        flags["is_simplex_at_base"] = rep.flags.is_simplex_at_base;
    }
    j["flags"] = flags;

    Json witnesses = Json::object();
    if (!rep.recognition.ok) {
        using K = PartialCubeWitness::Kind;
        const auto& w = rep.recognition.witness;
        switch (w.kind) {
            case K::odd_cycle:
                witnesses["odd_cycle"] = w.odd_cycle;
                break;
            case K::non_transitive:
                witnesses["edge_triple"] = w.edge_triple;
                break;
            case K::isometry:
                witnesses["vertex_pair"] = Json::array({w.vertex_pair.first, w.vertex_pair.second});
                break;
            case K::none:
                break;
        }
        j["witnesses"] = witnesses;
        return j;
    }
    const CanonicalEmbedding& emb = rep.recognition.embedding;
    if (!rep.flags.is_daisy_at_base && rep.flags.daisy_missing_label)
        witnesses["daisy_missing_label"] = rep.flags.daisy_missing_label->to_string();
    if (!rep.flags.is_median && rep.flags.median_bad_triple) {
        Json t = Json::array();
        for (int v : *rep.flags.median_bad_triple) t.push_back(emb.labels[v].to_string());
        witnesses["median_triple"] = t;
        witnesses["median_count"] = *rep.flags.median_count;
    }
    j["witnesses"] = witnesses;

    j["idim"] = rep.idim;
    j["base_label_weight_counts"] = [&] {
        Json a = Json::array();
        for (auto [d, c] : rep.census.vertices_by_distance) a.push_back(Json::array({d, c}));
        return a;
    }();

    Json maximal = Json::array();
    for (int v : rep.flags.maximal)
        maximal.push_back(Json::array({v, emb.labels[v].to_string()}));
    j["maximal_vertices"] = maximal;

    Json polys;
    polys["cube"] = poly1_terms(rep.theorems.C);
    polys["distance"] = poly1_terms(rep.theorems.W);
    polys["distance_cube"] = poly2_terms(rep.theorems.D);
    if (!rep.theorems.crossing_skipped)
        polys["crossing_clique"] = poly1_terms(rep.theorems.Cl);
    polys["cube_str"] = rep.theorems.C.to_string();
    polys["distance_str"] = rep.theorems.W.to_string();
    polys["distance_cube_str"] = rep.theorems.D.to_string();
    if (!rep.theorems.crossing_skipped)
        polys["crossing_clique_str"] = rep.theorems.Cl.to_string();
    j["polynomials"] = polys;

    Json th;
    th["identity_cube_eq_shifted_distance"] = rep.theorems.prop_a;
    th["identity_bivariate_eq_distance_sum"] = rep.theorems.prop_b;
    th["identity_bivariate_eq_cube_shift"] = rep.theorems.prop_c;
    th["identities_match_daisy_decision"] = rep.theorems.equivalence_consistent;
    th["bound_bivariate_leq_distance_sum"] = rep.theorems.dw_leq;
    th["bound_cube_leq_shifted_distance"] = rep.theorems.cw_leq;
    th["crossing_skipped"] = rep.theorems.crossing_skipped;
    if (!rep.theorems.crossing_skipped) {
        th["bound_cube_leq_shifted_clique"] = rep.theorems.ccl_leq;
        th["clique_equality"] = rep.theorems.ccl_equal;
        th["clique_equality_matches_median"] = rep.theorems.ccl_equal_matches_median;
        th["distance_eq_clique"] = rep.theorems.wcl_equal;
        th["distance_eq_clique_matches_simplex"] = rep.theorems.wcl_equal_matches_simplex;
    }
    j["theorems"] = th;
    return j;
}

Json gplus_trace_to_json(const GPlusTrace& trace, const GPlusVerification& ver,
                         const std::string& name) {
    Json j;
    j["format"] = "pcr-1";
    if (!name.empty()) j["name"] = name;
    j["kind"] = "closure-trace";
    j["base"] = trace.base;
    Json stages = Json::array();
    for (const GPlusStage& st : trace.stages) {
        Json s;
        s["labels"] = label_list(st.labels);
        Json cyc = Json::array();
        for (const auto& c : st.cycles_used) cyc.push_back(label_list(c));
        s["maximal_cycles"] = cyc;
        stages.push_back(s);
    }
    j["stages"] = stages;
    j["growth_steps"] = static_cast<int>(trace.stages.size()) - 1;
    j["result"] = graph_to_json(trace.result, name.empty() ? std::string{} : name + "-closure");
    Json v;
    v["input_is_induced_subgraph"] = ver.induced_ok;
    v["result_is_median"] = ver.median_ok;
    v["crossing_graphs_equal"] = ver.crossing_ok;
    j["verification"] = v;
    return j;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
    out << canonical_dump(j);
    if (!out) fail(ErrorCode::IoError, "failed writing " + path);
}

}  // namespace daisy
