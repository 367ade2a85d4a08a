// Command-line front end: generate example graphs, analyze and check
// them, run corpus sweeps, compute closures and crossing graphs.
//
// Exit codes: 0 success (and all checked properties hold), 1 a checked
// property failed, 2 usage, parse or input errors.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "daisy/classify.hpp"
#include "daisy/families.hpp"
#include "daisy/gplus.hpp"
#include "daisy/io.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace {

using daisy::Json;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) daisy::fail(daisy::ErrorCode::IoError, "cannot open " + out_path);
        f << text;
        if (!f) daisy::fail(daisy::ErrorCode::IoError, "failed writing " + out_path);
    }
}

std::vector<daisy::BitLabel> parse_label_list(const std::string& csv, int width) {
    std::vector<daisy::BitLabel> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        daisy::BitLabel l = daisy::BitLabel::from_string(item);
        if (l.width() != width)
            daisy::fail(daisy::ErrorCode::WidthMismatch,
                        "generator " + item + " does not have width " + std::to_string(width));
        out.push_back(l);
    }
    return out;
}

std::optional<int> resolve_base(const daisy::Graph& g, const std::string& base_arg) {
    if (base_arg.empty()) return std::nullopt;
    if (base_arg.find_first_not_of("0123456789") == std::string::npos && g.has_labels() &&
        base_arg.size() == static_cast<size_t>(g.label_width())) {
        // Ambiguous all-digit string of exactly label width: treat as label.
        daisy::BitLabel bl = daisy::BitLabel::from_string(base_arg);
        for (int i = 0; i < g.n_vertices(); ++i)
            if (g.label(i) == bl) return i;
        daisy::fail(daisy::ErrorCode::BaseOutOfRange, "no vertex has label " + base_arg);
    }
    if (base_arg.find_first_not_of("0123456789") == std::string::npos)
        return std::stoi(base_arg);
    if (!g.has_labels())
        daisy::fail(daisy::ErrorCode::InvalidSpec, "label base given for an unlabelled graph");
    daisy::BitLabel bl = daisy::BitLabel::from_string(base_arg);
    for (int i = 0; i < g.n_vertices(); ++i)
        if (g.label(i) == bl) return i;
    daisy::fail(daisy::ErrorCode::BaseOutOfRange, "no vertex has label " + base_arg);
}

struct GenArgs {
    std::string family;
    int n = -1;
    std::string x;  // generator labels for daisy
    int rows = 2, cols = 2;
    int len = 4;
    uint64_t seed = 1;
    double density = 0.5;
    int deletions = 0;
    std::string name;
    std::string out;
};

daisy::Graph generate(const GenArgs& a) {
    using daisy::fail;
    using daisy::ErrorCode;
    auto need_n = [&] {
        if (a.n < 0) fail(ErrorCode::InvalidSpec, "family needs --n");
        return a.n;
    };
    if (a.family == "hypercube") return daisy::hypercube(need_n());
    if (a.family == "daisy") {
        int n = need_n();
        if (a.x.empty()) fail(ErrorCode::EmptyX, "daisy needs --x with generator labels");
        return daisy::daisy_cube(n, parse_label_list(a.x, n));
    }
    if (a.family == "fibonacci") return daisy::fibonacci_cube(need_n());
    if (a.family == "lucas") return daisy::lucas_cube(need_n());
    if (a.family == "figure1") return daisy::figure1_graph();
    if (a.family == "figure2-path") return daisy::figure2_path();
    if (a.family == "figure2-q3minus") return daisy::figure2_q3_minus();
    if (a.family == "grid") return daisy::grid_graph(a.rows, a.cols);
    if (a.family == "cycle") return daisy::cycle_graph(a.len);
    if (a.family == "random-downset") return daisy::random_downset(need_n(), a.seed, a.density);
    if (a.family == "random-deletion")
        return daisy::random_partial_cube_by_deletion(need_n(), a.seed, a.deletions);
    fail(ErrorCode::InvalidSpec, "unknown family \"" + a.family + "\"");
}

std::string default_name(const GenArgs& a) {
    if (!a.name.empty()) return a.name;
    std::string s = a.family;
    if (a.n >= 0) s += "-n" + std::to_string(a.n);
    if (a.family == "grid") s += "-" + std::to_string(a.rows) + "x" + std::to_string(a.cols);
    if (a.family == "cycle") s += "-" + std::to_string(a.len);
    if (a.family == "random-downset" || a.family == "random-deletion")
        s += "-s" + std::to_string(a.seed);
    return s;
}

// ---- check: evaluate the universal verdicts, exit 1 when one fails ----

struct CheckOutcome {
    bool all_ok = true;
    std::string table;
};

CheckOutcome run_check(const daisy::AnalysisReport& rep) {
    CheckOutcome oc;
    std::ostringstream os;
    auto row = [&](const char* name, bool ok, bool universal) {
        if (universal) {
            os << "  " << (ok ? "ok  " : "FAIL") << "  " << name << "\n";
            if (!ok) oc.all_ok = false;
        } else {
            os << "  " << (ok ? "yes " : "no  ") << "  " << name << "\n";
        }
    };
    const daisy::TheoremReport& t = rep.theorems;
    os << "universal properties\n";
    row("D <= W(x+y)", t.dw_leq, true);
    row("C <= W(x+1)", t.cw_leq, true);
    if (!t.crossing_skipped) row("C <= Cl(x+1)", t.ccl_leq, true);
    row("daisy identities agree with the direct decision", t.equivalence_consistent, true);
    if (!t.crossing_skipped) {
        row("C == Cl(x+1) exactly for median graphs", t.ccl_equal_matches_median, true);
        row("W == Cl exactly for simplex graphs at the base", t.wcl_equal_matches_simplex, true);
    } else {
        os << "  (crossing-graph checks skipped: dimension 0)\n";
    }
    os << "base-dependent identities (informational)\n";
    row("C == W(x+1)", t.prop_a, false);
    row("D == W(x+y)", t.prop_b, false);
    row("D == C(x+y-1)", t.prop_c, false);
    oc.table = os.str();
    return oc;
}

// ---- sweep ----

struct SweepResult {
    std::string key;
    bool ok = true;
    std::string detail;
};

SweepResult sweep_one(const std::string& key, const daisy::Graph& g) {
    SweepResult r;
    r.key = key;
    daisy::AnalysisReport rep = daisy::analyze(g);
    if (!rep.recognition.ok) {
        r.ok = false;
        r.detail = "not a partial cube";
        return r;
    }
    const daisy::TheoremReport& t = rep.theorems;
    auto check = [&](bool v, const char* what) {
        if (!v && r.ok) {
            r.ok = false;
            r.detail = what;
        }
    };
    check(t.dw_leq, "D <= W(x+y) failed");
    check(t.cw_leq, "C <= W(x+1) failed");
    check(t.equivalence_consistent, "daisy identities disagree with the direct decision");
    if (!t.crossing_skipped) {
        check(t.ccl_leq, "C <= Cl(x+1) failed");
        check(t.ccl_equal_matches_median, "clique equality does not match median");
        check(t.wcl_equal_matches_simplex, "distance/clique equality does not match simplex");
    }

    // Daisy decision again through the interval route.
    const auto& emb = rep.recognition.embedding;
    daisy::DistanceMatrix dm = daisy::all_pairs_distances(g);
    bool via_intervals = daisy::is_daisy_interval_criterion(g, dm, emb);
    check(via_intervals == rep.flags.is_daisy_at_base,
          "interval criterion disagrees with daisy decision");

    // Census against the pattern-scan oracle on small embeddings.
    if (emb.dim <= 10) {
        auto oracle = daisy::oracle_subcube_scan(emb.labels, emb.dim);
        daisy::Poly1 from_oracle;
        for (auto [k, c] : oracle) from_oracle.add_term(k, c);
        check(from_oracle == t.C, "cube census disagrees with the pattern scan");
    }
    return r;
}

int run_sweep(int downsets_n, int deletions_n, int deletion_seeds, int deletion_count,
              const std::string& out_path) {
    std::vector<std::pair<std::string, daisy::Graph>> corpus;
    if (downsets_n >= 0) {
        if (downsets_n > 5)
            daisy::fail(daisy::ErrorCode::LimitExceeded, "exhaustive downsets capped at n = 5");
        int64_t i = 0;
        daisy::enumerate_all_downsets(downsets_n, [&](const std::vector<daisy::BitLabel>& ls) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "downset-n%d-%05lld", downsets_n,
                          static_cast<long long>(i++));
            std::vector<daisy::BitLabel> sorted = ls;
            daisy::sort_labels_lex(sorted);
            corpus.emplace_back(buf, daisy::Graph::from_labels(sorted, 0));
        });
    }
    if (deletions_n >= 0) {
        if (deletions_n > 5)
            daisy::fail(daisy::ErrorCode::LimitExceeded, "deletion sweep capped at n = 5");
        if (deletion_seeds > 500)
            daisy::fail(daisy::ErrorCode::LimitExceeded, "deletion sweep capped at 500 seeds");
        for (int s = 1; s <= deletion_seeds; ++s) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "del-n%d-seed%d", deletions_n, s);
            corpus.emplace_back(
                buf, daisy::random_partial_cube_by_deletion(deletions_n, s, deletion_count));
        }
    }
    if (corpus.empty())
        daisy::fail(daisy::ErrorCode::InvalidSpec, "sweep needs --downsets or --deletions");

    std::vector<SweepResult> results(corpus.size());
    long long jobs = static_cast<long long>(corpus.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < jobs; ++i)
        results[i] = sweep_one(corpus[i].first, corpus[i].second);

    int failures = 0;
    Json fails = Json::array();
    for (const SweepResult& r : results)
        if (!r.ok) {
            ++failures;
            fails.push_back(Json{{"graph", r.key}, {"reason", r.detail}});
        }
    Json j;
    j["format"] = "pcs-1";
    j["graphs_checked"] = corpus.size();
    j["failures"] = failures;
    j["failing"] = fails;
    emit(out_path, daisy::canonical_dump(j));
    return failures == 0 ? exit_ok : exit_violation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial-cube analysis toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a graph file");
    cmd_gen->add_option("--family", gen.family,
                        "hypercube | daisy | fibonacci | lucas | figure1 | figure2-path | "
                        "figure2-q3minus | grid | cycle | random-downset | random-deletion")
        ->required();
    cmd_gen->add_option("--n", gen.n, "coordinate count");
    cmd_gen->add_option("--x", gen.x, "comma-separated generator labels (daisy)");
    cmd_gen->add_option("--rows", gen.rows, "grid rows");
    cmd_gen->add_option("--cols", gen.cols, "grid columns");
    cmd_gen->add_option("--len", gen.len, "cycle length");
    cmd_gen->add_option("--seed", gen.seed, "random seed");
    cmd_gen->add_option("--density", gen.density, "downset target density");
    cmd_gen->add_option("--deletions", gen.deletions, "deletion attempts");
    cmd_gen->add_option("--name", gen.name, "name stored in the file");
    cmd_gen->add_option("-o,--out", gen.out, "output path (default stdout)");

    std::string in_path, base_arg, out_path;
    bool timing = false;
    CLI::App* cmd_analyze = app.add_subcommand("analyze", "full analysis report");
    cmd_analyze->add_option("input", in_path, "graph file")->required();
    cmd_analyze->add_option("--base", base_arg, "base vertex id or label");
    cmd_analyze->add_option("-o,--out", out_path, "output path (default stdout)");
    cmd_analyze->add_flag("--timing", timing, "include wall-clock timing (breaks byte determinism)");
    int analyze_max_vertices = 1024;
    cmd_analyze->add_option("--max-vertices", analyze_max_vertices,
                            "refuse larger inputs (analysis is cubic)");

    CLI::App* cmd_check = app.add_subcommand("check", "evaluate the universal properties");
    cmd_check->add_option("input", in_path, "graph file")->required();
    cmd_check->add_option("--base", base_arg, "base vertex id or label");

    int sweep_downsets = -1, sweep_deletions = -1, sweep_seeds = 100, sweep_del_count = -1;
    int sweep_threads = 0;
    std::string sweep_out;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "bulk property check over corpora");
    cmd_sweep->add_option("--downsets", sweep_downsets, "all downsets of {0,1}^n (n <= 5)");
    cmd_sweep->add_option("--deletions", sweep_deletions, "random deletion graphs in Q_n (n <= 5)");
    cmd_sweep->add_option("--seeds", sweep_seeds, "seed count for --deletions (<= 500)");
    cmd_sweep->add_option("--deletion-count", sweep_del_count,
                          "deletion attempts per graph (default 2^n / 3)");
    cmd_sweep->add_option("--threads", sweep_threads, "worker threads (default OMP_NUM_THREADS)");
    cmd_sweep->add_option("-o,--out", sweep_out, "summary path (default stdout)");

    daisy::GPlusOptions gopt;
    CLI::App* cmd_gplus = app.add_subcommand("gplus", "median closure with verification");
    cmd_gplus->add_option("input", in_path, "graph file")->required();
    cmd_gplus->add_option("--base", base_arg, "base vertex id or label");
    cmd_gplus->add_option("-o,--out", out_path, "output path (default stdout)");
    cmd_gplus->add_option("--max-vertices", gopt.max_vertices, "input vertex cap");
    cmd_gplus->add_option("--max-cycle-len", gopt.max_cycle_len, "cycle length cap (0 = |V|)");
    cmd_gplus->add_option("--max-result-vertices", gopt.max_result_vertices, "growth cap");

    CLI::App* cmd_crossing = app.add_subcommand("crossing", "crossing graph and clique polynomial");
    cmd_crossing->add_option("input", in_path, "graph file")->required();
    cmd_crossing->add_option("--base", base_arg, "base vertex id or label");
    cmd_crossing->add_option("-o,--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*cmd_gen) {
            daisy::Graph g = generate(gen);
            emit(gen.out, daisy::canonical_dump(daisy::graph_to_json(g, default_name(gen))));
            return exit_ok;
        }

        if (*cmd_analyze) {
            daisy::NamedGraph ng = daisy::read_graph_file(in_path);
            if (ng.graph.n_vertices() > analyze_max_vertices)
                daisy::fail(daisy::ErrorCode::LimitExceeded,
                            "input has " + std::to_string(ng.graph.n_vertices()) +
                                " vertices; raise --max-vertices to proceed");
            auto t0 = std::chrono::steady_clock::now();
            daisy::AnalysisReport rep = daisy::analyze(ng.graph, resolve_base(ng.graph, base_arg));
            auto t1 = std::chrono::steady_clock::now();
            Json j = daisy::report_to_json(rep, ng.name);
            if (timing) j["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
            emit(out_path, daisy::canonical_dump(j));
            return exit_ok;
        }

        if (*cmd_check) {
            daisy::NamedGraph ng = daisy::read_graph_file(in_path);
            daisy::AnalysisReport rep = daisy::analyze(ng.graph, resolve_base(ng.graph, base_arg));
            if (!rep.recognition.ok) {
                std::cerr << "input is not a partial cube: "
                          << rep.recognition.witness.describe(ng.graph) << "\n";
                return exit_usage;
            }
            CheckOutcome oc = run_check(rep);
            std::cout << oc.table;
            std::cout << (oc.all_ok ? "all universal properties hold\n"
                                    : "PROPERTY VIOLATION (see above)\n");
            return oc.all_ok ? exit_ok : exit_violation;
        }

        if (*cmd_sweep) {
#if defined(_OPENMP)
            if (sweep_threads > 0) omp_set_num_threads(sweep_threads);
#endif
            if (sweep_deletions >= 0 && sweep_del_count < 0)
                sweep_del_count = (1 << sweep_deletions) / 3;
            return run_sweep(sweep_downsets, sweep_deletions, sweep_seeds, sweep_del_count,
                             sweep_out);
        }

        if (*cmd_gplus) {
            daisy::NamedGraph ng = daisy::read_graph_file(in_path);
            std::optional<int> b = resolve_base(ng.graph, base_arg);
            int base = b ? *b : ng.graph.base().value_or(0);
            daisy::GPlusTrace trace = daisy::g_plus(ng.graph, base, gopt);
            daisy::GPlusVerification ver = daisy::verify_gplus(ng.graph, trace);
            emit(out_path, daisy::canonical_dump(daisy::gplus_trace_to_json(trace, ver, ng.name)));
            bool ok = ver.induced_ok && ver.median_ok && ver.crossing_ok;
            if (!ok) std::cerr << "closure verification failed\n";
            return ok ? exit_ok : exit_violation;
        }

        if (*cmd_crossing) {
            daisy::NamedGraph ng = daisy::read_graph_file(in_path);
            std::optional<int> b = resolve_base(ng.graph, base_arg);
            int base = b ? *b : ng.graph.base().value_or(0);
            daisy::CanonicalEmbedding emb = daisy::canonical_embedding(ng.graph, base);
            daisy::Graph cg = daisy::crossing_graph(emb);
            daisy::Poly1 cl = daisy::clique_census(cg);

            // Runtime restatement of the clique bound on this input.
            daisy::CubeCensus census = daisy::cube_census(emb);
            daisy::Poly1 c = daisy::cube_polynomial(census);
            bool bound = daisy::leq(c, daisy::shift1(cl));

            Json j;
            j["format"] = "pcr-1";
            if (!ng.name.empty()) j["name"] = ng.name;
            j["kind"] = "crossing";
            j["crossing_graph"] = daisy::graph_to_json(cg, "");
            j["clique_polynomial"] = cl.to_string();
            j["bound_cube_leq_shifted_clique"] = bound;
            emit(out_path, daisy::canonical_dump(j));
            return bound ? exit_ok : exit_violation;
        }
    } catch (const daisy::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
