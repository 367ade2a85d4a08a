#include "daisy/gplus.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "daisy/classify.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace daisy {

namespace {

// Grow a path v_0 .. v_j that could close into an isometric cycle of
// length len: every new vertex must sit at exactly the cyclic distance
// from each earlier one. The pair (0, j) check at j = len-1 forces the
// closing edge, so a full path is already a cycle.
void cycle_dfs(const Graph& g, const DistanceMatrix& dm, int len, std::vector<int>& path,
               std::vector<IsoCycle>& out) {
    int j = static_cast<int>(path.size());
    if (j == len) {
        if (path[1] < path[len - 1]) out.push_back({path});
        return;
    }
    for (int v : g.neighbors(path[j - 1])) {
        if (v <= path[0]) continue;  // canonical start is the cycle minimum
        bool dup = false;
        for (int i = 1; i < j; ++i)
            if (path[i] == v) {
                dup = true;
                break;
            }
        if (dup) continue;
        bool ok = true;
        for (int i = 0; i < j; ++i) {
            int cyc = std::min(j - i, len - (j - i));
            if (dm.at(path[i], v) != cyc) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        path.push_back(v);
        cycle_dfs(g, dm, len, path, out);
        path.pop_back();
    }
}

std::vector<IsoCycle> cycles_from_start(const Graph& g, const DistanceMatrix& dm, int len,
                                        int start) {
    std::vector<IsoCycle> out;
    std::vector<int> path{start};
    cycle_dfs(g, dm, len, path, out);
    return out;
}

void sort_cycles(std::vector<IsoCycle>& cycles) {
    std::sort(cycles.begin(), cycles.end(), [](const IsoCycle& a, const IsoCycle& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
}

int cycle_cap(const Graph& g, int max_len) {
    int cap = max_len > 0 ? std::min(max_len, g.n_vertices()) : g.n_vertices();
    return cap - cap % 2;  // only even lengths can be isometric in bipartite graphs
}

}  // namespace

std::vector<IsoCycle> isometric_cycles_serial(const Graph& g, const DistanceMatrix& dm,
                                              int max_len) {
    std::vector<IsoCycle> out;
    int cap = cycle_cap(g, max_len);
    for (int len = 4; len <= cap; len += 2)
        for (int s = 0; s < g.n_vertices(); ++s) {
            auto found = cycles_from_start(g, dm, len, s);
            out.insert(out.end(), found.begin(), found.end());
        }
    sort_cycles(out);
    return out;
}

std::vector<IsoCycle> isometric_cycles(const Graph& g, const DistanceMatrix& dm, int max_len) {
    int cap = cycle_cap(g, max_len);
    int n = g.n_vertices();
    std::vector<int> lens;
    for (int len = 4; len <= cap; len += 2) lens.push_back(len);
    int jobs = static_cast<int>(lens.size()) * n;
    std::vector<IsoCycle> out;
#pragma omp parallel
    {
        std::vector<IsoCycle> local;
#pragma omp for schedule(dynamic, 1) nowait
        for (int job = 0; job < jobs; ++job) {
            auto found = cycles_from_start(g, dm, lens[job / n], job % n);
            local.insert(local.end(), found.begin(), found.end());
        }
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
    sort_cycles(out);
    return out;
}

std::vector<IsoCycle> hull_order_maximal(const Graph& g, const DistanceMatrix& dm,
                                         const std::vector<IsoCycle>& cycles) {
    int n = g.n_vertices();
    std::vector<VertexSet> hulls;
    hulls.reserve(cycles.size());
    for (const IsoCycle& c : cycles) {
        VertexSet s(n);
        for (int v : c.vertices) s.set(v);
        hulls.push_back(convex_hull(g, dm, s));
    }
    std::vector<IsoCycle> out;
    for (size_t i = 0; i < cycles.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < cycles.size() && maximal; ++j)
            if (j != i && hulls[i].subset_of(hulls[j]) && hulls[i] != hulls[j]) maximal = false;
        // Among equal hulls keep every cycle; the union later deduplicates.
        if (maximal) out.push_back(cycles[i]);
    }
    return out;
}

std::vector<BitLabel> AmbientSubcube::members() const {
    std::vector<BitLabel> out;
    uint64_t sub = 0;
    while (true) {
        out.emplace_back(width, fixed_bits | sub);
        if (sub == free_mask) break;
        sub = (sub - free_mask) & free_mask;
    }
    return out;
}

AmbientSubcube ambient_hull(const std::vector<BitLabel>& labels) {
    if (labels.empty()) fail(ErrorCode::EmptySet, "ambient hull of no labels");
    uint64_t andb = ~uint64_t{0}, orb = 0;
    int width = labels[0].width();
    for (const BitLabel& l : labels) {
        if (l.width() != width) fail(ErrorCode::WidthMismatch, "ambient hull over mixed widths");
        andb &= l.bits();
        orb |= l.bits();
    }
    AmbientSubcube s;
    s.width = width;
    s.free_mask = andb ^ orb;
    s.fixed_bits = andb;  // == orb & ~free_mask
    return s;
}

GPlusTrace g_plus(const Graph& g, int base, const GPlusOptions& opt) {
    if (g.n_vertices() > opt.max_vertices)
        fail(ErrorCode::LimitExceeded,
             "input has " + std::to_string(g.n_vertices()) + " vertices, cap is " +
                 std::to_string(opt.max_vertices) + " (raise with the limit option)");

    DistanceMatrix dm0 = all_pairs_distances(g);
    CanonicalEmbedding emb0;
    {
        PartialCubeResult pr = recognize_partial_cube(g, dm0, base);
        if (!pr.ok) fail(ErrorCode::NotPartialCube, pr.witness.describe(g));
        emb0 = std::move(pr.embedding);
    }
    int n_coords = emb0.dim;

    GPlusTrace trace;
    trace.base = base;

    std::vector<BitLabel> current = emb0.labels;
    sort_labels_lex(current);

    int64_t max_stages = n_coords >= 62 ? INT64_MAX : (int64_t{1} << n_coords);
    for (int64_t stage = 0;; ++stage) {
        if (stage > max_stages)
            fail(ErrorCode::StageLimitExceeded, "fixpoint not reached within 2^n stages");

        Graph cur = Graph::from_labels(current, 0);
        if (!is_connected(cur))
            fail(ErrorCode::IntermediateNotPartialCube, "stage graph is disconnected");
        DistanceMatrix dm = all_pairs_distances(cur);
        {
            PartialCubeResult pr = recognize_partial_cube(cur, dm, 0);
            if (!pr.ok)
                fail(ErrorCode::IntermediateNotPartialCube,
                     "stage " + std::to_string(stage) + ": " + pr.witness.describe(cur));
        }

        int cap = opt.max_cycle_len > 0 ? opt.max_cycle_len : cur.n_vertices();
        std::vector<IsoCycle> cycles = isometric_cycles(cur, dm, cap);
        std::vector<IsoCycle> maximal = hull_order_maximal(cur, dm, cycles);

        GPlusStage st;
        st.labels = current;
        for (const IsoCycle& c : maximal) {
            std::vector<BitLabel> ls;
            for (int v : c.vertices) ls.push_back(cur.label(v));
            st.cycles_used.push_back(std::move(ls));
        }

        // Union of the ambient subcube hulls of the maximal cycles.
        std::vector<BitLabel> next = current;
        {
            LabelIndex idx(current, n_coords);
            std::unordered_map<uint64_t, bool> seen;
            for (const auto& cyc : st.cycles_used) {
                AmbientSubcube hull = ambient_hull(cyc);
                for (const BitLabel& l : hull.members())
                    if (!idx.contains(l.bits()) && !seen[l.bits()]) {
                        seen[l.bits()] = true;
                        next.push_back(l);
                    }
            }
        }
        trace.stages.push_back(std::move(st));
        if (next.size() == current.size()) break;
        if (static_cast<int>(next.size()) > opt.max_result_vertices)
            fail(ErrorCode::LimitExceeded, "stage grew past " +
                                               std::to_string(opt.max_result_vertices) +
                                               " vertices");
        sort_labels_lex(next);
        current = std::move(next);
    }

    // Rebuild the result with the input's vertex ids first (carrying their
    // anchored labels) and the new labels appended in lex order.
    std::vector<BitLabel> final_labels = emb0.labels;
    {
        LabelIndex idx(emb0.labels, n_coords);
        for (const BitLabel& l : current)
            if (!idx.contains(l.bits())) final_labels.push_back(l);
    }
    trace.result = Graph::from_labels(std::move(final_labels), base);
    return trace;
}

GPlusVerification verify_gplus(const Graph& g, const GPlusTrace& trace) {
    GPlusVerification v;
    const Graph& r = trace.result;
    int n = g.n_vertices();

    // Re-derive the anchored labels of the input the same way g_plus did.
    CanonicalEmbedding ge = canonical_embedding(g, trace.base);

    // (1) Input ids 0..n-1 keep their anchored labels and the result
    // induces exactly the input's adjacency on them.
    v.induced_ok = r.n_vertices() >= n && r.has_labels();
    for (int i = 0; v.induced_ok && i < n; ++i)
        if (r.label(i) != ge.labels[i]) v.induced_ok = false;
    if (v.induced_ok)
        for (const Edge& e : g.edges())
            if (!r.adjacent(e.a, e.b)) {
                v.induced_ok = false;
                break;
            }
    if (v.induced_ok)
        for (const Edge& e : r.edges())
            if (e.b < n && !g.adjacent(e.a, e.b)) {
                v.induced_ok = false;
                break;
            }

    // (2) The result is a median graph.
    DistanceMatrix rdm = all_pairs_distances(r);
    v.median_ok = is_median(r, rdm).ok;

    // (3) Same crossing graph, coordinate for coordinate. The result keeps
    // the input's coordinate system, so the two edge sets must be equal.
    // If the result's labels fail to be an isometry the check fails
    // rather than throwing.
    try {
        CanonicalEmbedding re = relabel_from_labels(r, rdm);
        if (ge.dim == 0) {
            // A single vertex has no crossing graph to compare.
            v.crossing_ok = re.dim == 0;
        } else {
            v.crossing_ok =
                ge.dim == re.dim && crossing_graph(ge).edges() == crossing_graph(re).edges();
        }
    } catch (const Error&) {
        v.crossing_ok = false;
    }
    return v;
}

}  // namespace daisy
