#include "daisy/census.hpp"

#include <algorithm>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace daisy {

LabelIndex::LabelIndex(const std::vector<BitLabel>& labels, int width) : width_(width) {
    for (const BitLabel& l : labels)
        if (l.width() != width)
            fail(ErrorCode::LabelWidthMismatch, "index built over labels of mixed width");
    use_bitmap_ = width <= 24;
    if (use_bitmap_) {
        bitmap_.assign((size_t{1} << width) / 8 + 1, 0);
        for (const BitLabel& l : labels) bitmap_[l.bits() >> 3] |= uint8_t(1u << (l.bits() & 7));
    } else {
        set_.reserve(labels.size() * 2);
        for (const BitLabel& l : labels) set_.insert(l.bits());
    }
}

namespace {

void merge_census(CubeCensus& into, const CubeCensus& from) {
    for (auto [kd, c] : from.cubes) {
        auto& slot = into.cubes[kd];
        slot = checked_add(slot, c);
    }
    for (auto [d, c] : from.vertices_by_distance) {
        auto& slot = into.vertices_by_distance[d];
        slot = checked_add(slot, c);
    }
}

CubeCensus census_for_vertex_range(const CanonicalEmbedding& emb, const LabelIndex& idx, int lo,
                                   int hi) {
    CubeCensus cc;
    std::vector<uint64_t> members;
    for (int v = lo; v < hi; ++v) {
        int d = emb.labels[v].weight();
        cc.vertices_by_distance[d] += 1;
        visit_subcubes_from(
            emb, idx, v, [&](uint64_t, uint64_t, int k) { cc.cubes[{k, d}] += 1; }, members);
    }
    return cc;
}

}  // namespace

CubeCensus cube_census_serial(const CanonicalEmbedding& emb) {
    LabelIndex idx(emb.labels, emb.dim);
    return census_for_vertex_range(emb, idx, 0, static_cast<int>(emb.labels.size()));
}

CubeCensus cube_census(const CanonicalEmbedding& emb) {
    LabelIndex idx(emb.labels, emb.dim);
    int n = static_cast<int>(emb.labels.size());
    CubeCensus total;
#pragma omp parallel
    {
        CubeCensus local;
        std::vector<uint64_t> members;
#pragma omp for schedule(dynamic, 16) nowait
        for (int v = 0; v < n; ++v) {
            int d = emb.labels[v].weight();
            local.vertices_by_distance[d] += 1;
            visit_subcubes_from(
                emb, idx, v, [&](uint64_t, uint64_t, int k) { local.cubes[{k, d}] += 1; },
                members);
        }
#pragma omp critical
        merge_census(total, local);
    }
    return total;
}

std::vector<Subcube> enumerate_subcubes(const CanonicalEmbedding& emb) {
    LabelIndex idx(emb.labels, emb.dim);
    std::vector<Subcube> out;
    std::vector<uint64_t> members;
    for (size_t v = 0; v < emb.labels.size(); ++v)
        visit_subcubes_from(
            emb, idx, static_cast<int>(v),
            [&](uint64_t base, uint64_t free, int) {
                out.push_back({BitLabel(emb.dim, base), free});
            },
            members);
    std::sort(out.begin(), out.end(), [](const Subcube& a, const Subcube& b) {
        if (a.base_label != b.base_label) return BitLabel::lex_less(a.base_label, b.base_label);
        return a.free_mask < b.free_mask;
    });
    return out;
}

Poly1 cube_polynomial(const CubeCensus& c) {
    Poly1 p;
    for (auto [kd, count] : c.cubes) p.add_term(kd.first, count);
    return p;
}

Poly1 distance_polynomial(const CubeCensus& c) {
    Poly1 p;
    for (auto [d, count] : c.vertices_by_distance) p.add_term(d, count);
    return p;
}

Poly2 distance_cube_polynomial(const CubeCensus& c) {
    Poly2 p;
    for (auto [kd, count] : c.cubes) p.add_term(kd.first, kd.second, count);
    return p;
}

std::map<int, int64_t> oracle_subcube_scan(const std::vector<BitLabel>& labels, int n) {
    if (n > 16) fail(ErrorCode::DimensionTooLarge, "pattern scan is limited to 16 coordinates");
    LabelIndex idx(labels, n);
    std::map<int, int64_t> count;
    uint64_t full = BitLabel::mask(n);
    for (uint64_t stars = 0; stars <= full; ++stars) {
        int k = std::popcount(stars);
        uint64_t rest = full & ~stars;
        // Walk all bases over the non-star coordinates, then all
        // completions over the stars.
        uint64_t base = 0;
        while (true) {
            bool all = true;
            uint64_t sub = stars;
            while (true) {
                if (!idx.contains(base | sub)) {
                    all = false;
                    break;
                }
                if (sub == 0) break;
                sub = (sub - 1) & stars;
            }
            if (all) count[k] += 1;
            if (base == rest) break;
            base = (base - rest) & rest;  // next submask of rest
        }
        if (stars == full) break;
    }
    return count;
}

int64_t oracle_isomorphism_count(const Graph& g, int k) {
    int n = g.n_vertices();
    if (n > 12 || k > 2 || k < 0)
        fail(ErrorCode::TooLarge, "brute-force counting handles n <= 12 and k <= 2 only");
    if (k == 0) return n;
    if (k == 1) return g.n_edges();
    // Induced 4-cycles: 4-subsets inducing exactly 4 edges, every vertex
    // of the subset having degree 2 inside it.
    int64_t count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int vs[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(vs[i], vs[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2)
                        ++count;
                }
    return count;
}

namespace {

// Count cliques extending `clique_size` chosen vertices, candidates
// restricted to higher-numbered common neighbors.
void clique_extend(const Graph& g, std::vector<int>& cand, int clique_size,
                   std::vector<int64_t>& counts) {
    if (static_cast<size_t>(clique_size) >= counts.size()) counts.resize(clique_size + 1, 0);
    counts[clique_size] += 1;
    std::vector<int> next;
    for (size_t i = 0; i < cand.size(); ++i) {
        int u = cand[i];
        next.clear();
        for (size_t j = i + 1; j < cand.size(); ++j)
            if (g.adjacent(u, cand[j])) next.push_back(cand[j]);
        clique_extend(g, next, clique_size + 1, counts);
    }
}

}  // namespace

Poly1 clique_census_serial(const Graph& g) {
    std::vector<int64_t> counts{0};
    counts[0] = 1;  // the empty clique
    for (int v = 0; v < g.n_vertices(); ++v) {
        std::vector<int> cand;
        for (int u : g.neighbors(v))
            if (u > v) cand.push_back(u);
        std::vector<int64_t> local;
        clique_extend(g, cand, 1, local);
        if (local.size() > counts.size()) counts.resize(local.size(), 0);
        for (size_t i = 0; i < local.size(); ++i) counts[i] = checked_add(counts[i], local[i]);
    }
    Poly1 p;
    for (size_t i = 0; i < counts.size(); ++i) p.add_term(static_cast<int>(i), counts[i]);
    return p;
}

Poly1 clique_census(const Graph& g) {
    int n = g.n_vertices();
    std::vector<int64_t> counts{1};
#pragma omp parallel
    {
        std::vector<int64_t> local;
#pragma omp for schedule(dynamic, 4) nowait
        for (int v = 0; v < n; ++v) {
            std::vector<int> cand;
            for (int u : g.neighbors(v))
                if (u > v) cand.push_back(u);
            clique_extend(g, cand, 1, local);
        }
#pragma omp critical
        {
            if (local.size() > counts.size()) counts.resize(local.size(), 0);
            for (size_t i = 0; i < local.size(); ++i) counts[i] = checked_add(counts[i], local[i]);
        }
    }
    Poly1 p;
    for (size_t i = 0; i < counts.size(); ++i) p.add_term(static_cast<int>(i), counts[i]);
    return p;
}

}  // namespace daisy
