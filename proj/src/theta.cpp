#include "daisy/theta.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace daisy {

bool theta_related(const Graph& g, const DistanceMatrix& dm, int e, int f) {
    const Edge& ef = g.edges()[e];
    const Edge& ff = g.edges()[f];
    int32_t s1 = dm.at(ef.a, ff.a) + dm.at(ef.b, ff.b);
    int32_t s2 = dm.at(ef.a, ff.b) + dm.at(ef.b, ff.a);
    return s1 != s2;
}

namespace {

struct Dsu {
    std::vector<int> parent, size;
    explicit Dsu(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

ThetaPartition finish_partition(const Graph& g, const DistanceMatrix& dm, int anchor, Dsu& dsu) {
    int m = g.n_edges();
    ThetaPartition tp;
    tp.class_of.assign(m, -1);
    std::vector<int> root_to_class(m, -1);
    for (int e = 0; e < m; ++e) {
        int r = dsu.find(e);
        if (root_to_class[r] == -1) {
            root_to_class[r] = tp.n_classes++;
            tp.representative.push_back(e);
        }
        tp.class_of[e] = root_to_class[r];
    }

    int n = g.n_vertices();
    tp.sides.reserve(tp.n_classes);
    for (int c = 0; c < tp.n_classes; ++c) {
        const Edge& rep = g.edges()[tp.representative[c]];
        VertexSet wa(n), wb(n);
        for (int v = 0; v < n; ++v) {
            int32_t da = dm.at(rep.a, v), db = dm.at(rep.b, v);
            if (da < db)
                wa.set(v);
            else if (db < da)
                wb.set(v);
            else
                fail(ErrorCode::NotBipartite, "vertex " + std::to_string(v) +
                                                  " is equidistant from the ends of edge (" +
                                                  std::to_string(rep.a) + ", " +
                                                  std::to_string(rep.b) + ")");
        }
        if (wa.test(anchor))
            tp.sides.emplace_back(std::move(wa), std::move(wb));
        else
            tp.sides.emplace_back(std::move(wb), std::move(wa));
    }
    return tp;
}

void check_partition_pre(const Graph& g, int anchor) {
    if (g.n_vertices() == 0) fail(ErrorCode::EmptyInput, "empty graph");
    if (anchor < 0 || anchor >= g.n_vertices())
        fail(ErrorCode::BaseOutOfRange, "anchor " + std::to_string(anchor) + " out of range");
    if (!is_connected(g)) fail(ErrorCode::Disconnected, "graph is not connected");
    if (!bipartition(g).ok) fail(ErrorCode::NotBipartite, "graph has an odd cycle");
}

}  // namespace

ThetaPartition theta_partition_serial(const Graph& g, const DistanceMatrix& dm, int anchor) {
    check_partition_pre(g, anchor);
    int m = g.n_edges();
    Dsu dsu(m);
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f)
            if (theta_related(g, dm, e, f)) dsu.unite(e, f);
    return finish_partition(g, dm, anchor, dsu);
}

ThetaPartition theta_partition(const Graph& g, const DistanceMatrix& dm, int anchor) {
    check_partition_pre(g, anchor);
    int m = g.n_edges();
    Dsu dsu(m);
    // Related pairs are found in parallel one row-block at a time and
    // merged serially; the union-find result does not depend on the order
    // in which pairs arrive, so the partition is deterministic.
    const int block = 64;
    std::vector<std::vector<int>> hits(block);
    for (int lo = 0; lo < m; lo += block) {
        int hi = std::min(m, lo + block);
#pragma omp parallel for schedule(dynamic, 1)
        for (int e = lo; e < hi; ++e) {
            auto& out = hits[e - lo];
            out.clear();
            for (int f = e + 1; f < m; ++f)
                if (theta_related(g, dm, e, f)) out.push_back(f);
        }
        for (int e = lo; e < hi; ++e)
            for (int f : hits[e - lo]) dsu.unite(e, f);
    }
    return finish_partition(g, dm, anchor, dsu);
}

namespace {

// Shorten a chain e = h_0, h_1, ..., h_k = f of directly-related edges
// until three consecutive edges break transitivity. Such a chain always
// exists inside a closure class, and shortening must terminate because a
// fully transitive chain would make e and f directly related.
std::array<int, 3> transitivity_witness(const Graph& g, const DistanceMatrix& dm,
                                        const std::vector<int>& class_edges, int e, int f) {
    int m = static_cast<int>(class_edges.size());
    std::vector<int> pos(g.n_edges(), -1);
    for (int i = 0; i < m; ++i) pos[class_edges[i]] = i;

    // BFS over the direct relation restricted to the class.
    std::vector<int> parent(m, -1), queue;
    int se = pos[e], sf = pos[f];
    parent[se] = se;
    queue.push_back(se);
    for (size_t head = 0; head < queue.size() && parent[sf] == -1; ++head) {
        int u = queue[head];
        for (int v = 0; v < m; ++v)
            if (parent[v] == -1 && theta_related(g, dm, class_edges[u], class_edges[v])) {
                parent[v] = u;
                queue.push_back(v);
            }
    }
    std::vector<int> chain;
    for (int x = sf; x != se; x = parent[x]) chain.push_back(class_edges[x]);
    chain.push_back(e);
    std::reverse(chain.begin(), chain.end());

    while (chain.size() > 3) {
        if (!theta_related(g, dm, chain[0], chain[2])) return {chain[0], chain[1], chain[2]};
        chain.erase(chain.begin() + 1);
    }
    return {chain[0], chain[1], chain[2]};
}

}  // namespace

std::string PartialCubeWitness::describe(const Graph& g) const {
    switch (kind) {
        case Kind::none:
            return "no witness";
        case Kind::odd_cycle: {
            std::string s = "odd cycle:";
            for (int v : odd_cycle) s += " " + std::to_string(v);
            return s;
        }
        case Kind::non_transitive: {
            auto name = [&](int e) {
                return "(" + std::to_string(g.edges()[e].a) + "," + std::to_string(g.edges()[e].b) +
                       ")";
            };
            return "relation not transitive on edges " + name(edge_triple[0]) + " ~ " +
                   name(edge_triple[1]) + " ~ " + name(edge_triple[2]) + " but " +
                   name(edge_triple[0]) + " !~ " + name(edge_triple[2]);
        }
        case Kind::isometry:
            return "labels disagree with the distance between vertices " +
                   std::to_string(vertex_pair.first) + " and " + std::to_string(vertex_pair.second);
    }
    return "";
}

PartialCubeResult recognize_partial_cube(const Graph& g, const DistanceMatrix& dm, int base) {
    if (g.n_vertices() == 0) fail(ErrorCode::EmptyInput, "empty graph");
    if (base < 0 || base >= g.n_vertices())
        fail(ErrorCode::BaseOutOfRange, "base " + std::to_string(base) + " out of range");
    if (!is_connected(g)) fail(ErrorCode::Disconnected, "graph is not connected");

    PartialCubeResult res;
    Bipartition bp = bipartition(g);
    if (!bp.ok) {
        res.witness.kind = PartialCubeWitness::Kind::odd_cycle;
        res.witness.odd_cycle = bp.odd_cycle;
        return res;
    }

    res.theta = theta_partition(g, dm, base);
    const ThetaPartition& tp = res.theta;

    std::vector<std::vector<int>> members(tp.n_classes);
    for (int e = 0; e < g.n_edges(); ++e) members[tp.class_of[e]].push_back(e);
    for (int c = 0; c < tp.n_classes; ++c) {
        const auto& cls = members[c];
        for (size_t i = 0; i < cls.size(); ++i)
            for (size_t j = i + 1; j < cls.size(); ++j)
                if (!theta_related(g, dm, cls[i], cls[j])) {
                    res.witness.kind = PartialCubeWitness::Kind::non_transitive;
                    res.witness.edge_triple = transitivity_witness(g, dm, cls, cls[i], cls[j]);
                    return res;
                }
    }

    if (tp.n_classes > BitLabel::max_width)
        fail(ErrorCode::DimensionTooLarge,
             std::to_string(tp.n_classes) + " classes exceed the 64-coordinate label limit");

    CanonicalEmbedding emb;
    emb.base = base;
    emb.dim = tp.n_classes;
    emb.labels.reserve(g.n_vertices());
    for (int v = 0; v < g.n_vertices(); ++v) {
        uint64_t bits = 0;
        for (int c = 0; c < tp.n_classes; ++c)
            if (tp.sides[c].second.test(v)) bits |= uint64_t{1} << c;
        emb.labels.emplace_back(emb.dim, bits);
    }

    for (int u = 0; u < g.n_vertices(); ++u)
        for (int v = u + 1; v < g.n_vertices(); ++v)
            if (emb.labels[u].hamming(emb.labels[v]) != dm.at(u, v)) {
                res.witness.kind = PartialCubeWitness::Kind::isometry;
                res.witness.vertex_pair = {u, v};
                return res;
            }

    res.embedding = std::move(emb);
    res.ok = true;
    return res;
}

PartialCubeResult recognize_partial_cube(const Graph& g, int base) {
    return recognize_partial_cube(g, all_pairs_distances(g), base);
}

CanonicalEmbedding canonical_embedding(const Graph& g, const DistanceMatrix& dm, int base) {
    PartialCubeResult r = recognize_partial_cube(g, dm, base);
    if (!r.ok) {
        if (r.witness.kind == PartialCubeWitness::Kind::isometry)
            fail(ErrorCode::IsometryViolation, r.witness.describe(g));
        fail(ErrorCode::NotPartialCube, r.witness.describe(g));
    }
    return std::move(r.embedding);
}

CanonicalEmbedding canonical_embedding(const Graph& g, int base) {
    return canonical_embedding(g, all_pairs_distances(g), base);
}

int isometric_dimension(const Graph& g) {
    return canonical_embedding(g, g.base().value_or(0)).dim;
}

CanonicalEmbedding relabel_from_labels(const Graph& g, const DistanceMatrix& dm) {
    if (!g.has_labels()) fail(ErrorCode::InvalidSpec, "graph carries no labels");
    if (!g.base()) fail(ErrorCode::InvalidSpec, "graph has no base vertex");
    int n = g.n_vertices();
    int base = *g.base();

    uint64_t base_bits = g.label(base).bits();
    uint64_t used = 0;
    for (int v = 0; v < n; ++v) used |= g.label(v).bits() ^ base_bits;

    // Compact the non-constant coordinates, preserving their order.
    std::vector<int> coord_map(g.label_width(), -1);
    int dim = 0;
    for (int i = 0; i < g.label_width(); ++i)
        if ((used >> i) & 1) coord_map[i] = dim++;

    CanonicalEmbedding emb;
    emb.base = base;
    emb.dim = dim;
    emb.labels.reserve(n);
    for (int v = 0; v < n; ++v) {
        uint64_t anchored = g.label(v).bits() ^ base_bits;
        uint64_t bits = 0;
        for (int i = 0; i < g.label_width(); ++i)
            if ((anchored >> i) & 1) bits |= uint64_t{1} << coord_map[i];
        emb.labels.emplace_back(dim, bits);
    }

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (emb.labels[u].hamming(emb.labels[v]) != dm.at(u, v))
                fail(ErrorCode::IsometryViolation,
                     "labels of vertices " + std::to_string(u) + " and " + std::to_string(v) +
                         " are at Hamming distance " +
                         std::to_string(emb.labels[u].hamming(emb.labels[v])) +
                         " but graph distance " + std::to_string(dm.at(u, v)));
    return emb;
}

CanonicalEmbedding relabel_from_labels(const Graph& g) {
    return relabel_from_labels(g, all_pairs_distances(g));
}

Graph crossing_graph(const CanonicalEmbedding& emb) {
    if (emb.dim == 0)
        fail(ErrorCode::SingletonGraph, "a single vertex has no coordinates to cross");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < emb.dim; ++i)
        for (int j = i + 1; j < emb.dim; ++j) {
            unsigned seen = 0;
            for (const BitLabel& l : emb.labels) {
                unsigned pat = (l.test(i) ? 1u : 0u) | (l.test(j) ? 2u : 0u);
                seen |= 1u << pat;
                if (seen == 0xF) break;
            }
            if (seen == 0xF) edges.push_back({i, j});
        }
    return Graph::build(emb.dim, std::move(edges));
}

}  // namespace daisy
