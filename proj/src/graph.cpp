#include "daisy/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace daisy {

Graph Graph::build(int n, std::vector<std::pair<int, int>> edge_list,
                   std::optional<std::vector<BitLabel>> labels, std::optional<int> base) {
    if (n < 0) fail(ErrorCode::InvalidSpec, "negative vertex count");
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            fail(ErrorCode::InvalidSpec, "edge endpoint out of range: (" + std::to_string(a) +
                                             ", " + std::to_string(b) + ")");
        if (a == b) fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
        edges.push_back({a, b});
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            fail(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(edges[i].a) + ", " +
                                               std::to_string(edges[i].b) + ")");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (const Edge& e : g.edges_) {
        g.adj_[e.a].push_back(e.b);
        g.adj_[e.b].push_back(e.a);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

    if (labels) {
        if (static_cast<int>(labels->size()) != n)
            fail(ErrorCode::InvalidSpec, "label count differs from vertex count");
        if (n > 0) {
            int w = (*labels)[0].width();
            for (const BitLabel& l : *labels)
                if (l.width() != w)
                    fail(ErrorCode::LabelWidthMismatch, "labels of unequal width");
        }
        std::vector<BitLabel> sorted = *labels;
        sort_labels_lex(sorted);
        for (size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                fail(ErrorCode::DuplicateLabel, "label " + sorted[i].to_string() + " repeated");
        for (const Edge& e : g.edges_)
            if ((*labels)[e.a].hamming((*labels)[e.b]) != 1)
                fail(ErrorCode::NonUnitHammingEdge,
                     "edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                         ") joins labels " + (*labels)[e.a].to_string() + " and " +
                         (*labels)[e.b].to_string());
        g.labels_ = std::move(*labels);
    }
    if (base) {
        if (*base < 0 || *base >= n)
            fail(ErrorCode::BaseOutOfRange, "base " + std::to_string(*base) + " out of range");
        g.base_ = *base;
    }
    return g;
}

Graph Graph::from_labels(std::vector<BitLabel> labels, std::optional<int> base) {
    int n = static_cast<int>(labels.size());
    std::unordered_map<uint64_t, int> at;
    at.reserve(labels.size() * 2);
    for (int i = 0; i < n; ++i) at.emplace(labels[i].bits(), i);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        int w = labels[i].width();
        for (int b = 0; b < w; ++b) {
            auto it = at.find(labels[i].bits() ^ (uint64_t{1} << b));
            if (it != at.end() && it->second > i) edges.push_back({i, it->second});
        }
    }
    return build(n, std::move(edges), std::move(labels), base);
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::with_base(int b) const {
    if (b < 0 || b >= n_)
        fail(ErrorCode::BaseOutOfRange, "base " + std::to_string(b) + " out of range");
    Graph g = *this;
    g.base_ = b;
    return g;
}

namespace {

void bfs_row(const Graph& g, int src, int32_t* dist, std::vector<int>& queue) {
    int n = g.n_vertices();
    std::fill(dist, dist + n, DistanceMatrix::unreachable);
    queue.clear();
    queue.push_back(src);
    dist[src] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        int32_t du = dist[u];
        for (int v : g.neighbors(u)) {
            if (dist[v] == DistanceMatrix::unreachable) {
                dist[v] = du + 1;
                queue.push_back(v);
            }
        }
    }
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
    int n = g.n_vertices();
    std::vector<int32_t> d(static_cast<size_t>(n) * n);
#pragma omp parallel
    {
        std::vector<int> queue;
        queue.reserve(n);
#pragma omp for schedule(dynamic, 16)
        for (int s = 0; s < n; ++s) bfs_row(g, s, d.data() + static_cast<size_t>(s) * n, queue);
    }
    return DistanceMatrix(n, std::move(d));
}

DistanceMatrix all_pairs_distances_serial(const Graph& g) {
    int n = g.n_vertices();
    std::vector<int32_t> d(static_cast<size_t>(n) * n);
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = 0; s < n; ++s) bfs_row(g, s, d.data() + static_cast<size_t>(s) * n, queue);
    return DistanceMatrix(n, std::move(d));
}

bool is_connected(const Graph& g) {
    int n = g.n_vertices();
    if (n == 0) return true;
    std::vector<int8_t> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    for (size_t head = 0; head < queue.size(); ++head)
        for (int v : g.neighbors(queue[head]))
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
    return reached == n;
}

Bipartition bipartition(const Graph& g) {
    int n = g.n_vertices();
    Bipartition res;
    res.side.assign(n, -1);
    std::vector<int> parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (res.side[root] != -1) continue;
        res.side[root] = 0;
        std::vector<int> queue{root};
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (res.side[v] == -1) {
                    res.side[v] = static_cast<int8_t>(1 - res.side[u]);
                    parent[v] = u;
                    queue.push_back(v);
                } else if (res.side[v] == res.side[u]) {
                    // Close the odd walk through the BFS tree: u and v are on
                    // the same side, so tree-path(u) + edge uv + tree-path(v)
                    // has odd length.
                    std::vector<int> up, vp;
                    for (int x = u; x != -1; x = parent[x]) up.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) vp.push_back(x);
                    while (up.size() > 1 && vp.size() > 1 &&
                           up[up.size() - 2] == vp[vp.size() - 2]) {
                        up.pop_back();
                        vp.pop_back();
                    }
                    res.odd_cycle.assign(up.begin(), up.end());
                    for (size_t i = vp.size() - 1; i-- > 0;) res.odd_cycle.push_back(vp[i]);
                    res.ok = false;
                    return res;
                }
            }
        }
    }
    res.ok = true;
    return res;
}

VertexSet interval(const Graph& g, const DistanceMatrix& dm, int a, int b) {
    int32_t dab = dm.at(a, b);
    if (dab == DistanceMatrix::unreachable)
        fail(ErrorCode::Unreachable, "interval endpoints " + std::to_string(a) + " and " +
                                         std::to_string(b) + " are in different components");
    int n = g.n_vertices();
    VertexSet s(n);
    for (int z = 0; z < n; ++z) {
        int32_t az = dm.at(a, z), zb = dm.at(z, b);
        if (az != DistanceMatrix::unreachable && zb != DistanceMatrix::unreachable &&
            az + zb == dab)
            s.set(z);
    }
    return s;
}

VertexSet span_intervals(const Graph& g, const DistanceMatrix& dm, const VertexSet& s) {
    VertexSet out(g.n_vertices());
    std::vector<int> vs = s.to_vector();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i; j < vs.size(); ++j) out |= interval(g, dm, vs[i], vs[j]);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.empty()) fail(ErrorCode::EmptySet, "induced subgraph of the empty set");
    InducedSubgraph out;
    out.to_parent = s.to_vector();
    std::vector<int> to_child(g.n_vertices(), -1);
    for (size_t i = 0; i < out.to_parent.size(); ++i) to_child[out.to_parent[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges())
        if (to_child[e.a] != -1 && to_child[e.b] != -1)
            edges.push_back({to_child[e.a], to_child[e.b]});
    std::optional<std::vector<BitLabel>> labels;
    if (g.has_labels()) {
        labels.emplace();
        for (int v : out.to_parent) labels->push_back(g.label(v));
    }
    std::optional<int> base;
    if (g.base() && to_child[*g.base()] != -1) base = to_child[*g.base()];
    out.graph = Graph::build(static_cast<int>(out.to_parent.size()), std::move(edges),
                             std::move(labels), base);
    return out;
}

bool is_isometric_subgraph(const Graph& g, const DistanceMatrix& dm, const VertexSet& s) {
    InducedSubgraph sub = induced_subgraph(g, s);
    DistanceMatrix sd = all_pairs_distances_serial(sub.graph);
    int k = sub.graph.n_vertices();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (sd.at(i, j) != dm.at(sub.to_parent[i], sub.to_parent[j])) return false;
    return true;
}

bool is_convex(const Graph& g, const DistanceMatrix& dm, const VertexSet& s) {
    int n = g.n_vertices();
    std::vector<int> vs = s.to_vector();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            int a = vs[i], b = vs[j];
            int32_t dab = dm.at(a, b);
            if (dab == DistanceMatrix::unreachable) return false;
            for (int z = 0; z < n; ++z)
                if (!s.test(z) && dm.at(a, z) != DistanceMatrix::unreachable &&
                    dm.at(z, b) != DistanceMatrix::unreachable && dm.at(a, z) + dm.at(z, b) == dab)
                    return false;
        }
    return true;
}

VertexSet convex_hull(const Graph& g, const DistanceMatrix& dm, const VertexSet& s) {
    VertexSet cur = s;
    int n = g.n_vertices();
    for (int round = 0; round < n; ++round) {
        VertexSet next = span_intervals(g, dm, cur);
        next |= cur;
        if (next == cur) return cur;
        cur = next;
    }
    return cur;
}

}  // namespace daisy
