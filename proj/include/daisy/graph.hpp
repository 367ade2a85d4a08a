#ifndef DAISY_GRAPH_HPP
#define DAISY_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "daisy/bitlabel.hpp"
#include "daisy/errors.hpp"

namespace daisy {

// Dense bitset over vertex ids 0..n-1.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe_size() const { return n_; }
    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { w_[v >> 6] |= uint64_t{1} << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    bool empty() const {
        for (uint64_t x : w_)
            if (x) return false;
        return true;
    }

    bool operator==(const VertexSet&) const = default;

    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    bool subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    template <class F>
    void for_each(F f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i];
            while (x) {
                f(static_cast<int>(i * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

  private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct Edge {
    int a, b;  // a < b
    bool operator==(const Edge&) const = default;
};

// Immutable simple undirected graph. Optionally carries hypercube labels
// (then every edge must join labels at Hamming distance 1) and a base vertex.
class Graph {
  public:
    Graph() = default;  // the empty graph; real instances come from build()

    static Graph build(int n, std::vector<std::pair<int, int>> edge_list,
                       std::optional<std::vector<BitLabel>> labels = std::nullopt,
                       std::optional<int> base = std::nullopt);

    // Vertices given by their labels; edges are the Hamming-distance-1 pairs.
    static Graph from_labels(std::vector<BitLabel> labels, std::optional<int> base = std::nullopt);

    int n_vertices() const { return n_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<BitLabel>& labels() const { return labels_; }
    const BitLabel& label(int v) const { return labels_[v]; }
    int label_width() const { return labels_.empty() ? 0 : labels_[0].width(); }

    std::optional<int> base() const { return base_; }
    Graph with_base(int b) const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;            // sorted by (a, b)
    std::vector<std::vector<int>> adj_;  // each list sorted ascending
    std::vector<BitLabel> labels_;       // empty when unlabelled
    std::optional<int> base_;
};

// All-pairs distances; unreachable pairs hold `unreachable`.
class DistanceMatrix {
  public:
    static constexpr int32_t unreachable = -1;

    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int32_t> d) : n_(n), d_(std::move(d)) {}

    int n_vertices() const { return n_; }
    int32_t at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    bool reachable(int u, int v) const { return at(u, v) != unreachable; }

    bool operator==(const DistanceMatrix&) const = default;

  private:
    int n_ = 0;
    std::vector<int32_t> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);         // BFS per source, parallel
DistanceMatrix all_pairs_distances_serial(const Graph& g);  // reference

bool is_connected(const Graph& g);

struct Bipartition {
    bool ok = false;
    std::vector<int8_t> side;    // valid when ok
    std::vector<int> odd_cycle;  // valid when !ok, an odd closed walk's vertices
};
Bipartition bipartition(const Graph& g);

// I(a, b) = vertices on shortest a-b paths. Throws Unreachable when the
// endpoints lie in different components.
VertexSet interval(const Graph& g, const DistanceMatrix& dm, int a, int b);

// Union of I(a, b) over all a, b in s (one expansion step of the hull).
VertexSet span_intervals(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // new id -> old id, ascending
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Distances inside the induced subgraph equal distances in g. A pair
// unreachable inside the induced subgraph counts as a mismatch.
bool is_isometric_subgraph(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);

bool is_convex(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);

// Smallest convex superset; interval spanning iterated to a fixpoint,
// which is reached after at most |V| rounds.
VertexSet convex_hull(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);

}  // namespace daisy

#endif
