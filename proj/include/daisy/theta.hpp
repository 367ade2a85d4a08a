#ifndef DAISY_THETA_HPP
#define DAISY_THETA_HPP

#include <array>
#include <optional>
#include <vector>

#include "daisy/graph.hpp"

namespace daisy {

// The edge relation at the heart of everything here: edges e = uv and
// f = xy are related when d(u,x) + d(v,y) != d(u,y) + d(v,x).
bool theta_related(const Graph& g, const DistanceMatrix& dm, int e, int f);

struct ThetaPartition {
    int n_classes = 0;
    std::vector<int> class_of;       // edge id -> class id
    std::vector<int> representative; // class id -> smallest edge id in it
    // Halfspaces per class; sides[c].first contains the anchor vertex.
    std::vector<std::pair<VertexSet, VertexSet>> sides;
};

// Classes of the transitive closure of the relation, numbered by smallest
// edge id. Requires a connected bipartite graph.
ThetaPartition theta_partition(const Graph& g, const DistanceMatrix& dm, int anchor);  // parallel
ThetaPartition theta_partition_serial(const Graph& g, const DistanceMatrix& dm, int anchor);

struct CanonicalEmbedding {
    int base = 0;
    int dim = 0;
    std::vector<BitLabel> labels;  // labels[base] is all-zero, width == dim
};

struct PartialCubeWitness {
    enum class Kind {
        none,
        odd_cycle,       // vertices of an odd closed walk
        non_transitive,  // e theta f, f theta h, not e theta h
        isometry,        // labels disagree with distance for this pair
    };
    Kind kind = Kind::none;
    std::vector<int> odd_cycle;
    std::array<int, 3> edge_triple{-1, -1, -1};
    std::pair<int, int> vertex_pair{-1, -1};

    std::string describe(const Graph& g) const;
};

struct PartialCubeResult {
    bool ok = false;
    PartialCubeWitness witness;
    ThetaPartition theta;         // populated once the graph passed bipartiteness
    CanonicalEmbedding embedding; // populated when ok
    explicit operator bool() const { return ok; }
};

// Full recognition: bipartite, the relation transitive, and the labelling
// read off the halfspaces an isometry into the hypercube.
PartialCubeResult recognize_partial_cube(const Graph& g, const DistanceMatrix& dm, int base);
PartialCubeResult recognize_partial_cube(const Graph& g, int base = 0);

// Recognition plus unwrap; throws NotPartialCube (or IsometryViolation if
// the labelling stage itself is what failed) with the witness description.
CanonicalEmbedding canonical_embedding(const Graph& g, const DistanceMatrix& dm, int base);
CanonicalEmbedding canonical_embedding(const Graph& g, int base);

int isometric_dimension(const Graph& g);

// Re-anchor the labels a graph already carries: XOR with the base label,
// drop constant coordinates, and validate the result is an isometry into
// the hypercube of the remaining coordinates.
CanonicalEmbedding relabel_from_labels(const Graph& g, const DistanceMatrix& dm);
CanonicalEmbedding relabel_from_labels(const Graph& g);

// One vertex per coordinate; coordinates i and j are adjacent when all
// four bit patterns 00, 01, 10, 11 occur at positions (i, j) across the
// labels. Throws SingletonGraph when the embedding has dimension 0.
Graph crossing_graph(const CanonicalEmbedding& emb);

}  // namespace daisy

#endif
