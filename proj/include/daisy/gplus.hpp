#ifndef DAISY_GPLUS_HPP
#define DAISY_GPLUS_HPP

#include <cstdint>
#include <vector>

#include "daisy/theta.hpp"

namespace daisy {

// A cycle in canonical form: starts at its smallest vertex, and of the two
// directions the one whose second vertex is smaller.
struct IsoCycle {
    std::vector<int> vertices;
    bool operator==(const IsoCycle&) const = default;
};

// All cycles whose cyclic distances equal the graph distances, up to
// max_len (0 = no cap beyond |V|). Sorted by (length, vertex sequence).
std::vector<IsoCycle> isometric_cycles(const Graph& g, const DistanceMatrix& dm,
                                       int max_len = 0);  // parallel
std::vector<IsoCycle> isometric_cycles_serial(const Graph& g, const DistanceMatrix& dm,
                                              int max_len = 0);

// Cycles whose convex hulls are maximal under inclusion among the given
// cycles' hulls (ties all kept). Order preserved from the input.
std::vector<IsoCycle> hull_order_maximal(const Graph& g, const DistanceMatrix& dm,
                                         const std::vector<IsoCycle>& cycles);

// Smallest ambient subcube containing the labels: AND/OR over the set.
struct AmbientSubcube {
    int width = 0;
    uint64_t fixed_bits = 0;  // values on the non-free coordinates
    uint64_t free_mask = 0;
    int dim() const { return std::popcount(free_mask); }
    std::vector<BitLabel> members() const;  // all labels, ascending bits
};
AmbientSubcube ambient_hull(const std::vector<BitLabel>& labels);

struct GPlusOptions {
    int max_vertices = 24;         // input size cap
    int max_cycle_len = 0;         // 0 = current stage's vertex count
    int max_result_vertices = 4096;
};

struct GPlusStage {
    std::vector<BitLabel> labels;                 // S_i, sorted
    std::vector<std::vector<BitLabel>> cycles_used;  // maximal cycles of stage i
};

struct GPlusTrace {
    int base = 0;             // base vertex id in the input graph
    std::vector<GPlusStage> stages;  // S_0 .. S_l, strictly growing
    Graph result;             // input ids kept, new vertices appended in
                              // label order
};

// Iterate: take the maximal isometric cycles, union the ambient subcube
// hulls of their vertex labels into the label set, induce from the
// hypercube, repeat to the fixpoint.
GPlusTrace g_plus(const Graph& g, int base, const GPlusOptions& opt = {});

struct GPlusVerification {
    bool induced_ok = false;   // input graph is an induced subgraph of the result
    bool median_ok = false;    // result is a median graph
    bool crossing_ok = false;  // crossing graphs of input and result agree
};
GPlusVerification verify_gplus(const Graph& g, const GPlusTrace& trace);

}  // namespace daisy

#endif
