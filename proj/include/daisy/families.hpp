#ifndef DAISY_FAMILIES_HPP
#define DAISY_FAMILIES_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "daisy/graph.hpp"

namespace daisy {

// All generators are deterministic: same arguments (and seed), same graph,
// vertex for vertex. Labelled families list their vertices in label order.

Graph hypercube(int n);  // n <= 16

// Downward closure of the given generator labels; base = the all-zero
// label. Generators must share width n <= 20 and there must be at least one.
Graph daisy_cube(int n, const std::vector<BitLabel>& generators);

Graph fibonacci_cube(int n);  // words without consecutive 1s, n <= 16
Graph lucas_cube(int n);      // as above but circular, n <= 16

// Vertices are the cliques of h (including the empty one) as indicator
// labels over h's vertices; adjacency is Hamming distance 1. |V(h)| <= 20.
Graph simplex_graph(const Graph& h);

// The ten-vertex running example: two 4-cycle "wings" joined through a
// central square, base at the bottom-center vertex.
Graph figure1_graph();

// The two small contrast examples: a 4-path based at an endpoint, and the
// 3-cube minus one vertex based at the vertex antipodal to the hole.
Graph figure2_path();
Graph figure2_q3_minus();

Graph grid_graph(int rows, int cols);  // product of two paths, base corner 0
Graph cycle_graph(int len);            // base 0

// Downward-closed random label set: each word is kept with probability
// `density` (draws consumed in word order), the result closed downward,
// the zero word forced in. density 1 gives the full hypercube. n <= 16.
Graph random_downset(int n, uint64_t seed, double density);

// Start from the full hypercube and try to delete `deletions` random
// vertices, skipping any deletion that would break the isometry of the
// remainder. Base = lexicographically least surviving label. n <= 6.
Graph random_partial_cube_by_deletion(int n, uint64_t seed, int deletions);

// Every non-empty downward-closed subset of {0,1}^n, in a fixed
// deterministic order. n <= 5.
void enumerate_all_downsets(int n, const std::function<void(const std::vector<BitLabel>&)>& fn);
int64_t count_all_downsets(int n);

}  // namespace daisy

#endif
