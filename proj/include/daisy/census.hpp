#ifndef DAISY_CENSUS_HPP
#define DAISY_CENSUS_HPP

#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

#include "daisy/poly.hpp"
#include "daisy/theta.hpp"

namespace daisy {

// Membership test over a set of equal-width labels. Backed by a flat
// bitmap up to width 24 and a hash set beyond.
class LabelIndex {
  public:
    LabelIndex() = default;
    LabelIndex(const std::vector<BitLabel>& labels, int width);

    bool contains(uint64_t bits) const {
        if (use_bitmap_) return (bitmap_[bits >> 3] >> (bits & 7)) & 1;
        return set_.contains(bits);
    }
    int width() const { return width_; }

  private:
    int width_ = 0;
    bool use_bitmap_ = true;
    std::vector<uint8_t> bitmap_;
    std::unordered_set<uint64_t> set_;
};

// An induced subcube of the embedded graph: base label plus the set of
// free coordinates. The base has 0 on every free coordinate.
struct Subcube {
    BitLabel base_label;
    uint64_t free_mask = 0;
    int dim() const { return std::popcount(free_mask); }
    bool operator==(const Subcube&) const = default;
};

struct CubeCensus {
    // (k, d) -> number of k-dimensional subcubes whose base label has
    // weight d (the subcube's distance from the embedding base).
    std::map<std::pair<int, int>, int64_t> cubes;
    // d -> number of vertices at distance d from the base.
    std::map<int, int64_t> vertices_by_distance;
    bool operator==(const CubeCensus&) const = default;
};

namespace detail {

// Extend the subcube (base, free) by coordinates >= from. `members` holds
// the 2^k labels of the current subcube and is grown and truncated in
// place as the recursion moves.
template <class F>
void visit_subcubes_rec(int dim, const LabelIndex& idx, uint64_t base, uint64_t free, int from,
                        std::vector<uint64_t>& members, F&& fn) {
    int k = std::popcount(free);
    size_t sz = size_t{1} << k;
    for (int c = from; c < dim; ++c) {
        uint64_t bit = uint64_t{1} << c;
        if (base & bit) continue;
        bool all = true;
        for (size_t i = 0; i < sz; ++i)
            if (!idx.contains(members[i] | bit)) {
                all = false;
                break;
            }
        if (!all) continue;
        for (size_t i = 0; i < sz; ++i) members.push_back(members[i] | bit);
        fn(base, free | bit, k + 1);
        visit_subcubes_rec(dim, idx, base, free | bit, c + 1, members, fn);
        members.resize(sz);
    }
}

}  // namespace detail

// Visit every subcube whose base label is labels[v]: each one exactly once,
// free coordinates added in increasing order. fn(base_bits, free_mask, k).
template <class F>
void visit_subcubes_from(const CanonicalEmbedding& emb, const LabelIndex& idx, int v, F&& fn,
                         std::vector<uint64_t>& members) {
    uint64_t base = emb.labels[v].bits();
    members.clear();
    members.push_back(base);
    fn(base, uint64_t{0}, 0);
    detail::visit_subcubes_rec(emb.dim, idx, base, 0, 0, members, fn);
}

CubeCensus cube_census(const CanonicalEmbedding& emb);         // parallel over base vertices
CubeCensus cube_census_serial(const CanonicalEmbedding& emb);  // reference

// All subcubes, sorted by (base label, free mask). Only for modest sizes.
std::vector<Subcube> enumerate_subcubes(const CanonicalEmbedding& emb);

Poly1 cube_polynomial(const CubeCensus& c);      // sum over k of (count of k-cubes) x^k
Poly1 distance_polynomial(const CubeCensus& c);  // sum over d of w_d x^d
Poly2 distance_cube_polynomial(const CubeCensus& c);

// Independent check: scan all 3^n patterns over {0,1,*}^n and count the
// ones whose completions all lie in the label set. Returns k -> count.
std::map<int, int64_t> oracle_subcube_scan(const std::vector<BitLabel>& labels, int n);

// Count subgraph occurrences by brute force: k = 0 vertices, k = 1 edges,
// k = 2 induced 4-cycles. Tiny graphs only.
int64_t oracle_isomorphism_count(const Graph& g, int k);

// Clique polynomial: coefficient of x^i is the number of i-cliques; the
// constant term counts the empty clique.
Poly1 clique_census(const Graph& g);         // parallel over the lowest clique vertex
Poly1 clique_census_serial(const Graph& g);  // reference

}  // namespace daisy

#endif
