#ifndef DAISY_CLASSIFY_HPP
#define DAISY_CLASSIFY_HPP

#include <array>
#include <optional>
#include <string>

#include "daisy/census.hpp"
#include "daisy/poly.hpp"
#include "daisy/theta.hpp"

namespace daisy {

// Vertices whose label is not strictly contained in any other label.
std::vector<int> maximal_vertices(const CanonicalEmbedding& emb);

struct DaisyCheck {
    bool ok = false;
    // First label (in lex scan order) that is missing although some
    // present label contains it.
    std::optional<BitLabel> missing;
};

// Downward closure of the label set under bitwise containment.
DaisyCheck is_daisy(const CanonicalEmbedding& emb);

// Equivalent test through intervals: for every maximal vertex u, the
// interval from the base to u induces a full hypercube of dimension
// weight(u).
bool is_daisy_interval_criterion(const Graph& g, const DistanceMatrix& dm,
                                 const CanonicalEmbedding& emb);

struct MedianCheck {
    bool ok = false;
    std::array<int, 3> triple{-1, -1, -1};  // valid when !ok
    int64_t median_count = -1;              // medians of that triple
};

// Every vertex triple has exactly one median. O(n^3) over interval bitmaps.
MedianCheck is_median(const Graph& g, const DistanceMatrix& dm);

struct ClassificationFlags {
    bool is_partial_cube = false;
    bool is_daisy_at_base = false;
    bool is_median = false;
    bool is_simplex_at_base = false;  // daisy and median
    std::vector<int> maximal;
    std::optional<BitLabel> daisy_missing_label;
    std::optional<std::array<int, 3>> median_bad_triple;
    std::optional<int64_t> median_count;
};

// Verdicts for the identities and inequalities tying C, W, D and the
// clique polynomial of the crossing graph together.
struct TheoremReport {
    Poly1 C, W, Cl;  // cube, distance, crossing-graph clique polynomials
    Poly2 D;

    bool prop_a = false;  // C == W(x+1)
    bool prop_b = false;  // D == W(x+y)
    bool prop_c = false;  // D == C(x+y-1); false as well when the
                          // substitution produced a negative coefficient
    bool equivalence_consistent = false;  // a, b, c and the direct daisy
                                          // decision all agree
    bool dw_leq = false;       // D <= W(x+y)
    bool cw_leq = false;       // C <= W(x+1)
    bool ccl_leq = false;      // C <= Cl(x+1)
    bool ccl_equal = false;    // C == Cl(x+1)
    bool ccl_equal_matches_median = false;
    bool wcl_equal = false;    // W == Cl
    bool wcl_equal_matches_simplex = false;
    bool crossing_skipped = false;  // dimension 0, no crossing graph exists

    std::string describe() const;
};

struct AnalysisReport {
    int base = 0;
    std::string base_rule;  // "file", "flag" or "default-vertex-0"
    PartialCubeResult recognition;
    bool label_fallback = false;  // input labels were not isometric; they
                                  // were ignored and recognition re-run
    ClassificationFlags flags;    // valid when recognition.ok
    CubeCensus census;
    TheoremReport theorems;
    int idim = 0;
};

ClassificationFlags classify(const Graph& g, const DistanceMatrix& dm,
                             const CanonicalEmbedding& emb);

TheoremReport verify_theorems(const Graph& g, const DistanceMatrix& dm,
                              const CanonicalEmbedding& emb, const CubeCensus& census,
                              const ClassificationFlags& flags);

// The whole pipeline: recognition (through the given labels when they are
// isometric, from scratch otherwise), census, classification, theorems.
AnalysisReport analyze(const Graph& g, std::optional<int> base_override = std::nullopt);

}  // namespace daisy

#endif
