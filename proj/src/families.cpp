#include "daisy/families.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "daisy/theta.hpp"

namespace daisy {

namespace {

Graph graph_from_sorted_labels(std::vector<BitLabel> labels) {
    sort_labels_lex(labels);
    return Graph::from_labels(std::move(labels), 0);
}

// Close a label set downward under bitwise containment.
std::vector<BitLabel> downward_closure(int n, const std::vector<BitLabel>& seed) {
    std::vector<uint8_t> in(size_t{1} << n, 0);
    std::vector<uint64_t> queue;
    for (const BitLabel& l : seed)
        if (!in[l.bits()]) {
            in[l.bits()] = 1;
            queue.push_back(l.bits());
        }
    for (size_t head = 0; head < queue.size(); ++head) {
        uint64_t w = queue[head];
        for (uint64_t rest = w; rest; rest &= rest - 1) {
            uint64_t down = w & ~(rest & (~rest + 1));
            if (!in[down]) {
                in[down] = 1;
                queue.push_back(down);
            }
        }
    }
    std::vector<BitLabel> out;
    for (uint64_t w = 0; w < (uint64_t{1} << n); ++w)
        if (in[w]) out.emplace_back(n, w);
    return out;
}

// Uniform draw in [0, 1) from the top 53 bits; identical on every platform,
// unlike the standard distributions.
double unit_draw(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph hypercube(int n) {
    if (n < 0 || n > 16) fail(ErrorCode::DimensionTooLarge, "hypercube limited to n <= 16");
    std::vector<BitLabel> labels;
    labels.reserve(size_t{1} << n);
    for (uint64_t w = 0; w < (uint64_t{1} << n); ++w) labels.emplace_back(n, w);
    return graph_from_sorted_labels(std::move(labels));
}

Graph daisy_cube(int n, const std::vector<BitLabel>& generators) {
    if (n < 0 || n > 20) fail(ErrorCode::DimensionTooLarge, "daisy cube limited to n <= 20");
    if (generators.empty()) fail(ErrorCode::EmptyX, "no generator labels given");
    for (const BitLabel& l : generators)
        if (l.width() != n)
            fail(ErrorCode::WidthMismatch,
                 "generator " + l.to_string() + " does not have width " + std::to_string(n));
    return graph_from_sorted_labels(downward_closure(n, generators));
}

Graph fibonacci_cube(int n) {
    if (n < 0 || n > 16) fail(ErrorCode::DimensionTooLarge, "fibonacci cube limited to n <= 16");
    std::vector<BitLabel> labels;
    for (uint64_t w = 0; w < (uint64_t{1} << n); ++w)
        if ((w & (w >> 1)) == 0) labels.emplace_back(n, w);
    return graph_from_sorted_labels(std::move(labels));
}

Graph lucas_cube(int n) {
    if (n < 0 || n > 16) fail(ErrorCode::DimensionTooLarge, "lucas cube limited to n <= 16");
    std::vector<BitLabel> labels;
    for (uint64_t w = 0; w < (uint64_t{1} << n); ++w) {
        bool ok = (w & (w >> 1)) == 0;
        // The circular constraint also forbids 1s in the first and last slot
        // together; for length 1 the single slot is its own neighbor.
        if (n >= 2 && (w & 1) && (w >> (n - 1) & 1)) ok = false;
        if (n == 1 && w == 1) ok = false;
        if (ok) labels.emplace_back(n, w);
    }
    return graph_from_sorted_labels(std::move(labels));
}

Graph simplex_graph(const Graph& h) {
    int hn = h.n_vertices();
    if (hn > 20) fail(ErrorCode::TooLarge, "simplex graph limited to 20 source vertices");
    std::vector<BitLabel> labels;
    // Depth-first clique enumeration; every clique is reached once through
    // its ascending vertex list.
    auto emit = [&](uint64_t bits) { labels.emplace_back(hn, bits); };
    std::function<void(uint64_t, const std::vector<int>&)> grow =
        [&](uint64_t bits, const std::vector<int>& cand) {
            emit(bits);
            for (size_t i = 0; i < cand.size(); ++i) {
                int u = cand[i];
                std::vector<int> next;
                for (size_t j = i + 1; j < cand.size(); ++j)
                    if (h.adjacent(u, cand[j])) next.push_back(cand[j]);
                grow(bits | (uint64_t{1} << u), next);
            }
        };
    std::vector<int> all(hn);
    for (int i = 0; i < hn; ++i) all[i] = i;
    grow(0, all);
    return graph_from_sorted_labels(std::move(labels));
}

Graph figure1_graph() {
    // Vertices 0..9 are A..J reading the drawing left to right: outer
    // 4-cycles A,B,C,D-side and H,I,J-side joined through the center
    // square E,D,F,G; the base is F.
    std::vector<std::pair<int, int>> edges = {
        {0, 1},  // A-B
        {1, 2},  // B-C
        {7, 8},  // H-I
        {8, 9},  // I-J
        {0, 4},  // A-E
        {4, 7},  // E-H
        {2, 5},  // C-F
        {5, 9},  // F-J
        {4, 3},  // E-D
        {3, 5},  // D-F
        {4, 6},  // E-G
        {6, 5},  // G-F
        {1, 3},  // B-D
        {6, 8},  // G-I
    };
    return Graph::build(10, std::move(edges), std::nullopt, 5);
}

Graph figure2_path() {
    return Graph::build(4, {{0, 1}, {1, 2}, {2, 3}}, std::nullopt, 0);
}

Graph figure2_q3_minus() {
    // Vertices 0..6 are E,F,G,H,I,J,K: the rim 6-cycle E-F-I-K-J-G plus
    // the hub H adjacent to E, I and J. Base = H.
    std::vector<std::pair<int, int>> edges = {
        {0, 1},  // E-F
        {1, 4},  // F-I
        {4, 6},  // I-K
        {6, 5},  // K-J
        {5, 2},  // J-G
        {2, 0},  // G-E
        {3, 4},  // H-I
        {3, 0},  // H-E
        {3, 5},  // H-J
    };
    return Graph::build(7, std::move(edges), std::nullopt, 3);
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) fail(ErrorCode::InvalidSpec, "grid needs positive dimensions");
    if (static_cast<int64_t>(rows) * cols > 4096) fail(ErrorCode::TooLarge, "grid too large");
    std::vector<std::pair<int, int>> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
        }
    return Graph::build(rows * cols, std::move(edges), std::nullopt, 0);
}

Graph cycle_graph(int len) {
    if (len < 3) fail(ErrorCode::InvalidSpec, "cycle needs at least 3 vertices");
    if (len > 4096) fail(ErrorCode::TooLarge, "cycle too large");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < len; ++i) edges.push_back({i, (i + 1) % len});
    return Graph::build(len, std::move(edges), std::nullopt, 0);
}

Graph random_downset(int n, uint64_t seed, double density) {
    if (n < 0 || n > 16) fail(ErrorCode::DimensionTooLarge, "random downset limited to n <= 16");
    if (density < 0.0 || density > 1.0) fail(ErrorCode::InvalidSpec, "density outside [0, 1]");
    std::mt19937_64 gen(seed);
    std::vector<BitLabel> picked;
    for (uint64_t w = 0; w < (uint64_t{1} << n); ++w)
        if (unit_draw(gen) < density) picked.emplace_back(n, w);
    picked.emplace_back(n, 0);  // keep the base even when nothing was drawn
    return graph_from_sorted_labels(downward_closure(n, picked));
}

Graph random_partial_cube_by_deletion(int n, uint64_t seed, int deletions) {
    if (n < 0 || n > 6) fail(ErrorCode::DimensionTooLarge, "deletion generator limited to n <= 6");
    if (deletions < 0) fail(ErrorCode::InvalidSpec, "negative deletion count");
    std::mt19937_64 gen(seed);
    std::vector<uint64_t> words;
    for (uint64_t w = 0; w < (uint64_t{1} << n); ++w) words.push_back(w);

    auto still_isometric = [n](const std::vector<uint64_t>& ws) {
        // BFS distances inside the remaining set must match Hamming
        // distances (connectivity failures show up as a mismatch).
        int k = static_cast<int>(ws.size());
        std::vector<int> idx_of(size_t{1} << n, -1);
        for (int i = 0; i < k; ++i) idx_of[ws[i]] = i;
        std::vector<int> dist(k);
        for (int s = 0; s < k; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            std::vector<int> queue{s};
            dist[s] = 0;
            for (size_t head = 0; head < queue.size(); ++head) {
                int u = queue[head];
                for (int b = 0; b < n; ++b) {
                    int v = idx_of[ws[u] ^ (uint64_t{1} << b)];
                    if (v != -1 && dist[v] == -1) {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            for (int t = 0; t < k; ++t)
                if (dist[t] != std::popcount(ws[s] ^ ws[t])) return false;
        }
        return true;
    };

    for (int t = 0; t < deletions && words.size() > 1; ++t) {
        size_t pick = static_cast<size_t>(gen() % words.size());
        std::vector<uint64_t> tentative = words;
        tentative.erase(tentative.begin() + pick);
        if (still_isometric(tentative)) words = std::move(tentative);
        // A rejected draw consumes its random number and counts as an
        // attempt, keeping the sequence reproducible.
    }
    std::vector<BitLabel> labels;
    for (uint64_t w : words) labels.emplace_back(n, w);
    sort_labels_lex(labels);
    return Graph::from_labels(std::move(labels), 0);
}

namespace {

void downset_rec(int n, uint64_t w, std::vector<uint8_t>& in, std::vector<BitLabel>& current,
                 const std::function<void(const std::vector<BitLabel>&)>& fn) {
    if (w == (uint64_t{1} << n)) {
        fn(current);
        return;
    }
    // Excluding w is always allowed.
    in[w] = 0;
    downset_rec(n, w + 1, in, current, fn);
    // Including w needs every one-bit-down word already in. Words are
    // decided in increasing numeric order, so those are settled.
    bool can = true;
    for (uint64_t rest = w; rest; rest &= rest - 1)
        if (!in[w & ~(rest & (~rest + 1))]) {
            can = false;
            break;
        }
    if (can) {
        in[w] = 1;
        current.emplace_back(n, w);
        downset_rec(n, w + 1, in, current, fn);
        current.pop_back();
        in[w] = 0;
    }
}

}  // namespace

void enumerate_all_downsets(int n, const std::function<void(const std::vector<BitLabel>&)>& fn) {
    if (n < 0 || n > 5) fail(ErrorCode::TooLarge, "exhaustive downsets limited to n <= 5");
    std::vector<uint8_t> in(size_t{1} << n, 0);
    std::vector<BitLabel> current;
    // The zero word is in every non-empty downward-closed set.
    in[0] = 1;
    current.emplace_back(n, 0);
    downset_rec(n, 1, in, current, fn);
}

int64_t count_all_downsets(int n) {
    int64_t c = 0;
    enumerate_all_downsets(n, [&](const std::vector<BitLabel>&) { ++c; });
    return c;
}

}  // namespace daisy
