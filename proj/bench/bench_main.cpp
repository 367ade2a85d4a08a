// Timings of the parallel kernels against their serial references.
// Every pair is also compared for equal output, so a run doubles as a
// consistency check. Use --quick for smaller inputs.

#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "daisy/census.hpp"
#include "daisy/families.hpp"
#include "daisy/gplus.hpp"
#include "daisy/theta.hpp"

#if defined(_OPENMP)
#include <omp.h>
#else
#include <chrono>
#endif

namespace {

double now_s() {
#if defined(_OPENMP)
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

int threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void report(const char* kernel, const char* input, double serial_s, double parallel_s, bool equal) {
    std::printf("%-18s %-22s %10.1f %10.1f %7.2fx   %s\n", kernel, input, serial_s * 1e3,
                parallel_s * 1e3, serial_s / parallel_s, equal ? "match" : "MISMATCH");
}

template <class F>
double timed(F&& f) {
    double t0 = now_s();
    f();
    return now_s() - t0;
}

daisy::Graph random_dense_graph(int n, double p, uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<double>(gen() >> 11) * 0x1.0p-53 < p) edges.push_back({i, j});
    return daisy::Graph::build(n, std::move(edges));
}

daisy::CanonicalEmbedding embedding_of(const daisy::Graph& g) {
    // Generator output is trusted here; skip the quadratic isometry
    // validation that relabel_from_labels would do.
    daisy::CanonicalEmbedding emb;
    emb.base = g.base().value_or(0);
    emb.dim = g.label_width();
    emb.labels = g.labels();
    return emb;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

    std::printf("threads: %d\n", threads());
    std::printf("%-18s %-22s %10s %10s %9s\n", "kernel", "input", "serial ms", "parallel", "speedup");

    {
        daisy::Graph g = daisy::hypercube(quick ? 10 : 12);
        daisy::DistanceMatrix a, b;
        double ts = timed([&] { a = daisy::all_pairs_distances_serial(g); });
        double tp = timed([&] { b = daisy::all_pairs_distances(g); });
        report("distances", quick ? "Q_10" : "Q_12", ts, tp, a == b);
    }
    {
        daisy::Graph g = daisy::fibonacci_cube(quick ? 14 : 16);
        daisy::DistanceMatrix a, b;
        double ts = timed([&] { a = daisy::all_pairs_distances_serial(g); });
        double tp = timed([&] { b = daisy::all_pairs_distances(g); });
        report("distances", quick ? "Fibonacci_14" : "Fibonacci_16", ts, tp, a == b);
    }
    {
        daisy::Graph g = daisy::hypercube(quick ? 8 : 10);
        daisy::DistanceMatrix dm = daisy::all_pairs_distances(g);
        daisy::ThetaPartition a, b;
        double ts = timed([&] { a = daisy::theta_partition_serial(g, dm, 0); });
        double tp = timed([&] { b = daisy::theta_partition(g, dm, 0); });
        report("theta-partition", quick ? "Q_8" : "Q_10", ts, tp, a.class_of == b.class_of);
    }
    {
        daisy::Graph g = daisy::hypercube(quick ? 12 : 14);
        daisy::CanonicalEmbedding emb = embedding_of(g);
        daisy::CubeCensus a, b;
        double ts = timed([&] { a = daisy::cube_census_serial(emb); });
        double tp = timed([&] { b = daisy::cube_census(emb); });
        report("cube-census", quick ? "Q_12" : "Q_14", ts, tp, a == b);
    }
    {
        daisy::Graph g = daisy::fibonacci_cube(quick ? 14 : 16);
        daisy::CanonicalEmbedding emb = embedding_of(g);
        daisy::CubeCensus a, b;
        double ts = timed([&] { a = daisy::cube_census_serial(emb); });
        double tp = timed([&] { b = daisy::cube_census(emb); });
        report("cube-census", quick ? "Fibonacci_14" : "Fibonacci_16", ts, tp, a == b);
    }
    {
        daisy::Graph g = random_dense_graph(quick ? 42 : 50, 0.8, 7);
        daisy::Poly1 a, b;
        double ts = timed([&] { a = daisy::clique_census_serial(g); });
        double tp = timed([&] { b = daisy::clique_census(g); });
        report("clique-census", quick ? "G(42, .8)" : "G(50, .8)", ts, tp, a == b);
    }
    {
        daisy::Graph g = daisy::hypercube(quick ? 5 : 6);
        daisy::DistanceMatrix dm = daisy::all_pairs_distances(g);
        std::vector<daisy::IsoCycle> a, b;
        double ts = timed([&] { a = daisy::isometric_cycles_serial(g, dm); });
        double tp = timed([&] { b = daisy::isometric_cycles(g, dm); });
        report("isometric-cycles", quick ? "Q_5" : "Q_6", ts, tp, a == b);
    }
    return 0;
}
