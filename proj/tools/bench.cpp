// Benchmark comparing the serial reference implementations against the
// OpenMP kernels, then timing the kernels alone at larger sizes.
//
// Usage: tn_bench [--small-nodes N] [--nodes N] [--edges M] [--threads T]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include <omp.h>

#include "tn/centrality.hpp"
#include "tn/det_rng.hpp"
#include "tn/turing_number.hpp"
#include "tn_reference.hpp"

using namespace tn;
using Clock = std::chrono::steady_clock;

namespace {

template <class Fn>
double time_s(Fn fn) {
    const auto start = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void row(const char* label, double serial, double parallel) {
    if (serial > 0)
        std::printf("  %-34s %10.3fs %10.3fs %8.2fx\n", label, serial, parallel,
                    serial / parallel);
    else
        std::printf("  %-34s %10s %10.3fs\n", label, "-", parallel);
}

} // namespace

int main(int argc, char** argv) {
    uint32_t small_nodes = 300;
    uint32_t nodes = 50000;
    uint64_t edges = 300000;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (!std::strcmp(argv[i], "--small-nodes")) small_nodes = std::stoul(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--nodes")) nodes = std::stoul(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--edges")) edges = std::stoull(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--threads")) omp_set_num_threads(std::stoi(argv[i + 1]));
    }

    std::printf("threads: %d\n", omp_get_max_threads());

    // -- small instance: reference implementations vs the production kernels
    {
        const auto g = ref::random_connected_graph(small_nodes, small_nodes * 2, 7);
        std::printf("reference vs kernels, n=%u, m=%llu\n", g.num_nodes(),
                    static_cast<unsigned long long>(g.num_edges()));

        std::vector<uint32_t> seeds{0, 1, 2, 3, 4};
        row("multi-source BFS",
            time_s([&] { (void)ref::min_over_seeds_bfs(g, seeds); }),
            time_s([&] { (void)compute_tn(g, seeds); }));
        row("betweenness",
            time_s([&] { (void)ref::betweenness_bruteforce(g); }),
            time_s([&] { (void)betweenness_centrality(g); }));
        row("load",
            time_s([&] { (void)ref::load_flow_simulation(g); }),
            time_s([&] { (void)load_centrality(g); }));
        row("closeness",
            time_s([&] { (void)ref::closeness_bfs(g); }),
            time_s([&] { (void)closeness_centrality(g); }));
    }

    // -- large instance: kernels only
    {
        const uint32_t per_node = static_cast<uint32_t>(edges / (nodes ? nodes : 1));
        const auto g = ref::preferential_attachment_graph(nodes, per_node ? per_node : 1, 99);
        std::printf("kernels at scale, n=%u, m=%llu\n", g.num_nodes(),
                    static_cast<unsigned long long>(g.num_edges()));

        SplitMix64 rng(123);
        std::vector<uint32_t> pool(g.num_nodes());
        for (uint32_t v = 0; v < g.num_nodes(); ++v) pool[v] = v;
        const auto seeds = sample_distinct(rng, pool, 65);

        row("multi-source BFS", 0, time_s([&] { (void)compute_tn(g, seeds); }));
        row("null model (20 trials)", 0,
            time_s([&] { (void)null_model(g, 65, 20, 42); }));
        row("sampled betweenness (2000 pivots)", 0, time_s([&] {
                (void)betweenness_centrality(g, {.samples = 2000, .rng_seed = 7});
            }));
        row("degree", 0, time_s([&] { (void)degree_centrality(g); }));
        row("eigenvector", 0, time_s([&] { (void)eigenvector_centrality(g); }));
    }
    return 0;
}
