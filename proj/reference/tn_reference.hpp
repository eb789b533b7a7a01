#pragma once

// Plain serial reference implementations, deliberately written along different
// algorithmic routes than the library kernels (path enumeration instead of
// dependency accumulation, per-pair flow simulation instead of per-source
// passes). Tests and the benchmark compare the two; nothing here is linked
// into the CLI.

#include <cstdint>
#include <span>
#include <vector>

#include "tn/graph.hpp"

namespace tn::ref {

std::vector<int32_t> single_source_bfs(const CollabGraph& g, uint32_t s);

// Elementwise min over per-seed BFS runs.
std::vector<int32_t> min_over_seeds_bfs(const CollabGraph& g,
                                        std::span<const uint32_t> seeds);

// sigma-counting over all-pairs BFS: B(v) = sum over s<t of
// sigma_st(v)/sigma_st with sigma_st(v) = sigma_sv * sigma_vt when v lies on
// a shortest s-t path.
std::vector<double> betweenness_bruteforce(const CollabGraph& g);

// Literal even-split packet simulation per ordered (s,t) pair, routed by
// distance-to-target. absorbed_per_source[s] returns the total packet mass
// delivered over all targets of s (conservation check).
std::vector<double> load_flow_simulation(const CollabGraph& g,
                                         std::vector<double>* absorbed_per_source = nullptr);

std::vector<double> closeness_bfs(const CollabGraph& g);

// O(n^2) concordant/discordant pair counting.
double kendall_tau_b_quadratic(std::span<const double> x, std::span<const double> y);

// Two-pass covariance / (sigma_x sigma_y).
double pearson_two_pass(std::span<const double> x, std::span<const double> y);

// Average ranks by explicit position bookkeeping, then the two-pass Pearson.
double spearman_rank_oracle(std::span<const double> x, std::span<const double> y);

// Tries every candidate h from n down to 0.
int h_index_exhaustive(std::span<const long long> citations);

// Deterministic generators for property tests and the benchmark.
CollabGraph random_graph(uint32_t n, uint64_t m_target, uint64_t seed);
CollabGraph random_connected_graph(uint32_t n, uint64_t extra_edges, uint64_t seed);
CollabGraph cycle_graph(uint32_t n);
CollabGraph complete_graph(uint32_t n);
CollabGraph path_graph(uint32_t n);
CollabGraph star_graph(uint32_t leaves);
// Preferential-attachment graph with m edges per new node (hubs emerge).
CollabGraph preferential_attachment_graph(uint32_t n, uint32_t edges_per_node, uint64_t seed);

// A few large random clusters joined in a chain through short bridge paths;
// the bridge nodes carry nearly all cross-cluster shortest paths.
CollabGraph clustered_bridge_graph(uint32_t n_clusters, uint32_t cluster_size,
                                   uint32_t bridge_len, uint32_t intra_degree,
                                   uint64_t seed);

} // namespace tn::ref
