#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tn/graph.hpp"
#include "tn/turing_number.hpp"

namespace tn {

enum class Measure { degree, closeness, betweenness, eigenvector, load };

const char* to_string(Measure m);
std::optional<Measure> measure_from_string(std::string_view name);

struct CentralityScores {
    Measure measure = Measure::degree;
    std::vector<double> values;     // raw, per the standard formulas
    std::vector<double> normalized; // scale-adjusted variant
    std::map<std::string, std::string> params; // echoed to the provenance sidecar
};

// values[v] = deg(v); normalized = deg(v)/(n-1).
CentralityScores degree_centrality(const CollabGraph& g);

// Connected graph: (|V|-1)/sum of distances. Disconnected: computed over the
// reachable set and scaled by (r-1)/(n-1); isolated nodes score 0.
CentralityScores closeness_centrality(const CollabGraph& g);

struct BetweennessOptions {
    uint32_t samples = 0; // 0 = exact; otherwise pivot count
    uint64_t rng_seed = 0;
};

// Brandes dependency accumulation, one BFS per source, endpoints excluded,
// each unordered pair counted once. Sampled mode draws pivot sources and
// scales by n/samples. Sources run concurrently; per-source contributions
// are reduced in fixed block order so sums are bit-deterministic for any
// thread count.
CentralityScores betweenness_centrality(const CollabGraph& g,
                                        const BetweennessOptions& opts = {});

struct EigenvectorOptions {
    double tolerance = 1e-10;
    int max_iters = 1000;
};

// Power iteration on the largest component with a half-step damping
// (x <- Ax + x) so bipartite components cannot oscillate. Result has unit
// Euclidean norm over that component; other nodes are 0. Throws
// numeric_error carrying the last residual if max_iters is exhausted.
CentralityScores eigenvector_centrality(const CollabGraph& g,
                                        const EigenvectorOptions& opts = {});

// Newman/Goh load: a unit packet per ordered (s,t) pair splits evenly among
// shortest-path successor edges at every hop; a node's score is its total
// through-load, endpoints excluded. Normalized by (n-1)(n-2).
CentralityScores load_centrality(const CollabGraph& g);

struct TnBucketLn {
    int32_t tn = 0;
    uint64_t n_positive = 0; // nodes whose value was log-transformed
    uint64_t n_zero = 0;     // zero-valued nodes, counted but never ln'd
    double mean_ln = 0.0;    // over positive values; meaningless if n_positive == 0
    double median_ln = 0.0;
};

// Per-TN-bucket aggregation of ln(value) over reachable nodes. Buckets with
// no reachable nodes are omitted.
std::vector<TnBucketLn> centrality_by_tn(const CentralityScores& scores,
                                         const TnResult& tn);

} // namespace tn
