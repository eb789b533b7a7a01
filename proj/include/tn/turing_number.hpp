#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "tn/graph.hpp"

namespace tn {

// Hop distance from every node to the nearest seed. Unreachable nodes carry
// an explicit flag instead of a sentinel distance and never appear in the
// histogram.
struct TnResult {
    std::vector<int32_t> tn;        // valid only where reachable
    std::vector<uint8_t> reachable;
    std::vector<uint32_t> seed_set; // sorted, deduplicated
    std::map<int32_t, uint64_t> histogram;
    uint64_t n_unreachable = 0;

    uint64_t n_reachable() const { return tn.size() - n_unreachable; }

    bool operator==(const TnResult&) const = default;
};

// Single multi-source BFS from the seed set.
TnResult compute_tn(const CollabGraph& g, std::span<const uint32_t> seeds);

struct TnDistribution {
    std::map<int32_t, uint64_t> histogram;
    int32_t modal_tn = 0;      // smallest value among tied modes
    double share_2_to_5 = 0.0; // fraction of reachable nodes with tn in [2,5]
};

TnDistribution tn_distribution(const TnResult& result);

struct NullBucketStat {
    double mean = 0.0;
    double stddev = 0.0; // population std over trials, absent buckets count 0

    bool operator==(const NullBucketStat&) const = default;
};

struct NullModelResult {
    uint32_t k = 0;
    uint32_t trials = 0;
    uint64_t rng_seed = 0;
    std::vector<std::map<int32_t, uint64_t>> trial_histograms;
    std::vector<uint64_t> trial_unreachable;
    std::map<int32_t, NullBucketStat> bucket_stats;

    bool operator==(const NullModelResult&) const = default;
};

// Per trial, draws k distinct nodes uniformly (optionally excluding the real
// seed set), reruns compute_tn and aggregates. Trials run concurrently, each
// on a sub-generator derived from rng_seed and the trial index, and results
// are merged in trial order: output is bit-identical for any thread count.
NullModelResult null_model(const CollabGraph& g, uint32_t k, uint32_t trials,
                           uint64_t rng_seed,
                           std::span<const uint32_t> exclude = {});

} // namespace tn
