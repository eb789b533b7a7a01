#include "tn/turing_number.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tn/det_rng.hpp"
#include "tn/errors.hpp"

namespace tn {

TnResult compute_tn(const CollabGraph& g, std::span<const uint32_t> seeds) {
    if (seeds.empty()) throw validation_error("seed set is empty");
    const uint32_t n = g.num_nodes();

    TnResult res;
    res.seed_set.assign(seeds.begin(), seeds.end());
    std::sort(res.seed_set.begin(), res.seed_set.end());
    res.seed_set.erase(std::unique(res.seed_set.begin(), res.seed_set.end()),
                       res.seed_set.end());
    for (uint32_t s : res.seed_set)
        if (s >= n) throw validation_error("seed id " + std::to_string(s) + " out of range");

    res.tn.assign(n, -1);
    res.reachable.assign(n, 0);

    std::vector<uint32_t> frontier, next;
    frontier.reserve(res.seed_set.size());
    for (uint32_t s : res.seed_set) {
        res.tn[s] = 0;
        res.reachable[s] = 1;
        frontier.push_back(s);
    }
    int32_t depth = 0;
    uint64_t n_reached = frontier.size();
    res.histogram[0] = frontier.size();
    while (!frontier.empty()) {
        ++depth;
        next.clear();
        for (uint32_t v : frontier) {
            for (uint32_t w : g.neighbors(v)) {
                if (!res.reachable[w]) {
                    res.reachable[w] = 1;
                    res.tn[w] = depth;
                    next.push_back(w);
                }
            }
        }
        if (!next.empty()) res.histogram[depth] = next.size();
        n_reached += next.size();
        frontier.swap(next);
    }
    res.n_unreachable = n - n_reached;
    return res;
}

TnDistribution tn_distribution(const TnResult& result) {
    TnDistribution d;
    d.histogram = result.histogram;
    uint64_t best = 0;
    uint64_t in_band = 0;
    uint64_t total = 0;
    for (const auto& [tn, count] : d.histogram) {
        total += count;
        if (count > best) {
            best = count;
            d.modal_tn = tn;
        }
        if (tn >= 2 && tn <= 5) in_band += count;
    }
    d.share_2_to_5 = total ? static_cast<double>(in_band) / static_cast<double>(total) : 0.0;
    return d;
}

NullModelResult null_model(const CollabGraph& g, uint32_t k, uint32_t trials,
                           uint64_t rng_seed, std::span<const uint32_t> exclude) {
    const uint32_t n = g.num_nodes();
    if (trials < 1) throw validation_error("null model needs at least one trial");

    std::vector<uint32_t> pool;
    if (exclude.empty()) {
        pool.resize(n);
        std::iota(pool.begin(), pool.end(), 0u);
    } else {
        std::vector<uint8_t> banned(n, 0);
        for (uint32_t s : exclude) {
            if (s >= n) throw validation_error("excluded id " + std::to_string(s) + " out of range");
            banned[s] = 1;
        }
        pool.reserve(n);
        for (uint32_t v = 0; v < n; ++v)
            if (!banned[v]) pool.push_back(v);
    }
    if (k < 1 || k > pool.size())
        throw validation_error("null model k=" + std::to_string(k) + " outside [1, " +
                               std::to_string(pool.size()) + "]");

    NullModelResult res;
    res.k = k;
    res.trials = trials;
    res.rng_seed = rng_seed;
    res.trial_histograms.resize(trials);
    res.trial_unreachable.resize(trials);

    // Trials are independent; each one draws from its own sub-generator and
    // writes its own slot, so the merged result does not depend on scheduling.
    #pragma omp parallel for schedule(dynamic)
    for (int64_t t = 0; t < static_cast<int64_t>(trials); ++t) {
        SplitMix64 rng(mix_seed(rng_seed, static_cast<uint64_t>(t)));
        const auto seeds = sample_distinct(rng, pool, k);
        const TnResult tn = compute_tn(g, seeds);
        res.trial_histograms[t] = tn.histogram;
        res.trial_unreachable[t] = tn.n_unreachable;
    }

    for (const auto& hist : res.trial_histograms)
        for (const auto& [tn_value, count] : hist)
            res.bucket_stats[tn_value]; // make every observed bucket present

    for (auto& [tn_value, stat] : res.bucket_stats) {
        double sum = 0.0, sum_sq = 0.0;
        for (const auto& hist : res.trial_histograms) {
            auto it = hist.find(tn_value);
            const double c = it == hist.end() ? 0.0 : static_cast<double>(it->second);
            sum += c;
            sum_sq += c * c;
        }
        const double mean = sum / trials;
        stat.mean = mean;
        stat.stddev = std::sqrt(std::max(0.0, sum_sq / trials - mean * mean));
    }
    return res;
}

} // namespace tn
