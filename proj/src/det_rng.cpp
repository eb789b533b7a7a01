#include "tn/det_rng.hpp"

#include <algorithm>

#include "tn/errors.hpp"

namespace tn {

std::vector<uint32_t> sample_distinct(SplitMix64& rng, std::vector<uint32_t> pool,
                                      uint32_t k) {
    if (k > pool.size())
        throw validation_error("cannot sample " + std::to_string(k) + " distinct values from " +
                               std::to_string(pool.size()));
    for (uint32_t i = 0; i < k; ++i) {
        const uint64_t j = i + bounded(rng, pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace tn
