#include "tn/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>

#include <omp.h>

#include "tn/csv.hpp"
#include "tn/det_rng.hpp"
#include "tn/errors.hpp"

namespace tn {

const char* to_string(Measure m) {
    switch (m) {
        case Measure::degree: return "degree";
        case Measure::closeness: return "closeness";
        case Measure::betweenness: return "betweenness";
        case Measure::eigenvector: return "eigenvector";
        case Measure::load: return "load";
    }
    return "?";
}

std::optional<Measure> measure_from_string(std::string_view name) {
    if (name == "degree") return Measure::degree;
    if (name == "closeness") return Measure::closeness;
    if (name == "betweenness") return Measure::betweenness;
    if (name == "eigenvector") return Measure::eigenvector;
    if (name == "load") return Measure::load;
    return std::nullopt;
}

namespace {

// Per-node BFS state packed into one struct so the random accesses of the
// edge scans touch a single cache line per endpoint. dist stays -1 between
// uses; each pass resets only the entries it touched.
struct NodeState {
    double sigma;  // shortest-path count (Brandes)
    double acc;    // dependency / packet accumulator
    int32_t dist;
};

struct SourceScratch {
    std::vector<NodeState> node;
    std::vector<uint32_t> order; // BFS visit order

    explicit SourceScratch(uint32_t n) : node(n, NodeState{0.0, 0.0, -1}) {
        order.reserve(n);
    }
};

// BFS from s filling dist/order; sigma counted only when count_paths.
void bfs_from(const CollabGraph& g, uint32_t s, SourceScratch& w, bool count_paths) {
    NodeState* node = w.node.data();
    w.order.clear();
    node[s].dist = 0;
    if (count_paths) node[s].sigma = 1.0;
    w.order.push_back(s);
    for (size_t head = 0; head < w.order.size(); ++head) {
        const uint32_t v = w.order[head];
        const int32_t dv = node[v].dist;
        const double sv = node[v].sigma;
        for (uint32_t u : g.neighbors(v)) {
            if (node[u].dist < 0) {
                node[u].dist = dv + 1;
                w.order.push_back(u);
            }
            if (count_paths && node[u].dist == dv + 1) node[u].sigma += sv;
        }
    }
}

void reset_touched(SourceScratch& w, bool count_paths) {
    for (uint32_t v : w.order) {
        w.node[v].dist = -1;
        if (count_paths) w.node[v].sigma = 0.0;
    }
}

// Brandes dependency pass for one source; adds ordered-pair dependencies of
// all non-source nodes into `partial`. Predecessors are recovered by
// rescanning adjacency instead of storing predecessor lists.
void brandes_source(const CollabGraph& g, uint32_t s, SourceScratch& w,
                    std::vector<double>& partial) {
    bfs_from(g, s, w, /*count_paths=*/true);
    NodeState* node = w.node.data();
    for (uint32_t v : w.order) node[v].acc = 0.0;
    for (size_t i = w.order.size(); i-- > 0;) {
        const uint32_t v = w.order[i];
        const int32_t dv = node[v].dist;
        const double coeff = (1.0 + node[v].acc) / node[v].sigma;
        for (uint32_t u : g.neighbors(v)) {
            if (node[u].dist == dv - 1) node[u].acc += node[u].sigma * coeff;
        }
        if (v != s) partial[v] += node[v].acc;
    }
    reset_touched(w, true);
}

// One source of the Newman/Goh load accumulation: every reachable node's
// unit packet travels toward s, splitting evenly among neighbors one hop
// closer; the through-traffic (everything a node received) is its load.
void load_source(const CollabGraph& g, uint32_t s, SourceScratch& w,
                 std::vector<double>& partial) {
    bfs_from(g, s, w, /*count_paths=*/false);
    NodeState* node = w.node.data();
    for (uint32_t v : w.order) node[v].acc = 1.0;
    for (size_t i = w.order.size(); i-- > 0;) {
        const uint32_t v = w.order[i];
        if (v == s) continue;
        const int32_t dv = node[v].dist;
        uint32_t n_pred = 0;
        for (uint32_t u : g.neighbors(v))
            if (node[u].dist == dv - 1) ++n_pred;
        const double share = node[v].acc / n_pred;
        for (uint32_t u : g.neighbors(v))
            if (node[u].dist == dv - 1) node[u].acc += share;
        partial[v] += node[v].acc - 1.0;
    }
    reset_touched(w, false);
}

// Runs `per_source` for every listed source and sums the per-source partial
// arrays. Sources are grouped into a fixed number of contiguous blocks that
// are processed in parallel but merged sequentially in block order, so the
// floating-point sum is identical for any thread count.
template <class PerSource>
std::vector<double> accumulate_sources(const CollabGraph& g,
                                       std::span<const uint32_t> sources,
                                       PerSource per_source) {
    const uint32_t n = g.num_nodes();
    const size_t n_sources = sources.size();
    const size_t n_blocks = std::min<size_t>(n_sources, 64);
    std::vector<std::vector<double>> partial(n_blocks);

    #pragma omp parallel for schedule(dynamic)
    for (int64_t b = 0; b < static_cast<int64_t>(n_blocks); ++b) {
        const size_t lo = n_sources * b / n_blocks;
        const size_t hi = n_sources * (b + 1) / n_blocks;
        partial[b].assign(n, 0.0);
        SourceScratch scratch(n);
        for (size_t i = lo; i < hi; ++i) per_source(sources[i], scratch, partial[b]);
    }

    std::vector<double> total(n, 0.0);
    for (const auto& p : partial)
        for (uint32_t v = 0; v < n; ++v) total[v] += p[v];
    return total;
}

} // namespace

CentralityScores degree_centrality(const CollabGraph& g) {
    const uint32_t n = g.num_nodes();
    CentralityScores s;
    s.measure = Measure::degree;
    s.values.resize(n);
    s.normalized.resize(n);
    const double denom = n > 1 ? 1.0 / (n - 1.0) : 0.0;
    for (uint32_t v = 0; v < n; ++v) {
        s.values[v] = g.degree(v);
        s.normalized[v] = s.values[v] * denom;
    }
    return s;
}

CentralityScores closeness_centrality(const CollabGraph& g) {
    const uint32_t n = g.num_nodes();
    CentralityScores s;
    s.measure = Measure::closeness;
    s.values.assign(n, 0.0);

    const int n_threads = omp_get_max_threads();
    std::vector<std::unique_ptr<SourceScratch>> scratch(n_threads);

    #pragma omp parallel for schedule(dynamic, 64)
    for (int64_t v = 0; v < static_cast<int64_t>(n); ++v) {
        auto& w = scratch[omp_get_thread_num()];
        if (!w) w = std::make_unique<SourceScratch>(n);
        bfs_from(g, static_cast<uint32_t>(v), *w, false);
        uint64_t dist_sum = 0;
        for (uint32_t u : w->order) dist_sum += static_cast<uint64_t>(w->node[u].dist);
        const uint64_t r = w->order.size(); // reachable incl. v
        if (r > 1) {
            const double within = static_cast<double>(r - 1) / static_cast<double>(dist_sum);
            s.values[v] = within * (static_cast<double>(r - 1) / static_cast<double>(n - 1));
        }
        reset_touched(*w, false);
    }
    s.normalized = s.values; // the (|V|-1)/sum form is already scale-free
    return s;
}

CentralityScores betweenness_centrality(const CollabGraph& g,
                                        const BetweennessOptions& opts) {
    const uint32_t n = g.num_nodes();
    CentralityScores s;
    s.measure = Measure::betweenness;

    uint32_t samples = opts.samples;
    bool exact = samples == 0;
    if (!exact && samples >= n) {
        exact = true; // more pivots than sources: clamp to the exact sweep
        s.params["clamped_to_exact"] = "true";
    }

    std::vector<uint32_t> sources;
    if (exact) {
        sources.resize(n);
        std::iota(sources.begin(), sources.end(), 0u);
        s.params["mode"] = "exact";
    } else {
        std::vector<uint32_t> all(n);
        std::iota(all.begin(), all.end(), 0u);
        SplitMix64 rng(mix_seed(opts.rng_seed, 0x42455457454Eull));
        sources = sample_distinct(rng, std::move(all), samples);
        s.params["mode"] = "sampled";
        s.params["samples"] = std::to_string(samples);
        s.params["rng_seed"] = std::to_string(opts.rng_seed);
    }

    s.values = accumulate_sources(g, sources, [&g](uint32_t src, SourceScratch& w,
                                                   std::vector<double>& partial) {
        brandes_source(g, src, w, partial);
    });

    // Each unordered pair was seen from both endpoints in the exact sweep.
    const double scale = exact ? 0.5 : 0.5 * static_cast<double>(n) / sources.size();
    for (auto& v : s.values) v *= scale;

    s.normalized.resize(n);
    const double norm = n > 2 ? 2.0 / (static_cast<double>(n - 1) * (n - 2)) : 0.0;
    for (uint32_t v = 0; v < n; ++v) s.normalized[v] = s.values[v] * norm;
    return s;
}

CentralityScores load_centrality(const CollabGraph& g) {
    const uint32_t n = g.num_nodes();
    CentralityScores s;
    s.measure = Measure::load;

    std::vector<uint32_t> sources(n);
    std::iota(sources.begin(), sources.end(), 0u);
    s.values = accumulate_sources(g, sources, [&g](uint32_t src, SourceScratch& w,
                                                   std::vector<double>& partial) {
        load_source(g, src, w, partial);
    });

    s.normalized.resize(n);
    const double norm = n > 2 ? 1.0 / (static_cast<double>(n - 1) * (n - 2)) : 0.0;
    for (uint32_t v = 0; v < n; ++v) s.normalized[v] = s.values[v] * norm;
    return s;
}

CentralityScores eigenvector_centrality(const CollabGraph& g,
                                        const EigenvectorOptions& opts) {
    const uint32_t n = g.num_nodes();
    if (n == 0) throw validation_error("eigenvector centrality needs a non-empty graph");

    const Components comps = connected_components(g);
    uint32_t largest = 0;
    for (uint32_t c = 1; c < comps.sizes.size(); ++c)
        if (comps.sizes[c] > comps.sizes[largest]) largest = c;

    std::vector<uint32_t> nodes;
    nodes.reserve(comps.sizes[largest]);
    for (uint32_t v = 0; v < n; ++v)
        if (comps.id[v] == largest) nodes.push_back(v);
    const size_t r = nodes.size();

    std::vector<double> x(n, 0.0), y(n, 0.0);
    const double init = 1.0 / std::sqrt(static_cast<double>(r));
    for (uint32_t v : nodes) x[v] = init;

    double residual = std::numeric_limits<double>::infinity();
    int iters = 0;
    for (; iters < opts.max_iters; ++iters) {
        // Damped step (A + I)x keeps bipartite components from oscillating.
        #pragma omp parallel for schedule(static)
        for (int64_t i = 0; i < static_cast<int64_t>(r); ++i) {
            const uint32_t v = nodes[i];
            double acc = x[v];
            for (uint32_t u : g.neighbors(v)) acc += x[u];
            y[v] = acc;
        }
        // Norm and convergence bookkeeping stay serial so results are
        // bit-identical for any thread count.
        double norm_sq = 0.0;
        for (uint32_t v : nodes) norm_sq += y[v] * y[v];
        const double inv_norm = 1.0 / std::sqrt(norm_sq);
        double max_diff = 0.0;
        for (uint32_t v : nodes) {
            const double nv = y[v] * inv_norm;
            max_diff = std::max(max_diff, std::abs(nv - x[v]));
            x[v] = nv;
        }
        if (max_diff < opts.tolerance) break;
    }

    // lambda via the Rayleigh quotient of the adjacency operator itself.
    double lambda = 0.0;
    for (uint32_t v : nodes) {
        double av = 0.0;
        for (uint32_t u : g.neighbors(v)) av += x[u];
        y[v] = av;
        lambda += x[v] * av;
    }
    double res_sq = 0.0;
    for (uint32_t v : nodes) {
        const double d = y[v] - lambda * x[v];
        res_sq += d * d;
    }
    residual = std::sqrt(res_sq);
    if (iters >= opts.max_iters)
        throw numeric_error("eigenvector centrality did not converge after " +
                                std::to_string(opts.max_iters) + " iterations",
                            residual);

    CentralityScores s;
    s.measure = Measure::eigenvector;
    s.values = std::move(x);
    s.normalized = s.values;
    s.params["tolerance"] = csv::fmt_real(opts.tolerance);
    s.params["max_iters"] = std::to_string(opts.max_iters);
    s.params["iterations"] = std::to_string(iters + 1);
    s.params["lambda"] = csv::fmt_real(lambda);
    s.params["residual"] = csv::fmt_real(residual);
    return s;
}

std::vector<TnBucketLn> centrality_by_tn(const CentralityScores& scores,
                                         const TnResult& tn) {
    if (scores.values.size() != tn.tn.size())
        throw validation_error("centrality and TN cover different node sets");

    std::map<int32_t, std::vector<double>> ln_by_bucket;
    std::map<int32_t, uint64_t> zero_by_bucket;
    for (uint32_t v = 0; v < scores.values.size(); ++v) {
        if (!tn.reachable[v]) continue;
        const int32_t b = tn.tn[v];
        if (scores.values[v] > 0.0)
            ln_by_bucket[b].push_back(std::log(scores.values[v]));
        else
            ++zero_by_bucket[b];
        ln_by_bucket[b]; // ensure bucket exists even if all zeros
    }

    std::vector<TnBucketLn> out;
    for (auto& [bucket, lns] : ln_by_bucket) {
        TnBucketLn row;
        row.tn = bucket;
        row.n_positive = lns.size();
        auto zit = zero_by_bucket.find(bucket);
        row.n_zero = zit == zero_by_bucket.end() ? 0 : zit->second;
        if (!lns.empty()) {
            row.mean_ln = std::accumulate(lns.begin(), lns.end(), 0.0) /
                          static_cast<double>(lns.size());
            std::sort(lns.begin(), lns.end());
            const size_t m = lns.size();
            row.median_ln = m % 2 ? lns[m / 2] : 0.5 * (lns[m / 2 - 1] + lns[m / 2]);
        }
        out.push_back(row);
    }
    return out;
}

} // namespace tn
