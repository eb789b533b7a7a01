#include "tn_reference.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "tn/det_rng.hpp"

namespace tn::ref {

std::vector<int32_t> single_source_bfs(const CollabGraph& g, uint32_t s) {
    std::vector<int32_t> dist(g.num_nodes(), -1);
    std::deque<uint32_t> queue;
    dist[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
        const uint32_t v = queue.front();
        queue.pop_front();
        for (uint32_t w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int32_t> min_over_seeds_bfs(const CollabGraph& g,
                                        std::span<const uint32_t> seeds) {
    std::vector<int32_t> best(g.num_nodes(), -1);
    for (uint32_t s : seeds) {
        const auto dist = single_source_bfs(g, s);
        for (uint32_t v = 0; v < g.num_nodes(); ++v) {
            if (dist[v] < 0) continue;
            if (best[v] < 0 || dist[v] < best[v]) best[v] = dist[v];
        }
    }
    return best;
}

std::vector<double> betweenness_bruteforce(const CollabGraph& g) {
    const uint32_t n = g.num_nodes();
    // All-pairs distances and shortest-path counts.
    std::vector<std::vector<int32_t>> dist(n);
    std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
    for (uint32_t s = 0; s < n; ++s) {
        dist[s] = single_source_bfs(g, s);
        sigma[s][s] = 1.0;
        // Count paths in order of increasing distance.
        std::vector<uint32_t> by_dist(n);
        std::iota(by_dist.begin(), by_dist.end(), 0u);
        std::sort(by_dist.begin(), by_dist.end(), [&](uint32_t a, uint32_t b) {
            return dist[s][a] < dist[s][b];
        });
        for (uint32_t v : by_dist) {
            if (dist[s][v] <= 0) continue;
            for (uint32_t u : g.neighbors(v))
                if (dist[s][u] == dist[s][v] - 1) sigma[s][v] += sigma[s][u];
        }
    }

    std::vector<double> b(n, 0.0);
    for (uint32_t s = 0; s < n; ++s) {
        for (uint32_t t = s + 1; t < n; ++t) {
            if (dist[s][t] < 0) continue;
            for (uint32_t v = 0; v < n; ++v) {
                if (v == s || v == t) continue;
                if (dist[s][v] >= 0 && dist[t][v] >= 0 &&
                    dist[s][v] + dist[t][v] == dist[s][t])
                    b[v] += sigma[s][v] * sigma[t][v] / sigma[s][t];
            }
        }
    }
    return b;
}

std::vector<double> load_flow_simulation(const CollabGraph& g,
                                         std::vector<double>* absorbed_per_source) {
    const uint32_t n = g.num_nodes();
    std::vector<double> load(n, 0.0);
    if (absorbed_per_source) absorbed_per_source->assign(n, 0.0);

    std::vector<std::vector<int32_t>> dist_to(n);
    for (uint32_t t = 0; t < n; ++t) dist_to[t] = single_source_bfs(g, t);

    std::vector<double> packet(n);
    std::vector<uint32_t> by_dist(n);
    for (uint32_t t = 0; t < n; ++t) {
        std::iota(by_dist.begin(), by_dist.end(), 0u);
        std::sort(by_dist.begin(), by_dist.end(), [&](uint32_t a, uint32_t b) {
            return dist_to[t][a] > dist_to[t][b];
        });
        for (uint32_t s = 0; s < n; ++s) {
            if (t == s || dist_to[t][s] < 0) continue;
            // One unit leaves s toward t, splitting evenly among neighbors
            // one hop closer to t; process nodes farthest-from-t first.
            std::fill(packet.begin(), packet.end(), 0.0);
            packet[s] = 1.0;
            for (uint32_t v : by_dist) {
                if (packet[v] == 0.0 || v == t) continue;
                uint32_t n_next = 0;
                for (uint32_t u : g.neighbors(v))
                    if (dist_to[t][u] == dist_to[t][v] - 1) ++n_next;
                const double share = packet[v] / n_next;
                for (uint32_t u : g.neighbors(v))
                    if (dist_to[t][u] == dist_to[t][v] - 1) {
                        packet[u] += share;
                        if (u != t) load[u] += share; // through-traffic only
                    }
            }
            if (absorbed_per_source) (*absorbed_per_source)[s] += packet[t];
        }
    }
    return load;
}

std::vector<double> closeness_bfs(const CollabGraph& g) {
    const uint32_t n = g.num_nodes();
    std::vector<double> c(n, 0.0);
    for (uint32_t v = 0; v < n; ++v) {
        const auto dist = single_source_bfs(g, v);
        uint64_t sum = 0, r = 0;
        for (uint32_t u = 0; u < n; ++u) {
            if (dist[u] >= 0) {
                ++r;
                sum += static_cast<uint64_t>(dist[u]);
            }
        }
        if (r > 1)
            c[v] = (static_cast<double>(r - 1) / static_cast<double>(sum)) *
                   (static_cast<double>(r - 1) / static_cast<double>(n - 1));
    }
    return c;
}

double kendall_tau_b_quadratic(std::span<const double> x, std::span<const double> y) {
    const size_t n = x.size();
    long long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const double dx = x[i] - x[j];
            const double dy = y[i] - y[j];
            if (dx == 0.0 && dy == 0.0) continue;
            if (dx == 0.0) ++ties_x;
            else if (dy == 0.0) ++ties_y;
            else if (dx * dy > 0.0) ++concordant;
            else ++discordant;
        }
    }
    const double den =
        std::sqrt(static_cast<double>(concordant + discordant + ties_x)) *
        std::sqrt(static_cast<double>(concordant + discordant + ties_y));
    return static_cast<double>(concordant - discordant) / den;
}

double pearson_two_pass(std::span<const double> x, std::span<const double> y) {
    const size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double cov = 0.0, vx = 0.0, vy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        cov += (x[i] - mx) * (y[i] - my);
        vx += (x[i] - mx) * (x[i] - mx);
        vy += (y[i] - my) * (y[i] - my);
    }
    return cov / (std::sqrt(vx) * std::sqrt(vy));
}

namespace {

std::vector<double> rank_positions(std::span<const double> x) {
    const size_t n = x.size();
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j < n && x[idx[j]] == x[idx[i]]) ++j;
        double sum = 0.0;
        for (size_t k = i; k < j; ++k) sum += static_cast<double>(k + 1);
        const double avg = sum / static_cast<double>(j - i);
        for (size_t k = i; k < j; ++k) ranks[idx[k]] = avg;
        i = j;
    }
    return ranks;
}

} // namespace

double spearman_rank_oracle(std::span<const double> x, std::span<const double> y) {
    const auto rx = rank_positions(x);
    const auto ry = rank_positions(y);
    return pearson_two_pass(rx, ry);
}

int h_index_exhaustive(std::span<const long long> citations) {
    const int n = static_cast<int>(citations.size());
    for (int h = n; h >= 1; --h) {
        int count = 0;
        for (long long c : citations)
            if (c >= h) ++count;
        if (count >= h) return h;
    }
    return 0;
}

CollabGraph random_graph(uint32_t n, uint64_t m_target, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    edges.reserve(m_target);
    for (uint64_t i = 0; i < m_target; ++i) {
        const uint32_t u = static_cast<uint32_t>(bounded(rng, n));
        const uint32_t v = static_cast<uint32_t>(bounded(rng, n));
        if (u != v) edges.emplace_back(u, v);
    }
    return CollabGraph::from_edges(n, std::move(edges));
}

CollabGraph random_connected_graph(uint32_t n, uint64_t extra_edges, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v = 1; v < n; ++v)
        edges.emplace_back(static_cast<uint32_t>(bounded(rng, v)), v); // random spanning tree
    for (uint64_t i = 0; i < extra_edges; ++i) {
        const uint32_t u = static_cast<uint32_t>(bounded(rng, n));
        const uint32_t v = static_cast<uint32_t>(bounded(rng, n));
        if (u != v) edges.emplace_back(u, v);
    }
    return CollabGraph::from_edges(n, std::move(edges));
}

CollabGraph cycle_graph(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return CollabGraph::from_edges(n, std::move(edges));
}

CollabGraph complete_graph(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return CollabGraph::from_edges(n, std::move(edges));
}

CollabGraph path_graph(uint32_t n) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return CollabGraph::from_edges(n, std::move(edges));
}

CollabGraph star_graph(uint32_t leaves) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v = 1; v <= leaves; ++v) edges.emplace_back(0u, v);
    return CollabGraph::from_edges(leaves + 1, std::move(edges));
}

CollabGraph clustered_bridge_graph(uint32_t n_clusters, uint32_t cluster_size,
                                   uint32_t bridge_len, uint32_t intra_degree,
                                   uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    const uint32_t n_bridge = (n_clusters - 1) * bridge_len;
    const uint32_t n = n_clusters * cluster_size + n_bridge;
    edges.reserve(static_cast<size_t>(n) * intra_degree / 2 + n_bridge * 2);

    auto cluster_node = [&](uint32_t c, uint32_t i) { return c * cluster_size + i; };
    for (uint32_t c = 0; c < n_clusters; ++c) {
        // random connected cluster: spanning tree plus random chords
        for (uint32_t i = 1; i < cluster_size; ++i)
            edges.emplace_back(cluster_node(c, bounded(rng, i)), cluster_node(c, i));
        const uint64_t chords =
            static_cast<uint64_t>(cluster_size) * intra_degree / 2 - (cluster_size - 1);
        for (uint64_t e = 0; e < chords; ++e) {
            const uint32_t a = cluster_node(c, bounded(rng, cluster_size));
            const uint32_t b = cluster_node(c, bounded(rng, cluster_size));
            if (a != b) edges.emplace_back(a, b);
        }
    }
    // chain consecutive clusters through a short path of bridge nodes
    uint32_t next_bridge = n_clusters * cluster_size;
    for (uint32_t c = 0; c + 1 < n_clusters; ++c) {
        uint32_t prev = cluster_node(c, bounded(rng, cluster_size));
        for (uint32_t b = 0; b < bridge_len; ++b) {
            edges.emplace_back(prev, next_bridge);
            prev = next_bridge++;
        }
        edges.emplace_back(prev, cluster_node(c + 1, bounded(rng, cluster_size)));
    }
    return CollabGraph::from_edges(n, std::move(edges));
}

CollabGraph preferential_attachment_graph(uint32_t n, uint32_t edges_per_node,
                                          uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::vector<uint32_t> endpoint_pool; // node appears once per incident edge
    const uint32_t m0 = edges_per_node + 1;
    for (uint32_t u = 0; u < m0 && u < n; ++u)
        for (uint32_t v = u + 1; v < m0 && v < n; ++v) {
            edges.emplace_back(u, v);
            endpoint_pool.push_back(u);
            endpoint_pool.push_back(v);
        }
    for (uint32_t v = m0; v < n; ++v) {
        for (uint32_t e = 0; e < edges_per_node; ++e) {
            const uint32_t target = endpoint_pool[bounded(rng, endpoint_pool.size())];
            if (target == v) continue;
            edges.emplace_back(std::min(v, target), std::max(v, target));
            endpoint_pool.push_back(v);
            endpoint_pool.push_back(target);
        }
    }
    return CollabGraph::from_edges(n, std::move(edges));
}

} // namespace tn::ref
