#include "tn/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "tn/errors.hpp"

namespace tn {

CollabGraph CollabGraph::from_edges(uint32_t n_nodes,
                                    std::vector<std::pair<uint32_t, uint32_t>> edges) {
    for (auto& [u, v] : edges) {
        if (u >= n_nodes || v >= n_nodes)
            throw validation_error("edge endpoint out of range: (" + std::to_string(u) +
                                   "," + std::to_string(v) + ") with n=" +
                                   std::to_string(n_nodes));
        if (u == v)
            throw validation_error("self-loop on node " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    CollabGraph g;
    g.n_nodes_ = n_nodes;
    g.offsets_.assign(static_cast<size_t>(n_nodes) + 1, 0);
    for (const auto& [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (uint32_t v = 0; v < n_nodes; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.adjacency_.resize(edges.size() * 2);
    std::vector<uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Lower neighbors first, then upper: edges are sorted by (u,v), so each
    // slice comes out ascending without a per-slice sort.
    for (const auto& [u, v] : edges) g.adjacency_[cursor[v]++] = u;
    for (const auto& [u, v] : edges) g.adjacency_[cursor[u]++] = v;
    return g;
}

uint32_t CollabGraph::degree(uint32_t v) const {
    if (v >= n_nodes_) throw std::out_of_range("node id " + std::to_string(v) +
                                               " out of range (n=" + std::to_string(n_nodes_) + ")");
    return static_cast<uint32_t>(offsets_[v + 1] - offsets_[v]);
}

std::span<const uint32_t> CollabGraph::neighbors(uint32_t v) const {
    if (v >= n_nodes_) throw std::out_of_range("node id " + std::to_string(v) +
                                               " out of range (n=" + std::to_string(n_nodes_) + ")");
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
}

CollabGraph build_graph(std::span<const ResolvedPaper> papers, uint32_t n_scholars,
                        const BuildOptions& opts, BuildStats* stats) {
    BuildStats local;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (const auto& paper : papers) {
        const auto& a = paper.authors;
        if (a.size() > opts.clique_guard) {
            ++local.papers_over_guard;
            continue;
        }
        ++local.papers_expanded;
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size(); ++j)
                edges.emplace_back(std::min(a[i], a[j]), std::max(a[i], a[j]));
    }
    if (stats) *stats = local;
    return CollabGraph::from_edges(n_scholars, std::move(edges));
}

Components connected_components(const CollabGraph& g) {
    const uint32_t n = g.num_nodes();
    Components out;
    out.id.assign(n, UINT32_MAX);
    std::vector<uint32_t> frontier;
    for (uint32_t start = 0; start < n; ++start) {
        if (out.id[start] != UINT32_MAX) continue;
        const uint32_t cid = static_cast<uint32_t>(out.sizes.size());
        uint64_t size = 0;
        frontier.assign(1, start);
        out.id[start] = cid;
        while (!frontier.empty()) {
            uint32_t v = frontier.back();
            frontier.pop_back();
            ++size;
            for (uint32_t w : g.neighbors(v)) {
                if (out.id[w] == UINT32_MAX) {
                    out.id[w] = cid;
                    frontier.push_back(w);
                }
            }
        }
        out.sizes.push_back(size);
    }
    return out;
}

KhopSubgraph extract_khop(const CollabGraph& g, std::span<const uint32_t> seeds,
                          uint32_t radius) {
    const uint32_t n = g.num_nodes();
    if (seeds.empty()) throw validation_error("k-hop extraction needs a non-empty seed set");
    for (uint32_t s : seeds)
        if (s >= n) throw validation_error("seed id " + std::to_string(s) + " out of range");

    std::vector<int64_t> dist(n, -1);
    std::vector<uint32_t> frontier, next;
    for (uint32_t s : seeds) {
        if (dist[s] == -1) {
            dist[s] = 0;
            frontier.push_back(s);
        }
    }
    for (uint32_t hop = 0; hop < radius && !frontier.empty(); ++hop) {
        next.clear();
        for (uint32_t v : frontier) {
            for (uint32_t w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = hop + 1;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }

    KhopSubgraph out;
    std::vector<uint32_t> new_id(n, UINT32_MAX);
    for (uint32_t v = 0; v < n; ++v) {
        if (dist[v] >= 0) {
            new_id[v] = static_cast<uint32_t>(out.orig_id.size());
            out.orig_id.push_back(v);
        }
    }
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t v = 0; v < n; ++v) {
        if (new_id[v] == UINT32_MAX) continue;
        for (uint32_t w : g.neighbors(v)) {
            if (w > v && new_id[w] != UINT32_MAX)
                edges.emplace_back(new_id[v], new_id[w]);
        }
    }
    out.graph = CollabGraph::from_edges(static_cast<uint32_t>(out.orig_id.size()),
                                        std::move(edges));
    return out;
}

} // namespace tn
