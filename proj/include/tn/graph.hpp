#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tn/scholar_table.hpp"

namespace tn {

// Undirected simple coauthorship graph in CSR form. Within each node's slice
// the neighbor list is ascending and duplicate-free; no self-loops. Immutable
// once built, safe for concurrent read-only traversal.
class CollabGraph {
public:
    CollabGraph() = default;

    // Edges may arrive duplicated and in any order; self-loops and
    // out-of-range endpoints are rejected.
    static CollabGraph from_edges(uint32_t n_nodes,
                                  std::vector<std::pair<uint32_t, uint32_t>> edges);

    uint32_t num_nodes() const { return n_nodes_; }
    uint64_t num_edges() const { return adjacency_.size() / 2; }

    uint32_t degree(uint32_t v) const;
    std::span<const uint32_t> neighbors(uint32_t v) const;

    const std::vector<uint64_t>& offsets() const { return offsets_; }
    const std::vector<uint32_t>& adjacency() const { return adjacency_; }

    bool operator==(const CollabGraph&) const = default;

private:
    friend CollabGraph load_graph(const std::string& path);

    uint32_t n_nodes_ = 0;
    std::vector<uint64_t> offsets_{0};
    std::vector<uint32_t> adjacency_;
};

struct BuildOptions {
    // Papers with more authors than this skip edge expansion (quadratic
    // blowup guard); the count is reported, not silent.
    uint32_t clique_guard = 500;
};

struct BuildStats {
    uint64_t papers_expanded = 0;
    uint64_t papers_over_guard = 0;
};

CollabGraph build_graph(std::span<const ResolvedPaper> papers, uint32_t n_scholars,
                        const BuildOptions& opts = {}, BuildStats* stats = nullptr);

// Component ids are assigned in order of each component's smallest node id.
struct Components {
    std::vector<uint32_t> id;     // per node
    std::vector<uint64_t> sizes;  // per component
};

Components connected_components(const CollabGraph& g);

// Induced subgraph on all nodes within `radius` hops of the seed set.
// orig_id maps new node ids back to ids in the source graph.
struct KhopSubgraph {
    CollabGraph graph;
    std::vector<uint32_t> orig_id;
};

KhopSubgraph extract_khop(const CollabGraph& g, std::span<const uint32_t> seeds,
                          uint32_t radius);

} // namespace tn
