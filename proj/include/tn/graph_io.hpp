#pragma once

#include <ostream>
#include <string>

#include "tn/graph.hpp"

namespace tn {

// Binary cache: magic "TNGR", u32 version, u64 n_nodes, u64 adjacency length,
// then the offset and adjacency arrays, all little-endian fixed width, with a
// trailing FNV-1a64 checksum over everything before it. load(save(g)) == g.
void save_graph(const CollabGraph& g, const std::string& path);
CollabGraph load_graph(const std::string& path);

// Plain-text edge list, `u v` per line with u < v, for interoperability.
void write_edge_list(const CollabGraph& g, std::ostream& out);

} // namespace tn
