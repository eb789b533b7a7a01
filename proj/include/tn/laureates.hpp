#pragma once

#include <cstdint>
#include <istream>
#include <vector>

#include "tn/scholar_table.hpp"

namespace tn {

// Laureate list: one display name or author key per line, `#` comments and
// blank lines allowed. Every line must resolve to exactly one scholar;
// unresolved names and ambiguous names are hard errors, matching the manual
// identification they stand in for. Sets is_laureate on the table and returns
// the sorted id set.
std::vector<uint32_t> load_laureates(std::istream& in, ScholarTable& scholars);

} // namespace tn
