#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tn::csv {

// Reals are written with 6 significant digits so report files are byte-stable.
std::string fmt_real(double v);

// RFC-style quoting: fields containing , " or newlines are wrapped in double
// quotes, embedded quotes doubled.
std::string join(const std::vector<std::string>& fields);
std::vector<std::string> split(const std::string& line);

std::string quote(const std::string& field);

} // namespace tn::csv
