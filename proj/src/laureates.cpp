#include "tn/laureates.hpp"

#include <algorithm>
#include <unordered_map>

#include "tn/errors.hpp"

namespace tn {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

std::vector<uint32_t> load_laureates(std::istream& in, ScholarTable& scholars) {
    std::unordered_map<std::string, uint32_t> by_key;
    std::unordered_map<std::string, std::vector<uint32_t>> by_name;
    for (const auto& s : scholars) {
        by_key.emplace(s.author_key, s.scholar_id);
        by_name[s.display_name].push_back(s.scholar_id);
    }

    std::vector<uint32_t> ids;
    std::vector<std::string> unresolved;
    std::vector<std::string> ambiguous;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string name = trim(line);
        if (name.empty()) continue;

        if (auto it = by_key.find(name); it != by_key.end()) {
            ids.push_back(it->second);
            continue;
        }
        auto it = by_name.find(name);
        if (it == by_name.end()) {
            unresolved.push_back(name);
        } else if (it->second.size() > 1) {
            ambiguous.push_back(name);
        } else {
            ids.push_back(it->second.front());
        }
    }

    auto join = [](const std::vector<std::string>& names) {
        std::string out;
        for (size_t i = 0; i < names.size(); ++i) {
            if (i) out += ", ";
            out += names[i];
        }
        return out;
    };
    if (!unresolved.empty())
        throw validation_error("laureate names not found in scholar table: " + join(unresolved));
    if (!ambiguous.empty())
        throw validation_error("laureate names matching several scholars (disambiguate by key): " +
                               join(ambiguous));

    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (uint32_t id : ids) scholars[id].is_laureate = true;
    return ids;
}

} // namespace tn
