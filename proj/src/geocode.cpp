#include "tn/geocode.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_map>
#include <unordered_set>

#include "tn/csv.hpp"
#include "tn/errors.hpp"

namespace tn {

namespace {

std::string lower(const std::string& s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

double parse_coord(const std::string& field, const char* what, double lo, double hi,
                   uint64_t line) {
    double v = 0.0;
    const auto* begin = field.data();
    const auto* end = field.data() + field.size();
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || p != end)
        throw parse_error("geocode line " + std::to_string(line) + ": bad " + what + " '" +
                          field + "'");
    if (v < lo || v > hi)
        throw parse_error("geocode line " + std::to_string(line) + ": " + what + " " + field +
                          " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
}

} // namespace

GeocodeTable GeocodeTable::from_csv(std::istream& in) {
    GeocodeTable table;
    std::string line;
    uint64_t line_no = 0;
    std::unordered_set<std::string> seen;
    bool header = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fields = csv::split(line);
        if (header) {
            header = false;
            if (fields.size() == 4 && fields[0] == "pattern") continue; // header row
        }
        if (fields.size() != 4)
            throw parse_error("geocode line " + std::to_string(line_no) +
                              ": expected pattern,country,lat,lon");
        GeocodeRow row;
        row.pattern = fields[0];
        row.country = fields[1];
        row.lat = parse_coord(fields[2], "latitude", -90.0, 90.0, line_no);
        row.lon = parse_coord(fields[3], "longitude", -180.0, 180.0, line_no);
        if (row.pattern.empty())
            throw parse_error("geocode line " + std::to_string(line_no) + ": empty pattern");
        if (!seen.insert(row.pattern).second)
            throw parse_error("geocode line " + std::to_string(line_no) +
                              ": duplicate pattern '" + row.pattern + "'");
        table.rows_.push_back(std::move(row));
    }
    std::sort(table.rows_.begin(), table.rows_.end(),
              [](const GeocodeRow& a, const GeocodeRow& b) {
                  if (a.pattern.size() != b.pattern.size())
                      return a.pattern.size() > b.pattern.size();
                  return a.pattern < b.pattern;
              });
    table.lowered_.reserve(table.rows_.size());
    for (const auto& r : table.rows_) table.lowered_.push_back(lower(r.pattern));
    return table;
}

const GeocodeRow* GeocodeTable::match(const std::string& raw_institution) const {
    const std::string hay = lower(raw_institution);
    for (size_t i = 0; i < rows_.size(); ++i)
        if (hay.find(lowered_[i]) != std::string::npos) return &rows_[i];
    return nullptr;
}

std::vector<AffiliationRow> load_affiliations(std::istream& in) {
    std::vector<AffiliationRow> rows;
    std::string line;
    uint64_t line_no = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fields = csv::split(line);
        if (header) {
            header = false;
            if (fields.size() == 2 && fields[0] == "author_key") continue;
        }
        if (fields.size() != 2)
            throw parse_error("affiliations line " + std::to_string(line_no) +
                              ": expected author_key,institution");
        rows.push_back({fields[0], fields[1]});
    }
    return rows;
}

AttachStats attach_affiliations(ScholarTable& scholars,
                                std::span<const AffiliationRow> rows,
                                const GeocodeTable& geocode) {
    AttachStats stats;
    std::unordered_map<std::string, uint32_t> key_to_id;
    key_to_id.reserve(scholars.size());
    for (const auto& s : scholars) key_to_id.emplace(s.author_key, s.scholar_id);

    // Last write wins on duplicate keys.
    std::unordered_map<uint32_t, std::string> institution_of;
    for (const auto& row : rows) {
        auto it = key_to_id.find(row.author_key);
        if (it == key_to_id.end()) {
            ++stats.n_unknown_keys;
            continue;
        }
        if (!institution_of.emplace(it->second, row.institution).second) {
            ++stats.n_duplicate_rows;
            institution_of[it->second] = row.institution;
        }
    }

    for (auto& s : scholars) {
        const auto it = institution_of.find(s.scholar_id);
        const GeocodeRow* row = it == institution_of.end() ? nullptr : geocode.match(it->second);
        if (row) {
            s.institution = it->second;
            s.country = row->country;
            s.latitude = row->lat;
            s.longitude = row->lon;
            ++stats.n_matched;
        } else {
            ++stats.n_missing;
        }
    }
    return stats;
}

} // namespace tn
