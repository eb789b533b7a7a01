#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "tn/scholar_table.hpp"

namespace tn {

struct GeocodeRow {
    std::string pattern;
    std::string country;
    double lat = 0.0;
    double lon = 0.0;
};

// Offline institution -> (country, lat, lon) lookup. Matching is a
// case-insensitive substring search, longest pattern first, so
// "University of California, Berkeley" wins over "University of California".
class GeocodeTable {
public:
    static GeocodeTable from_csv(std::istream& in);

    const GeocodeRow* match(const std::string& raw_institution) const;
    size_t size() const { return rows_.size(); }
    const std::vector<GeocodeRow>& rows() const { return rows_; }

private:
    std::vector<GeocodeRow> rows_; // sorted by pattern length desc, then pattern
    std::vector<std::string> lowered_;
};

struct AffiliationRow {
    std::string author_key;
    std::string institution;
};

// CSV with header `author_key,institution`.
std::vector<AffiliationRow> load_affiliations(std::istream& in);

struct AttachStats {
    uint64_t n_matched = 0;        // scholars that gained country/lat/lon
    uint64_t n_missing = 0;        // scholars left without a geocode
    uint64_t n_duplicate_rows = 0; // same key seen twice; last write wins
    uint64_t n_unknown_keys = 0;   // affiliation rows for keys not in the table
};

// Matched scholars gain institution/country/lat/lon; everyone else keeps the
// optional fields empty and is only excluded from geographic reports, never
// from the graph.
AttachStats attach_affiliations(ScholarTable& scholars,
                                std::span<const AffiliationRow> rows,
                                const GeocodeTable& geocode);

} // namespace tn
