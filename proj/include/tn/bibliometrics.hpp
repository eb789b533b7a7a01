#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tn/scholar_table.hpp"
#include "tn/turing_number.hpp"

namespace tn {

// Largest h such that at least h papers have >= h citations each.
int h_index(std::span<const long long> per_paper_citations);

struct ScholarMetrics {
    uint32_t scholar_id = 0;
    int n_papers = 0;
    long long n_citations = 0;
    int h_index = 0;
};

// Per-scholar tallies from the re-keyed papers; h-index uses the per-paper
// citation counts as ingested.
std::vector<ScholarMetrics> scholar_metrics(const ResolvedCorpus& corpus);

struct TnBucketMetrics {
    int32_t tn = 0;
    uint64_t n = 0;
    double mean_papers = 0.0;
    double mean_citations = 0.0;
    double mean_h_index = 0.0;
};

// Arithmetic means per TN bucket over reachable scholars; empty buckets omitted.
std::vector<TnBucketMetrics> metrics_by_tn(std::span<const ScholarMetrics> metrics,
                                           const TnResult& tn);

struct CountryStats {
    std::string country;
    uint64_t n_scholars = 0;  // geocoded scholars
    double mean_papers = 0.0;
    double mean_citations = 0.0;
    double mean_h_index = 0.0;
    double mean_tn = 0.0;     // over reachable scholars; NaN if none reachable
    uint64_t n_reachable = 0;
};

// Top countries by scholar count, ties broken by name; scholars without a
// country are excluded. Returns min(top_k, #countries) rows.
std::vector<CountryStats> country_table(const ScholarTable& scholars,
                                        std::span<const ScholarMetrics> metrics,
                                        const TnResult& tn, size_t top_k);

struct GeoCountryRow {
    std::string country;
    uint64_t n_scholars = 0;
    double mean_tn = 0.0;
    uint64_t n_reachable = 0;
};

struct GeoLocationRow {
    std::string country;
    double lat = 0.0;
    double lon = 0.0;
    uint64_t n_scholars = 0;
    double mean_tn = 0.0;
    uint64_t n_reachable = 0;
};

struct GeoDistribution {
    std::vector<GeoCountryRow> countries;   // one row per country
    std::vector<GeoLocationRow> locations;  // one row per distinct (lat,lon)
};

// Mapping-ready rows over geocoded scholars only.
GeoDistribution geographic_distribution(const ScholarTable& scholars,
                                        const TnResult& tn);

} // namespace tn
