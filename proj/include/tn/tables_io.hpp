#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tn/bibliometrics.hpp"
#include "tn/centrality.hpp"
#include "tn/scholar_table.hpp"
#include "tn/stats.hpp"
#include "tn/turing_number.hpp"

// Report-file schemas. All reals go through the fixed 6-significant-digit
// formatter so committed outputs are byte-stable.

namespace tn {

void write_scholar_csv(std::ostream& out, const ScholarTable& scholars);
ScholarTable read_scholar_csv(std::istream& in);

void write_tn_csv(std::ostream& out, const TnResult& tn, const ScholarTable& scholars);
// Restores tn/reachable/seed_set/histogram from the CSV (n rows expected).
TnResult read_tn_csv(std::istream& in, size_t n_nodes);

void write_tn_summary_json(std::ostream& out, const TnResult& tn);

void write_null_model_csv(std::ostream& out, const NullModelResult& null);
void write_null_model_summary_json(std::ostream& out, const NullModelResult& null);

void write_centrality_csv(std::ostream& out, const CentralityScores& scores);
// Reads values/normalized back; measure name must match.
CentralityScores read_centrality_csv(std::istream& in, Measure measure, size_t n_nodes);

void write_fig2_csv(std::ostream& out, const std::vector<TnBucketMetrics>& rows);
void write_table2_csv(std::ostream& out, const std::vector<CountryStats>& rows);
void write_table3_csv(std::ostream& out, const std::vector<CorrelationRow>& rows);

enum class Fig3Stat { mean, median };
void write_fig3_csv(std::ostream& out, Measure measure,
                    const std::vector<TnBucketLn>& rows, Fig3Stat stat,
                    bool write_header);

void write_tn_histogram_csv(std::ostream& out, const TnResult& tn);
void write_geo_countries_csv(std::ostream& out, const GeoDistribution& geo);
void write_geo_institutions_csv(std::ostream& out, const GeoDistribution& geo);

} // namespace tn
