#include "tn/tables_io.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "json.hpp"
#include "tn/csv.hpp"
#include "tn/errors.hpp"

namespace tn {

namespace {

std::string opt_real(const std::optional<double>& v) {
    return v ? csv::fmt_real(*v) : "";
}

std::string real_or_empty(double v) {
    return std::isnan(v) ? "" : csv::fmt_real(v);
}

uint64_t to_u64(const std::string& field, const char* what, uint64_t line) {
    try {
        return std::stoull(field);
    } catch (...) {
        throw parse_error(std::string("line ") + std::to_string(line) + ": bad " + what +
                          " '" + field + "'");
    }
}

std::vector<std::string> read_row(std::istream& in, uint64_t& line, bool& eof) {
    std::string raw;
    if (!std::getline(in, raw)) {
        eof = true;
        return {};
    }
    ++line;
    return csv::split(raw);
}

} // namespace

void write_scholar_csv(std::ostream& out, const ScholarTable& scholars) {
    out << "scholar_id,author_key,display_name,institution,country,lat,lon,"
           "n_papers,n_citations,is_laureate\n";
    for (const auto& s : scholars) {
        out << csv::join({std::to_string(s.scholar_id), s.author_key, s.display_name,
                          s.institution, s.country, opt_real(s.latitude),
                          opt_real(s.longitude), std::to_string(s.n_papers),
                          std::to_string(s.n_citations), s.is_laureate ? "1" : "0"})
            << '\n';
    }
}

ScholarTable read_scholar_csv(std::istream& in) {
    ScholarTable scholars;
    uint64_t line = 0;
    bool eof = false;
    auto header = read_row(in, line, eof);
    if (eof || header.empty() || header[0] != "scholar_id")
        throw parse_error("scholar table: missing header row");
    for (;;) {
        const auto f = read_row(in, line, eof);
        if (eof) break;
        if (f.size() == 1 && f[0].empty()) continue;
        if (f.size() != 10)
            throw parse_error("scholar table line " + std::to_string(line) +
                              ": expected 10 fields, got " + std::to_string(f.size()));
        ScholarProfile s;
        s.scholar_id = static_cast<uint32_t>(to_u64(f[0], "scholar_id", line));
        if (s.scholar_id != scholars.size())
            throw parse_error("scholar table line " + std::to_string(line) +
                              ": ids must be dense and ascending");
        s.author_key = f[1];
        s.display_name = f[2];
        s.institution = f[3];
        s.country = f[4];
        if (!f[5].empty()) s.latitude = std::stod(f[5]);
        if (!f[6].empty()) s.longitude = std::stod(f[6]);
        s.n_papers = static_cast<int>(to_u64(f[7], "n_papers", line));
        s.n_citations = static_cast<long long>(to_u64(f[8], "n_citations", line));
        s.is_laureate = f[9] == "1";
        scholars.push_back(std::move(s));
    }
    return scholars;
}

void write_tn_csv(std::ostream& out, const TnResult& tn, const ScholarTable& scholars) {
    out << "scholar_id,author_key,tn,reachable\n";
    for (uint32_t v = 0; v < tn.tn.size(); ++v) {
        const std::string key = v < scholars.size() ? scholars[v].author_key : "";
        out << csv::join({std::to_string(v), key,
                          tn.reachable[v] ? std::to_string(tn.tn[v]) : "",
                          tn.reachable[v] ? "1" : "0"})
            << '\n';
    }
}

TnResult read_tn_csv(std::istream& in, size_t n_nodes) {
    TnResult tn;
    tn.tn.assign(n_nodes, -1);
    tn.reachable.assign(n_nodes, 0);
    uint64_t line = 0;
    bool eof = false;
    auto header = read_row(in, line, eof);
    if (eof || header.empty() || header[0] != "scholar_id")
        throw parse_error("tn table: missing header row");
    for (;;) {
        const auto f = read_row(in, line, eof);
        if (eof) break;
        if (f.size() == 1 && f[0].empty()) continue;
        if (f.size() != 4)
            throw parse_error("tn table line " + std::to_string(line) + ": expected 4 fields");
        const uint64_t v = to_u64(f[0], "scholar_id", line);
        if (v >= n_nodes)
            throw parse_error("tn table line " + std::to_string(line) + ": id out of range");
        if (f[3] == "1") {
            tn.reachable[v] = 1;
            tn.tn[v] = static_cast<int32_t>(to_u64(f[2], "tn", line));
            ++tn.histogram[tn.tn[v]];
            if (tn.tn[v] == 0) tn.seed_set.push_back(static_cast<uint32_t>(v));
        }
    }
    uint64_t reachable = 0;
    for (auto r : tn.reachable) reachable += r;
    tn.n_unreachable = n_nodes - reachable;
    return tn;
}

void write_tn_summary_json(std::ostream& out, const TnResult& tn) {
    const auto dist = tn_distribution(tn);
    nlohmann::ordered_json j;
    j["modal_tn"] = dist.modal_tn;
    j["share_tn_2_to_5"] = dist.share_2_to_5;
    j["n_unreachable"] = tn.n_unreachable;
    j["n_reachable"] = tn.n_reachable();
    j["n_seeds"] = tn.seed_set.size();
    nlohmann::ordered_json hist;
    for (const auto& [value, count] : dist.histogram) hist[std::to_string(value)] = count;
    j["histogram"] = hist;
    out << j.dump(2) << '\n';
}

void write_null_model_csv(std::ostream& out, const NullModelResult& null) {
    out << "trial,tn_value,count\n";
    for (uint32_t t = 0; t < null.trials; ++t)
        for (const auto& [value, count] : null.trial_histograms[t])
            out << t << ',' << value << ',' << count << '\n';
}

void write_null_model_summary_json(std::ostream& out, const NullModelResult& null) {
    nlohmann::ordered_json j;
    j["k"] = null.k;
    j["trials"] = null.trials;
    j["rng_seed"] = null.rng_seed;
    nlohmann::ordered_json buckets;
    for (const auto& [value, stat] : null.bucket_stats) {
        nlohmann::ordered_json b;
        b["mean_count"] = stat.mean;
        b["stddev_count"] = stat.stddev;
        buckets[std::to_string(value)] = b;
    }
    j["buckets"] = buckets;
    out << j.dump(2) << '\n';
}

void write_centrality_csv(std::ostream& out, const CentralityScores& scores) {
    out << "scholar_id,measure,value,normalized_value\n";
    const char* name = to_string(scores.measure);
    for (uint32_t v = 0; v < scores.values.size(); ++v)
        out << v << ',' << name << ',' << csv::fmt_real(scores.values[v]) << ','
            << csv::fmt_real(scores.normalized[v]) << '\n';
}

CentralityScores read_centrality_csv(std::istream& in, Measure measure, size_t n_nodes) {
    CentralityScores scores;
    scores.measure = measure;
    scores.values.assign(n_nodes, 0.0);
    scores.normalized.assign(n_nodes, 0.0);
    uint64_t line = 0;
    bool eof = false;
    auto header = read_row(in, line, eof);
    if (eof || header.empty() || header[0] != "scholar_id")
        throw parse_error("centrality table: missing header row");
    for (;;) {
        const auto f = read_row(in, line, eof);
        if (eof) break;
        if (f.size() == 1 && f[0].empty()) continue;
        if (f.size() != 4)
            throw parse_error("centrality table line " + std::to_string(line) +
                              ": expected 4 fields");
        if (f[1] != to_string(measure))
            throw parse_error("centrality table line " + std::to_string(line) +
                              ": expected measure " + to_string(measure) + ", got " + f[1]);
        const uint64_t v = to_u64(f[0], "scholar_id", line);
        if (v >= n_nodes)
            throw parse_error("centrality table line " + std::to_string(line) +
                              ": id out of range");
        scores.values[v] = std::stod(f[2]);
        scores.normalized[v] = std::stod(f[3]);
    }
    return scores;
}

void write_fig2_csv(std::ostream& out, const std::vector<TnBucketMetrics>& rows) {
    out << "tn,n_scholars,mean_papers,mean_citations,mean_h_index\n";
    for (const auto& r : rows)
        out << r.tn << ',' << r.n << ',' << csv::fmt_real(r.mean_papers) << ','
            << csv::fmt_real(r.mean_citations) << ',' << csv::fmt_real(r.mean_h_index)
            << '\n';
}

void write_table2_csv(std::ostream& out, const std::vector<CountryStats>& rows) {
    out << "country,n_scholars,mean_papers,mean_citations,mean_h_index,mean_tn\n";
    for (const auto& r : rows)
        out << csv::join({r.country, std::to_string(r.n_scholars),
                          csv::fmt_real(r.mean_papers), csv::fmt_real(r.mean_citations),
                          csv::fmt_real(r.mean_h_index), real_or_empty(r.mean_tn)})
            << '\n';
}

void write_table3_csv(std::ostream& out, const std::vector<CorrelationRow>& rows) {
    out << "method,indicator,coefficient,p_value,stars,n\n";
    for (const auto& r : rows)
        out << csv::join({to_string(r.result.method), r.indicator,
                          csv::fmt_real(r.result.coefficient),
                          csv::fmt_real(r.result.p_value), r.result.stars,
                          std::to_string(r.result.n)})
            << '\n';
}

void write_fig3_csv(std::ostream& out, Measure measure,
                    const std::vector<TnBucketLn>& rows, Fig3Stat stat,
                    bool write_header) {
    if (write_header)
        out << "measure,tn,n_positive,n_zero,"
            << (stat == Fig3Stat::mean ? "mean_ln" : "median_ln") << '\n';
    for (const auto& r : rows) {
        const double value = stat == Fig3Stat::mean ? r.mean_ln : r.median_ln;
        out << to_string(measure) << ',' << r.tn << ',' << r.n_positive << ',' << r.n_zero
            << ',' << (r.n_positive ? csv::fmt_real(value) : "") << '\n';
    }
}

void write_tn_histogram_csv(std::ostream& out, const TnResult& tn) {
    out << "tn,count\n";
    for (const auto& [value, count] : tn.histogram) out << value << ',' << count << '\n';
}

void write_geo_countries_csv(std::ostream& out, const GeoDistribution& geo) {
    out << "country,n_scholars,mean_tn\n";
    for (const auto& r : geo.countries)
        out << csv::join({r.country, std::to_string(r.n_scholars), real_or_empty(r.mean_tn)})
            << '\n';
}

void write_geo_institutions_csv(std::ostream& out, const GeoDistribution& geo) {
    out << "country,lat,lon,n_scholars,mean_tn\n";
    for (const auto& r : geo.locations)
        out << csv::join({r.country, csv::fmt_real(r.lat), csv::fmt_real(r.lon),
                          std::to_string(r.n_scholars), real_or_empty(r.mean_tn)})
            << '\n';
}

} // namespace tn
