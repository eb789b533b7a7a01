#include "tn/bibliometrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "tn/errors.hpp"

namespace tn {

int h_index(std::span<const long long> per_paper_citations) {
    std::vector<long long> sorted(per_paper_citations.begin(), per_paper_citations.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    int h = 0;
    while (h < static_cast<int>(sorted.size()) && sorted[h] >= h + 1) ++h;
    return h;
}

std::vector<ScholarMetrics> scholar_metrics(const ResolvedCorpus& corpus) {
    const size_t n = corpus.scholars.size();
    std::vector<std::vector<long long>> citations(n);
    for (const auto& paper : corpus.papers)
        for (uint32_t a : paper.authors) citations[a].push_back(paper.citation_count);

    std::vector<ScholarMetrics> out(n);
    for (uint32_t v = 0; v < n; ++v) {
        out[v].scholar_id = v;
        out[v].n_papers = static_cast<int>(citations[v].size());
        out[v].n_citations = 0;
        for (long long c : citations[v]) out[v].n_citations += c;
        out[v].h_index = h_index(citations[v]);
    }
    return out;
}

std::vector<TnBucketMetrics> metrics_by_tn(std::span<const ScholarMetrics> metrics,
                                           const TnResult& tn) {
    if (metrics.size() != tn.tn.size())
        throw validation_error("metrics and TN cover different node sets");

    std::map<int32_t, TnBucketMetrics> buckets;
    for (size_t v = 0; v < metrics.size(); ++v) {
        if (!tn.reachable[v]) continue;
        auto& b = buckets[tn.tn[v]];
        b.tn = tn.tn[v];
        ++b.n;
        b.mean_papers += metrics[v].n_papers;
        b.mean_citations += static_cast<double>(metrics[v].n_citations);
        b.mean_h_index += metrics[v].h_index;
    }
    std::vector<TnBucketMetrics> out;
    for (auto& [_, b] : buckets) {
        b.mean_papers /= static_cast<double>(b.n);
        b.mean_citations /= static_cast<double>(b.n);
        b.mean_h_index /= static_cast<double>(b.n);
        out.push_back(b);
    }
    return out;
}

namespace {

struct CountryAccum {
    uint64_t n = 0;
    double papers = 0.0, citations = 0.0, h = 0.0;
    uint64_t n_reachable = 0;
    double tn_sum = 0.0;
};

} // namespace

std::vector<CountryStats> country_table(const ScholarTable& scholars,
                                        std::span<const ScholarMetrics> metrics,
                                        const TnResult& tn, size_t top_k) {
    if (scholars.size() != metrics.size() || scholars.size() != tn.tn.size())
        throw validation_error("scholar table, metrics and TN cover different node sets");
    if (top_k < 1) throw validation_error("top_k must be at least 1");

    std::map<std::string, CountryAccum> by_country;
    for (size_t v = 0; v < scholars.size(); ++v) {
        if (scholars[v].country.empty()) continue;
        auto& acc = by_country[scholars[v].country];
        ++acc.n;
        acc.papers += metrics[v].n_papers;
        acc.citations += static_cast<double>(metrics[v].n_citations);
        acc.h += metrics[v].h_index;
        if (tn.reachable[v]) {
            ++acc.n_reachable;
            acc.tn_sum += tn.tn[v];
        }
    }

    std::vector<CountryStats> rows;
    rows.reserve(by_country.size());
    for (const auto& [country, acc] : by_country) {
        CountryStats r;
        r.country = country;
        r.n_scholars = acc.n;
        r.mean_papers = acc.papers / static_cast<double>(acc.n);
        r.mean_citations = acc.citations / static_cast<double>(acc.n);
        r.mean_h_index = acc.h / static_cast<double>(acc.n);
        r.n_reachable = acc.n_reachable;
        r.mean_tn = acc.n_reachable
                        ? acc.tn_sum / static_cast<double>(acc.n_reachable)
                        : std::numeric_limits<double>::quiet_NaN();
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(), [](const CountryStats& a, const CountryStats& b) {
        if (a.n_scholars != b.n_scholars) return a.n_scholars > b.n_scholars;
        return a.country < b.country;
    });
    if (rows.size() > top_k) rows.resize(top_k);
    return rows;
}

GeoDistribution geographic_distribution(const ScholarTable& scholars, const TnResult& tn) {
    if (scholars.size() != tn.tn.size())
        throw validation_error("scholar table and TN cover different node sets");

    std::map<std::string, CountryAccum> by_country;
    std::map<std::pair<double, double>, std::pair<std::string, CountryAccum>> by_location;
    for (size_t v = 0; v < scholars.size(); ++v) {
        const auto& s = scholars[v];
        if (s.country.empty() || !s.latitude || !s.longitude) continue;
        auto& c = by_country[s.country];
        auto& l = by_location[{*s.latitude, *s.longitude}];
        l.first = s.country;
        ++c.n;
        ++l.second.n;
        if (tn.reachable[v]) {
            ++c.n_reachable;
            c.tn_sum += tn.tn[v];
            ++l.second.n_reachable;
            l.second.tn_sum += tn.tn[v];
        }
    }

    GeoDistribution out;
    for (const auto& [country, acc] : by_country) {
        GeoCountryRow r;
        r.country = country;
        r.n_scholars = acc.n;
        r.n_reachable = acc.n_reachable;
        r.mean_tn = acc.n_reachable ? acc.tn_sum / static_cast<double>(acc.n_reachable)
                                    : std::numeric_limits<double>::quiet_NaN();
        out.countries.push_back(std::move(r));
    }
    for (const auto& [loc, entry] : by_location) {
        GeoLocationRow r;
        r.country = entry.first;
        r.lat = loc.first;
        r.lon = loc.second;
        r.n_scholars = entry.second.n;
        r.n_reachable = entry.second.n_reachable;
        r.mean_tn = entry.second.n_reachable
                        ? entry.second.tn_sum / static_cast<double>(entry.second.n_reachable)
                        : std::numeric_limits<double>::quiet_NaN();
        out.locations.push_back(std::move(r));
    }
    return out;
}

} // namespace tn
