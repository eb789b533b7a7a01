#include <algorithm>
#include <cmath>
#include <map>

#include "doctest.h"
#include "tn/bibliometrics.hpp"
#include "tn/det_rng.hpp"
#include "tn/errors.hpp"
#include "tn_reference.hpp"

using namespace tn;

TEST_CASE("h-index basics") {
    CHECK(h_index({}) == 0);
    CHECK(h_index(std::vector<long long>{10, 8, 5, 4, 3}) == 4);
    CHECK(h_index(std::vector<long long>{0, 0, 0}) == 0);
    CHECK(h_index(std::vector<long long>{100}) == 1);
}

TEST_CASE("h-index equals the exhaustive-candidate oracle") {
    SplitMix64 rng(8080);
    for (int rep = 0; rep < 1000; ++rep) {
        const size_t n = bounded(rng, 60);
        std::vector<long long> citations(n);
        for (auto& c : citations) c = static_cast<long long>(bounded(rng, 50));
        CHECK(h_index(citations) == ref::h_index_exhaustive(citations));
    }
}

TEST_CASE("h-index is permutation invariant and append-monotone") {
    SplitMix64 rng(13);
    std::vector<long long> citations{4, 9, 1, 7, 7, 0, 3};
    const int before = h_index(citations);
    for (size_t i = citations.size(); i > 1; --i)
        std::swap(citations[i - 1], citations[bounded(rng, i)]);
    CHECK(h_index(citations) == before);

    for (long long extra : {0ll, 2ll, 100ll}) {
        auto grown = citations;
        grown.push_back(extra);
        CHECK(h_index(grown) >= before);
    }
}

namespace {

ResolvedCorpus tiny_corpus() {
    // scholars 0..3; papers with known citation counts
    ResolvedCorpus corpus;
    corpus.scholars.resize(4);
    for (uint32_t v = 0; v < 4; ++v) corpus.scholars[v].scholar_id = v;
    auto add = [&](std::vector<uint32_t> authors, long long cites) {
        ResolvedPaper p;
        p.authors = std::move(authors);
        p.citation_count = cites;
        corpus.papers.push_back(std::move(p));
    };
    add({0, 1}, 10);
    add({0, 2}, 3);
    add({0}, 1);
    add({3}, 0);
    return corpus;
}

} // namespace

TEST_CASE("scholar metrics from re-keyed papers") {
    const auto metrics = scholar_metrics(tiny_corpus());
    REQUIRE(metrics.size() == 4);
    CHECK(metrics[0].n_papers == 3);
    CHECK(metrics[0].n_citations == 14);
    CHECK(metrics[0].h_index == 2); // {10,3,1}
    CHECK(metrics[1].n_papers == 1);
    CHECK(metrics[1].n_citations == 10);
    CHECK(metrics[1].h_index == 1);
    CHECK(metrics[3].h_index == 0);
}

TEST_CASE("metrics_by_tn means and bucket omission") {
    std::vector<ScholarMetrics> metrics(3);
    metrics[0] = {0, 2, 20, 1};
    metrics[1] = {1, 4, 40, 3};
    metrics[2] = {2, 100, 1000, 10}; // unreachable, excluded

    TnResult tn;
    tn.tn = {1, 1, 7};
    tn.reachable = {1, 1, 0};

    const auto rows = metrics_by_tn(metrics, tn);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].tn == 1);
    CHECK(rows[0].n == 2);
    CHECK(rows[0].mean_papers == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(rows[0].mean_citations == doctest::Approx(30.0).epsilon(1e-15));
    CHECK(rows[0].mean_h_index == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("metrics_by_tn matches an independent tally on a synthetic fixture") {
    SplitMix64 rng(321);
    const size_t n = 300;
    std::vector<ScholarMetrics> metrics(n);
    TnResult tn;
    tn.tn.resize(n);
    tn.reachable.resize(n);
    for (size_t v = 0; v < n; ++v) {
        metrics[v] = {static_cast<uint32_t>(v), static_cast<int>(bounded(rng, 50)),
                      static_cast<long long>(bounded(rng, 2000)),
                      static_cast<int>(bounded(rng, 20))};
        tn.tn[v] = static_cast<int32_t>(bounded(rng, 6));
        tn.reachable[v] = bounded(rng, 10) > 0;
    }
    const auto rows = metrics_by_tn(metrics, tn);

    std::map<int32_t, std::vector<size_t>> groups;
    for (size_t v = 0; v < n; ++v)
        if (tn.reachable[v]) groups[tn.tn[v]].push_back(v);
    REQUIRE(rows.size() == groups.size());
    for (const auto& row : rows) {
        const auto& members = groups.at(row.tn);
        CHECK(row.n == members.size());
        double papers = 0;
        for (size_t v : members) papers += metrics[v].n_papers;
        CHECK(row.mean_papers == doctest::Approx(papers / members.size()).epsilon(1e-12));
    }
}

namespace {

ScholarTable table_with_countries(const std::vector<std::string>& countries) {
    ScholarTable t(countries.size());
    for (uint32_t v = 0; v < countries.size(); ++v) {
        t[v].scholar_id = v;
        t[v].country = countries[v];
        if (!countries[v].empty()) {
            t[v].latitude = 10.0 + static_cast<double>(v % 3);
            t[v].longitude = 20.0;
        }
    }
    return t;
}

} // namespace

TEST_CASE("country table top-k ordering and tie break") {
    const auto scholars =
        table_with_countries({"US", "US", "US", "Japan", "Albania", "Brazil", "Japan"});
    std::vector<ScholarMetrics> metrics(scholars.size());
    for (uint32_t v = 0; v < scholars.size(); ++v)
        metrics[v] = {v, static_cast<int>(v + 1), 10ll * (v + 1), static_cast<int>(v % 4)};
    TnResult tn;
    tn.tn = {0, 1, 2, 1, 3, 2, 4};
    tn.reachable = {1, 1, 1, 1, 1, 1, 0};

    SUBCASE("top 1") {
        const auto rows = country_table(scholars, metrics, tn, 1);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].country == "US");
        CHECK(rows[0].n_scholars == 3);
        CHECK(rows[0].mean_papers == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(rows[0].mean_tn == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("ties broken by country name") {
        const auto rows = country_table(scholars, metrics, tn, 10);
        REQUIRE(rows.size() == 4);
        CHECK(rows[0].country == "US");
        CHECK(rows[1].country == "Japan");
        CHECK(rows[2].country == "Albania"); // ties with Brazil, name ascending
        CHECK(rows[3].country == "Brazil");
    }
}

TEST_CASE("country table: unreachable scholars excluded from mean TN only") {
    const auto scholars = table_with_countries({"US", "US"});
    std::vector<ScholarMetrics> metrics{{0, 5, 50, 2}, {1, 1, 0, 0}};
    TnResult tn;
    tn.tn = {2, 0};
    tn.reachable = {1, 0};
    const auto rows = country_table(scholars, metrics, tn, 5);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].n_scholars == 2);
    CHECK(rows[0].mean_papers == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(rows[0].n_reachable == 1);
    CHECK(rows[0].mean_tn == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("country table with no geocoded scholars is empty") {
    const auto scholars = table_with_countries({"", "", ""});
    std::vector<ScholarMetrics> metrics(3);
    TnResult tn;
    tn.tn = {0, 1, 2};
    tn.reachable = {1, 1, 1};
    CHECK(country_table(scholars, metrics, tn, 11).empty());
}

TEST_CASE("country table matches a group-by oracle on a synthetic fixture") {
    SplitMix64 rng(99);
    const std::vector<std::string> names{"US", "CN", "DE", "FR", "JP", ""};
    std::vector<std::string> countries(200);
    for (auto& c : countries) c = names[bounded(rng, names.size())];
    const auto scholars = table_with_countries(countries);
    std::vector<ScholarMetrics> metrics(200);
    TnResult tn;
    tn.tn.resize(200);
    tn.reachable.resize(200);
    for (uint32_t v = 0; v < 200; ++v) {
        metrics[v] = {v, static_cast<int>(bounded(rng, 30)),
                      static_cast<long long>(bounded(rng, 500)),
                      static_cast<int>(bounded(rng, 12))};
        tn.tn[v] = static_cast<int32_t>(bounded(rng, 7));
        tn.reachable[v] = bounded(rng, 8) > 0;
    }
    const auto rows = country_table(scholars, metrics, tn, 100);

    for (const auto& row : rows) {
        uint64_t n = 0;
        double papers = 0;
        for (uint32_t v = 0; v < 200; ++v) {
            if (scholars[v].country != row.country) continue;
            ++n;
            papers += metrics[v].n_papers;
        }
        CHECK(row.n_scholars == n);
        CHECK(row.mean_papers == doctest::Approx(papers / n).epsilon(1e-12));
    }
}

TEST_CASE("geographic distribution means and exclusions") {
    auto scholars = table_with_countries({"US", "US", ""});
    TnResult tn;
    tn.tn = {2, 4, 1};
    tn.reachable = {1, 1, 1};
    const auto geo = geographic_distribution(scholars, tn);
    REQUIRE(geo.countries.size() == 1);
    CHECK(geo.countries[0].country == "US");
    CHECK(geo.countries[0].mean_tn == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(geo.countries[0].n_scholars == 2);
    // scholar without country is absent entirely
    uint64_t total = 0;
    for (const auto& row : geo.locations) total += row.n_scholars;
    CHECK(total == 2);
}

TEST_CASE("weighted mean of per-country TN equals the global mean") {
    SplitMix64 rng(555);
    const std::vector<std::string> names{"US", "CN", "DE", ""};
    std::vector<std::string> countries(150);
    for (auto& c : countries) c = names[bounded(rng, names.size())];
    const auto scholars = table_with_countries(countries);
    TnResult tn;
    tn.tn.resize(150);
    tn.reachable.resize(150);
    for (uint32_t v = 0; v < 150; ++v) {
        tn.tn[v] = static_cast<int32_t>(bounded(rng, 6));
        tn.reachable[v] = bounded(rng, 5) > 0;
    }
    const auto geo = geographic_distribution(scholars, tn);

    double weighted = 0.0;
    uint64_t total = 0;
    for (const auto& row : geo.countries) {
        if (!row.n_reachable) continue;
        weighted += row.mean_tn * static_cast<double>(row.n_reachable);
        total += row.n_reachable;
    }
    double direct = 0.0;
    uint64_t direct_n = 0;
    for (uint32_t v = 0; v < 150; ++v) {
        if (scholars[v].country.empty() || !tn.reachable[v]) continue;
        direct += tn.tn[v];
        ++direct_n;
    }
    REQUIRE(total == direct_n);
    CHECK(weighted / total == doctest::Approx(direct / direct_n).epsilon(1e-12));
}
