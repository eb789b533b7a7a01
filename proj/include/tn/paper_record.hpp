#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tn {

// One publication as parsed from a corpus. author_keys keeps the original
// author order and never contains duplicates within a record.
struct PaperRecord {
    std::string paper_id;
    std::string title;
    int year = 0;
    std::vector<std::string> author_keys;
    long long citation_count = 0;
};

constexpr int kMinYear = 1900;
constexpr int kMaxYear = 2100;

// Counts of records dropped or repaired while parsing a corpus.
struct SkipReport {
    uint64_t records_emitted = 0;
    uint64_t skipped_no_authors = 0;
    uint64_t skipped_bad_year = 0;
    uint64_t duplicate_authors_removed = 0;

    uint64_t total_skipped() const { return skipped_no_authors + skipped_bad_year; }

    bool operator==(const SkipReport&) const = default;
};

} // namespace tn
