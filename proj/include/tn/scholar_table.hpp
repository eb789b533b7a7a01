#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tn/paper_record.hpp"

namespace tn {

// A resolved author. scholar_id values are dense, assigned in first-appearance
// order over the paper stream, so re-runs over the same corpus are identical.
struct ScholarProfile {
    uint32_t scholar_id = 0;
    std::string author_key;
    std::string display_name;
    std::string institution; // empty = unknown
    std::string country;     // empty = not geocoded
    std::optional<double> latitude;
    std::optional<double> longitude;
    int n_papers = 0;
    long long n_citations = 0;
    bool is_laureate = false;
};

using ScholarTable = std::vector<ScholarProfile>;

// A publication re-keyed from author strings to scholar ids.
struct ResolvedPaper {
    std::string paper_id;
    int year = 0;
    long long citation_count = 0;
    std::vector<uint32_t> authors;
};

struct ResolvedCorpus {
    ScholarTable scholars;
    std::vector<ResolvedPaper> papers;
};

// Streaming accumulator behind resolve_authors. Feed records in corpus order;
// id assignment is order-dependent, so a single sequential pass only. With
// keep_papers = false only the scholar table is accumulated, so memory stays
// proportional to the number of distinct authors.
class AuthorResolver {
public:
    explicit AuthorResolver(bool keep_papers = true) : keep_papers_(keep_papers) {}

    void add(const PaperRecord& rec);
    ResolvedCorpus finish() &&;

    size_t n_scholars() const { return scholars_.size(); }

private:
    bool keep_papers_;
    std::unordered_map<std::string, uint32_t> key_to_id_;
    ScholarTable scholars_;
    std::vector<ResolvedPaper> papers_;
};

ResolvedCorpus resolve_authors(std::span<const PaperRecord> papers);

// DBLP-style keys carry a trailing 4-digit disambiguation suffix; the display
// name is the key with that suffix stripped.
std::string display_name_for_key(const std::string& author_key);

} // namespace tn
