#pragma once

#include <istream>
#include <optional>
#include <ostream>

#include "tn/paper_record.hpp"

namespace tn {

// JSON-lines interchange corpus: one object per line with fields
// id, title, year, authors (list of strings) and optional n_citation.
// Blank lines are skipped. Errors carry the 1-based line number.
class JsonlParser {
public:
    explicit JsonlParser(std::istream& in) : in_(in) {}

    std::optional<PaperRecord> next();

    const SkipReport& skip_report() const { return skip_; }
    uint64_t line_number() const { return line_; }

private:
    std::istream& in_;
    uint64_t line_ = 0;
    SkipReport skip_;
};

std::vector<PaperRecord> parse_jsonl(std::istream& in, SkipReport* report = nullptr);

// Canonical one-line form used by the normalized corpus written at ingest.
void write_jsonl_record(std::ostream& out, const PaperRecord& rec);

} // namespace tn
