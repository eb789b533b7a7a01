#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "tn/paper_record.hpp"

namespace tn {

// Incremental pull parser for DBLP-shaped XML. Memory stays bounded by a
// constant times the largest single publication element regardless of file
// size; max_buffer_bytes() exposes the high-water mark so tests can check the
// streaming contract.
//
// Recognized publication elements: article, inproceedings, proceedings, book,
// incollection, phdthesis, mastersthesis. Within one, the direct children
// author, title and year are collected (markup nested inside a title is
// dropped, its text kept). Entities for accented characters are decoded.
// Records without authors or with an out-of-range year are skipped and
// counted. Malformed XML raises parse_error with the byte offset.
class DblpParser {
public:
    explicit DblpParser(std::istream& in);

    std::optional<PaperRecord> next();

    const SkipReport& skip_report() const { return skip_; }
    size_t max_buffer_bytes() const { return max_buffer_; }

private:
    bool refill();
    void fail(const std::string& msg, uint64_t offset) const;
    std::string decode_text(std::string_view raw, uint64_t offset) const;

    struct Tag {
        std::string name;
        std::vector<std::pair<std::string, std::string>> attrs;
        bool closing = false;
        bool self_closing = false;
    };
    // Parses the tag starting at buf_[pos] (a '<'); returns false if more
    // input is needed.
    bool scan_tag(size_t pos, Tag& tag, size_t& end);

    std::istream& in_;
    std::string buf_;
    size_t consumed_ = 0;     // bytes of buf_ already processed
    uint64_t base_offset_ = 0; // stream offset of buf_[0]
    bool eof_ = false;
    size_t max_buffer_ = 0;

    std::vector<std::string> stack_;
    bool in_publication_ = false;
    size_t pub_depth_ = 0;
    std::string capture_field_; // "author" | "title" | "year" | ""
    size_t capture_depth_ = 0;
    std::string capture_text_;
    PaperRecord current_;
    uint64_t record_seq_ = 0;
    SkipReport skip_;
};

// Convenience wrapper: parse a whole stream into memory.
std::vector<PaperRecord> parse_dblp_stream(std::istream& in, SkipReport* report = nullptr);

} // namespace tn
