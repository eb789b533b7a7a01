#include "tn/jsonl.hpp"

#include <string>

#include "json.hpp"
#include "tn/errors.hpp"

namespace tn {

namespace {

[[noreturn]] void fail_line(uint64_t line, const std::string& msg) {
    throw parse_error("line " + std::to_string(line) + ": " + msg);
}

} // namespace

std::optional<PaperRecord> JsonlParser::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            fail_line(line_, std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object()) fail_line(line_, "expected a JSON object");

        PaperRecord rec;
        auto require = [&](const char* field) -> const nlohmann::json& {
            auto it = obj.find(field);
            if (it == obj.end()) fail_line(line_, std::string("missing required field '") + field + "'");
            return *it;
        };

        const auto& id = require("id");
        if (id.is_string()) rec.paper_id = id.get<std::string>();
        else if (id.is_number_integer()) rec.paper_id = std::to_string(id.get<long long>());
        else fail_line(line_, "field 'id' must be a string");

        const auto& title = require("title");
        if (!title.is_string()) fail_line(line_, "field 'title' must be a string");
        rec.title = title.get<std::string>();

        const auto& year = require("year");
        if (!year.is_number_integer()) fail_line(line_, "field 'year' must be an integer");
        rec.year = year.get<int>();

        const auto& authors = require("authors");
        if (!authors.is_array()) fail_line(line_, "field 'authors' must be a list of strings");
        for (const auto& a : authors) {
            if (!a.is_string()) fail_line(line_, "field 'authors' must be a list of strings");
            const auto key = a.get<std::string>();
            if (std::find(rec.author_keys.begin(), rec.author_keys.end(), key) !=
                rec.author_keys.end())
                ++skip_.duplicate_authors_removed;
            else
                rec.author_keys.push_back(key);
        }

        if (auto it = obj.find("n_citation"); it != obj.end()) {
            if (!it->is_number_integer() || it->get<long long>() < 0)
                fail_line(line_, "field 'n_citation' must be a non-negative integer");
            rec.citation_count = it->get<long long>();
        }

        if (rec.author_keys.empty()) {
            ++skip_.skipped_no_authors;
            continue;
        }
        if (rec.year < kMinYear || rec.year > kMaxYear) {
            ++skip_.skipped_bad_year;
            continue;
        }
        ++skip_.records_emitted;
        return rec;
    }
    return std::nullopt;
}

std::vector<PaperRecord> parse_jsonl(std::istream& in, SkipReport* report) {
    JsonlParser parser(in);
    std::vector<PaperRecord> records;
    while (auto rec = parser.next()) records.push_back(std::move(*rec));
    if (report) *report = parser.skip_report();
    return records;
}

void write_jsonl_record(std::ostream& out, const PaperRecord& rec) {
    nlohmann::ordered_json obj;
    obj["id"] = rec.paper_id;
    obj["title"] = rec.title;
    obj["year"] = rec.year;
    obj["authors"] = rec.author_keys;
    obj["n_citation"] = rec.citation_count;
    out << obj.dump() << '\n';
}

} // namespace tn
