#include "tn/dblp_parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <unordered_map>

#include "tn/errors.hpp"

namespace tn {

namespace {

constexpr size_t kChunkSize = 64 * 1024;

constexpr std::array<const char*, 7> kPublicationElements = {
    "article", "inproceedings", "proceedings", "book",
    "incollection", "phdthesis", "mastersthesis"};

bool is_publication_element(const std::string& name) {
    return std::find_if(kPublicationElements.begin(), kPublicationElements.end(),
                        [&](const char* e) { return name == e; }) !=
           kPublicationElements.end();
}

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

bool is_name_char(char c) {
    return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
           c == '.';
}

void append_utf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// The accented-character entities DBLP files actually use (the ISO Latin set
// from its DTD) plus the XML builtins.
const std::unordered_map<std::string, uint32_t>& entity_table() {
    static const std::unordered_map<std::string, uint32_t> table = {
        {"amp", '&'},      {"lt", '<'},       {"gt", '>'},       {"quot", '"'},
        {"apos", '\''},    {"nbsp", 0xA0},    {"iexcl", 0xA1},   {"cent", 0xA2},
        {"pound", 0xA3},   {"curren", 0xA4},  {"yen", 0xA5},     {"brvbar", 0xA6},
        {"sect", 0xA7},    {"uml", 0xA8},     {"copy", 0xA9},    {"ordf", 0xAA},
        {"laquo", 0xAB},   {"not", 0xAC},     {"shy", 0xAD},     {"reg", 0xAE},
        {"macr", 0xAF},    {"deg", 0xB0},     {"plusmn", 0xB1},  {"sup2", 0xB2},
        {"sup3", 0xB3},    {"acute", 0xB4},   {"micro", 0xB5},   {"para", 0xB6},
        {"middot", 0xB7},  {"cedil", 0xB8},   {"sup1", 0xB9},    {"ordm", 0xBA},
        {"raquo", 0xBB},   {"frac14", 0xBC},  {"frac12", 0xBD},  {"frac34", 0xBE},
        {"iquest", 0xBF},  {"Agrave", 0xC0},  {"Aacute", 0xC1},  {"Acirc", 0xC2},
        {"Atilde", 0xC3},  {"Auml", 0xC4},    {"Aring", 0xC5},   {"AElig", 0xC6},
        {"Ccedil", 0xC7},  {"Egrave", 0xC8},  {"Eacute", 0xC9},  {"Ecirc", 0xCA},
        {"Euml", 0xCB},    {"Igrave", 0xCC},  {"Iacute", 0xCD},  {"Icirc", 0xCE},
        {"Iuml", 0xCF},    {"ETH", 0xD0},     {"Ntilde", 0xD1},  {"Ograve", 0xD2},
        {"Oacute", 0xD3},  {"Ocirc", 0xD4},   {"Otilde", 0xD5},  {"Ouml", 0xD6},
        {"times", 0xD7},   {"Oslash", 0xD8},  {"Ugrave", 0xD9},  {"Uacute", 0xDA},
        {"Ucirc", 0xDB},   {"Uuml", 0xDC},    {"Yacute", 0xDD},  {"THORN", 0xDE},
        {"szlig", 0xDF},   {"agrave", 0xE0},  {"aacute", 0xE1},  {"acirc", 0xE2},
        {"atilde", 0xE3},  {"auml", 0xE4},    {"aring", 0xE5},   {"aelig", 0xE6},
        {"ccedil", 0xE7},  {"egrave", 0xE8},  {"eacute", 0xE9},  {"ecirc", 0xEA},
        {"euml", 0xEB},    {"igrave", 0xEC},  {"iacute", 0xED},  {"icirc", 0xEE},
        {"iuml", 0xEF},    {"eth", 0xF0},     {"ntilde", 0xF1},  {"ograve", 0xF2},
        {"oacute", 0xF3},  {"ocirc", 0xF4},   {"otilde", 0xF5},  {"ouml", 0xF6},
        {"divide", 0xF7},  {"oslash", 0xF8},  {"ugrave", 0xF9},  {"uacute", 0xFA},
        {"ucirc", 0xFB},   {"uuml", 0xFC},    {"yacute", 0xFD},  {"thorn", 0xFE},
        {"yuml", 0xFF},    {"OElig", 0x152},  {"oelig", 0x153},  {"Scaron", 0x160},
        {"scaron", 0x161}, {"Yuml", 0x178},
    };
    return table;
}

} // namespace

DblpParser::DblpParser(std::istream& in) : in_(in) {}

void DblpParser::fail(const std::string& msg, uint64_t offset) const {
    throw parse_error(msg, offset);
}

bool DblpParser::refill() {
    if (eof_) return false;
    if (consumed_ > 0) {
        buf_.erase(0, consumed_);
        base_offset_ += consumed_;
        consumed_ = 0;
    }
    const size_t old = buf_.size();
    buf_.resize(old + kChunkSize);
    in_.read(buf_.data() + old, kChunkSize);
    const size_t got = static_cast<size_t>(in_.gcount());
    buf_.resize(old + got);
    max_buffer_ = std::max(max_buffer_, buf_.size());
    if (got == 0) eof_ = true;
    return got > 0;
}

std::string DblpParser::decode_text(std::string_view raw, uint64_t offset) const {
    std::string out;
    out.reserve(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] != '&') {
            out.push_back(raw[i]);
            continue;
        }
        const size_t end = raw.find(';', i + 1);
        if (end == std::string_view::npos || end == i + 1 || end - i > 12)
            fail("unterminated entity reference", offset + i);
        const std::string_view name = raw.substr(i + 1, end - i - 1);
        if (name[0] == '#') {
            uint32_t cp = 0;
            bool ok = name.size() > 1;
            if (name[1] == 'x' || name[1] == 'X') {
                ok = name.size() > 2;
                for (size_t k = 2; ok && k < name.size(); ++k) {
                    const char c = name[k];
                    cp <<= 4;
                    if (c >= '0' && c <= '9') cp |= c - '0';
                    else if (c >= 'a' && c <= 'f') cp |= c - 'a' + 10;
                    else if (c >= 'A' && c <= 'F') cp |= c - 'A' + 10;
                    else ok = false;
                }
            } else {
                for (size_t k = 1; ok && k < name.size(); ++k) {
                    const char c = name[k];
                    if (c < '0' || c > '9') ok = false;
                    cp = cp * 10 + static_cast<uint32_t>(c - '0');
                }
            }
            if (!ok || cp > 0x10FFFF) fail("bad numeric character reference", offset + i);
            append_utf8(out, cp);
        } else {
            const auto& table = entity_table();
            const auto it = table.find(std::string(name));
            if (it == table.end())
                fail("unknown entity &" + std::string(name) + ";", offset + i);
            append_utf8(out, it->second);
        }
        i = end;
    }
    return out;
}

bool DblpParser::scan_tag(size_t pos, Tag& tag, size_t& end) {
    // pos indexes a '<' in buf_. Returns false when buf_ ends mid-tag.
    size_t i = pos + 1;
    auto need = [&](size_t k) { return k < buf_.size(); };
    if (!need(i)) return false;

    if (buf_[i] == '?' || buf_[i] == '!') {
        // Processing instruction, comment, DOCTYPE or CDATA: skipped wholesale
        // (CDATA never appears inside the fields this parser collects).
        std::string_view closer = ">";
        if (buf_.compare(i, 3, "!--") == 0) closer = "-->";
        else if (buf_.compare(i, 8, "![CDATA[") == 0) closer = "]]>";
        size_t depth_brackets = 0;
        for (size_t k = i; k + closer.size() <= buf_.size() + 1; ++k) {
            if (!need(k)) return false;
            if (closer == ">") {
                if (buf_[k] == '[') ++depth_brackets;
                else if (buf_[k] == ']' && depth_brackets) --depth_brackets;
                else if (buf_[k] == '>' && !depth_brackets) {
                    tag.name.clear(); // marker: nothing to handle
                    end = k + 1;
                    return true;
                }
            } else if (buf_.compare(k, closer.size(), closer) == 0) {
                tag.name.clear();
                end = k + closer.size();
                return true;
            }
        }
        return false;
    }

    tag.closing = buf_[i] == '/';
    if (tag.closing) ++i;
    if (!need(i)) return false;
    if (!is_name_start(buf_[i]))
        fail("malformed tag", base_offset_ + pos);
    const size_t name_start = i;
    while (need(i) && is_name_char(buf_[i])) ++i;
    if (!need(i)) return false;
    tag.name.assign(buf_, name_start, i - name_start);
    tag.attrs.clear();
    tag.self_closing = false;

    for (;;) {
        while (need(i) && std::isspace(static_cast<unsigned char>(buf_[i]))) ++i;
        if (!need(i)) return false;
        if (buf_[i] == '>') {
            end = i + 1;
            return true;
        }
        if (buf_[i] == '/') {
            if (!need(i + 1)) return false;
            if (buf_[i + 1] != '>') fail("malformed tag", base_offset_ + i);
            tag.self_closing = true;
            end = i + 2;
            return true;
        }
        if (tag.closing) fail("malformed closing tag", base_offset_ + i);
        if (!is_name_start(buf_[i])) fail("malformed attribute", base_offset_ + i);
        const size_t attr_start = i;
        while (need(i) && is_name_char(buf_[i])) ++i;
        if (!need(i)) return false;
        std::string attr_name(buf_, attr_start, i - attr_start);
        while (need(i) && std::isspace(static_cast<unsigned char>(buf_[i]))) ++i;
        if (!need(i)) return false;
        if (buf_[i] != '=') fail("attribute without value", base_offset_ + i);
        ++i;
        while (need(i) && std::isspace(static_cast<unsigned char>(buf_[i]))) ++i;
        if (!need(i)) return false;
        const char q = buf_[i];
        if (q != '"' && q != '\'') fail("unquoted attribute value", base_offset_ + i);
        const size_t val_start = ++i;
        while (need(i) && buf_[i] != q) ++i;
        if (!need(i)) return false;
        tag.attrs.emplace_back(std::move(attr_name),
                               decode_text({buf_.data() + val_start, i - val_start},
                                           base_offset_ + val_start));
        ++i;
    }
}

std::optional<PaperRecord> DblpParser::next() {
    for (;;) {
        const size_t lt = buf_.find('<', consumed_);
        if (lt == std::string::npos) {
            // Pure character data: consume it now so the buffer stays small.
            if (buf_.size() > consumed_) {
                if (!capture_field_.empty())
                    capture_text_.append(buf_, consumed_, buf_.size() - consumed_);
                consumed_ = buf_.size();
            }
            if (!refill()) {
                if (in_publication_ || !stack_.empty())
                    fail("unexpected end of input inside <" +
                             (stack_.empty() ? "?" : stack_.back()) + ">",
                         base_offset_ + buf_.size());
                return std::nullopt;
            }
            continue;
        }

        if (lt > consumed_) {
            if (!capture_field_.empty())
                capture_text_.append(buf_, consumed_, lt - consumed_);
            consumed_ = lt;
        }

        Tag tag;
        size_t tag_end = 0;
        if (!scan_tag(consumed_, tag, tag_end)) {
            if (!refill())
                fail("unterminated tag", base_offset_ + consumed_);
            continue;
        }
        const uint64_t tag_offset = base_offset_ + consumed_;
        consumed_ = tag_end;

        if (tag.name.empty()) continue; // PI/comment/DOCTYPE/CDATA handled in scan_tag

        if (!tag.closing) {
            if (!tag.self_closing) stack_.push_back(tag.name);
            if (!in_publication_ && is_publication_element(tag.name)) {
                if (tag.self_closing) {
                    ++skip_.skipped_no_authors;
                    continue;
                }
                in_publication_ = true;
                pub_depth_ = stack_.size();
                current_ = PaperRecord{};
                ++record_seq_;
                current_.paper_id = "rec" + std::to_string(record_seq_);
                for (auto& [k, v] : tag.attrs)
                    if (k == "key") current_.paper_id = v;
            } else if (in_publication_ && stack_.size() == pub_depth_ + 1 &&
                       !tag.self_closing &&
                       (tag.name == "author" || tag.name == "title" || tag.name == "year")) {
                capture_field_ = tag.name;
                capture_depth_ = stack_.size();
                capture_text_.clear();
            } else if (in_publication_ && is_publication_element(tag.name)) {
                fail("nested publication element <" + tag.name + ">", tag_offset);
            }
        } else {
            if (stack_.empty() || stack_.back() != tag.name)
                fail("mismatched closing tag </" + tag.name + ">", tag_offset);
            stack_.pop_back();

            if (!capture_field_.empty() && stack_.size() < capture_depth_) {
                const std::string text = decode_text(capture_text_, tag_offset);
                if (capture_field_ == "author") {
                    const bool dup = std::find(current_.author_keys.begin(),
                                               current_.author_keys.end(),
                                               text) != current_.author_keys.end();
                    if (dup) ++skip_.duplicate_authors_removed;
                    else if (!text.empty()) current_.author_keys.push_back(text);
                } else if (capture_field_ == "title") {
                    current_.title = text;
                } else if (capture_field_ == "year") {
                    current_.year = std::atoi(text.c_str());
                }
                capture_field_.clear();
                capture_text_.clear();
            }

            if (in_publication_ && stack_.size() < pub_depth_) {
                in_publication_ = false;
                if (current_.author_keys.empty()) {
                    ++skip_.skipped_no_authors;
                } else if (current_.year < kMinYear || current_.year > kMaxYear) {
                    ++skip_.skipped_bad_year;
                } else {
                    ++skip_.records_emitted;
                    return std::move(current_);
                }
            }
        }
    }
}

std::vector<PaperRecord> parse_dblp_stream(std::istream& in, SkipReport* report) {
    DblpParser parser(in);
    std::vector<PaperRecord> records;
    while (auto rec = parser.next()) records.push_back(std::move(*rec));
    if (report) *report = parser.skip_report();
    return records;
}

} // namespace tn
