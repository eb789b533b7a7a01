#include "tn/scholar_table.hpp"

#include <cctype>

namespace tn {

std::string display_name_for_key(const std::string& author_key) {
    // "Wei Wang 0001" -> "Wei Wang"
    if (author_key.size() > 5) {
        const size_t sp = author_key.size() - 5;
        if (author_key[sp] == ' ') {
            bool digits = true;
            for (size_t i = sp + 1; i < author_key.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(author_key[i]))) digits = false;
            if (digits) return author_key.substr(0, sp);
        }
    }
    return author_key;
}

void AuthorResolver::add(const PaperRecord& rec) {
    ResolvedPaper paper;
    paper.paper_id = rec.paper_id;
    paper.year = rec.year;
    paper.citation_count = rec.citation_count;
    paper.authors.reserve(rec.author_keys.size());
    for (const auto& key : rec.author_keys) {
        auto [it, inserted] = key_to_id_.try_emplace(key, static_cast<uint32_t>(scholars_.size()));
        if (inserted) {
            ScholarProfile p;
            p.scholar_id = it->second;
            p.author_key = key;
            p.display_name = display_name_for_key(key);
            scholars_.push_back(std::move(p));
        }
        auto& profile = scholars_[it->second];
        ++profile.n_papers;
        profile.n_citations += rec.citation_count;
        paper.authors.push_back(it->second);
    }
    if (keep_papers_) papers_.push_back(std::move(paper));
}

ResolvedCorpus AuthorResolver::finish() && {
    return {std::move(scholars_), std::move(papers_)};
}

ResolvedCorpus resolve_authors(std::span<const PaperRecord> papers) {
    AuthorResolver r;
    for (const auto& p : papers) r.add(p);
    return std::move(r).finish();
}

} // namespace tn
