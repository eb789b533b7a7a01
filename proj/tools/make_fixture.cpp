// Generates the bundled synthetic test corpus: 500 scholars arranged in rings
// around 5 designated laureates, with productivity, citations and h-index all
// falling off with ring depth so the TN correlations come out strongly
// negative. Fully deterministic; regenerating produces identical bytes.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tn/det_rng.hpp"

using tn::SplitMix64;
using tn::bounded;

namespace {

struct Scholar {
    std::string key;     // "First Last NNNN"
    std::string name;    // "First Last"
    int ring = 0;        // 0 = laureate, -1 = isolated
    std::string institution; // raw affiliation text, may be empty
};

struct Paper {
    std::string id;
    std::string title;
    int year = 0;
    std::vector<uint32_t> authors; // indices into the scholar list
    long long citations = 0;
};

const char* kFirst[] = {"Ada",   "Boris", "Chen",  "Dara",  "Emeka",  "Farah",
                        "Goran", "Hana",  "Ivan",  "Jun",   "Kira",   "Luis",
                        "Mei",   "Noor",  "Olga",  "Priya", "Quinn",  "Rosa",
                        "Sofia", "Tomas", "Uma",   "Viktor", "Wei",   "Yuki"};
const char* kLast[] = {"Abadi",    "Bravo",    "Cheng",  "Dimitrov", "Eriksen",
                       "Fontaine", "Garcia",   "Hoffmann", "Ivanova", "Jansen",
                       "Kato",     "Lindgren", "Moreau", "Novak",    "Okafor",
                       "Petrov",   "Quiroga",  "Rossi",  "Sato",     "Tanaka",
                       "Uddin",    "Vargas",   "Weber",  "Xu"};

// Laureate names, kept out of the general pools so display names stay unique.
const char* kLaureateNames[] = {"Grace Mirzakhani", "Alan Perlman", "Barbara Hopper",
                                "Edsger Knuthsen", "Radia Hamming"};

struct Institution {
    const char* pattern; // geocode pattern
    const char* country;
    double lat, lon;
};

const Institution kInstitutions[] = {
    {"Dataland Institute of Technology", "United States", 42.36, -71.09},
    {"Bayview University", "United States", 37.87, -122.26},
    {"University of Bayview, Port Campus", "United States", 37.80, -122.41},
    {"Northern Polytechnic", "Canada", 43.66, -79.39},
    {"Rhein Technische Hochschule", "Germany", 50.78, 6.08},
    {"Universite de la Seine", "France", 48.85, 2.35},
    {"Thames College", "United Kingdom", 51.50, -0.12},
    {"Dongfang University", "China", 39.99, 116.31},
    {"Sakura Institute", "Japan", 35.71, 139.76},
    {"Amazonia Federal University", "Brazil", -23.55, -46.63},
    {"Hangang National University", "South Korea", 37.46, 126.95},
    {"Collina Politecnico", "Italy", 45.06, 7.66},
    {"Indus Institute of Science", "India", 13.02, 77.57},
};

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream out(p, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << p << '\n';
        std::exit(2);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    const std::filesystem::path out_dir = argc > 1 ? argv[1] : "tests/fixtures";
    std::filesystem::create_directories(out_dir);
    SplitMix64 rng(0x7E571F1C57A71C5ULL);

    // ---- scholars: rings 0..5 plus a few isolated nodes
    const uint32_t ring_sizes[] = {5, 40, 150, 200, 80, 20};
    const uint32_t n_isolated = 5;

    std::vector<Scholar> scholars;
    std::vector<std::vector<uint32_t>> by_ring(6);
    for (int ring = 0; ring <= 5; ++ring) {
        for (uint32_t i = 0; i < ring_sizes[ring]; ++i) {
            Scholar s;
            if (ring == 0) {
                s.name = kLaureateNames[i];
            } else {
                s.name = std::string(kFirst[bounded(rng, std::size(kFirst))]) + " " +
                         kLast[bounded(rng, std::size(kLast))];
            }
            s.key = s.name + " " + std::to_string(1000 + scholars.size());
            s.ring = ring;
            by_ring[ring].push_back(static_cast<uint32_t>(scholars.size()));
            scholars.push_back(std::move(s));
        }
    }
    for (uint32_t i = 0; i < n_isolated; ++i) {
        Scholar s;
        s.name = std::string(kFirst[bounded(rng, std::size(kFirst))]) + " " +
                 kLast[bounded(rng, std::size(kLast))];
        s.key = s.name + " " + std::to_string(1000 + scholars.size());
        s.ring = -1;
        scholars.push_back(std::move(s));
    }

    // ---- affiliations: ~90% of scholars carry one; a handful unmatched
    for (auto& s : scholars) {
        const uint64_t roll = bounded(rng, 100);
        if (roll < 84) {
            const auto& inst = kInstitutions[bounded(rng, std::size(kInstitutions))];
            const char* prefixes[] = {"Dept. of Computer Science, ", "School of Computing, ",
                                      "", "Graduate School, "};
            s.institution = std::string(prefixes[bounded(rng, 4)]) + inst.pattern;
        } else if (roll < 90) {
            s.institution = "Unlisted Research Lab " + std::to_string(bounded(rng, 50));
        } // else: no affiliation row at all
    }

    // ---- papers
    std::vector<Paper> papers;
    auto cites_for_ring = [&](int ring) -> long long {
        // geometric-ish, mean falling with ring depth
        static const double mean[] = {60, 35, 15, 6, 2, 1};
        const double m = ring < 0 ? 0.5 : mean[ring];
        double c = 0;
        while (tn::uniform01(rng) > 1.0 / (m + 1.0)) ++c;
        return static_cast<long long>(c);
    };
    auto add_paper = [&](std::vector<uint32_t> authors, int ring) {
        Paper p;
        p.id = "fix" + std::to_string(papers.size());
        p.title = "Synthetic study no. " + std::to_string(papers.size());
        p.year = 1970 + static_cast<int>(bounded(rng, 51));
        p.authors = std::move(authors);
        p.citations = cites_for_ring(ring);
        papers.push_back(std::move(p));
    };
    auto pick_partner = [&](int ring, uint32_t self) {
        // same ring or the ring one step closer to the laureates
        const auto& same = by_ring[ring];
        const auto& up = by_ring[ring > 0 ? ring - 1 : 0];
        for (;;) {
            const bool go_up = ring > 0 && bounded(rng, 100) < 35;
            const auto& pool = go_up ? up : same;
            const uint32_t pick = pool[bounded(rng, pool.size())];
            if (pick != self) return pick;
        }
    };

    const uint32_t papers_base[] = {25, 18, 10, 5, 2, 1};
    const uint32_t papers_jitter[] = {11, 9, 7, 5, 3, 2};
    for (int ring = 0; ring <= 5; ++ring) {
        for (uint32_t v : by_ring[ring]) {
            // one guaranteed link into the next ring inward
            if (ring > 0) {
                const auto& up = by_ring[ring - 1];
                const uint32_t parent = up[bounded(rng, up.size())];
                add_paper({parent, v}, ring);
            }
            const uint32_t extra = papers_base[ring] + bounded(rng, papers_jitter[ring]);
            for (uint32_t i = 0; i < extra; ++i) {
                std::vector<uint32_t> authors{v};
                const uint32_t coauthors = bounded(rng, 100) < 15 ? 0 : 1 + bounded(rng, 3);
                while (authors.size() < coauthors + 1) {
                    const uint32_t w = pick_partner(ring, v);
                    if (std::find(authors.begin(), authors.end(), w) == authors.end())
                        authors.push_back(w);
                }
                add_paper(std::move(authors), ring);
            }
        }
    }
    for (uint32_t v = 0; v < scholars.size(); ++v) {
        if (scholars[v].ring != -1) continue;
        const uint32_t solo = 1 + bounded(rng, 2);
        for (uint32_t i = 0; i < solo; ++i) add_paper({v}, -1);
    }

    // deterministic shuffle so scholar ids are not ring-ordered
    for (size_t i = papers.size(); i > 1; --i)
        std::swap(papers[i - 1], papers[bounded(rng, i)]);

    // ---- corpus.jsonl (with a couple of records the parser must skip)
    {
        auto out = open_out(out_dir / "corpus.jsonl");
        size_t emitted = 0;
        for (const auto& p : papers) {
            if (emitted == 100)
                out << R"({"id":"skip-a","title":"no authors","year":2000,"authors":[]})"
                    << '\n';
            if (emitted == 200)
                out << R"({"id":"skip-b","title":"bad year","year":1789,"authors":["Ghost Writer 9999"]})"
                    << '\n';
            nlohmann::ordered_json j;
            j["id"] = p.id;
            j["title"] = p.title;
            j["year"] = p.year;
            auto names = nlohmann::ordered_json::array();
            for (uint32_t a : p.authors) names.push_back(scholars[a].key);
            j["authors"] = names;
            j["n_citation"] = p.citations;
            out << j.dump() << '\n';
            ++emitted;
        }
    }

    // ---- laureates.txt: three by display name, two by full key
    {
        auto out = open_out(out_dir / "laureates.txt");
        out << "# Designated laureates for the synthetic corpus\n";
        out << scholars[by_ring[0][0]].name << '\n';
        out << scholars[by_ring[0][1]].name << '\n';
        out << scholars[by_ring[0][2]].name << '\n';
        out << "# the remaining two by exact key\n";
        out << scholars[by_ring[0][3]].key << '\n';
        out << scholars[by_ring[0][4]].key << '\n';
    }

    // ---- geocode.csv
    {
        auto out = open_out(out_dir / "geocode.csv");
        out << "pattern,country,lat,lon\n";
        for (const auto& inst : kInstitutions) {
            std::string pattern(inst.pattern);
            if (pattern.find(',') != std::string::npos) pattern = '"' + pattern + '"';
            out << pattern << ',' << inst.country << ',' << inst.lat << ',' << inst.lon
                << '\n';
        }
    }

    // ---- affiliations.csv (one duplicate row on purpose)
    {
        auto out = open_out(out_dir / "affiliations.csv");
        out << "author_key,institution\n";
        auto quote = [](const std::string& s) {
            if (s.find(',') == std::string::npos) return s;
            return '"' + s + '"';
        };
        bool duplicated = false;
        for (const auto& s : scholars) {
            if (s.institution.empty()) continue;
            out << quote(s.key) << ',' << quote(s.institution) << '\n';
            if (!duplicated && s.ring == 2) {
                out << quote(s.key) << ',' << quote(s.institution) << '\n'; // last write wins
                duplicated = true;
            }
        }
    }

    // ---- pipeline.cfg (paths relative to the fixture directory)
    {
        auto out = open_out(out_dir / "pipeline.cfg");
        out << "# Synthetic-corpus pipeline configuration\n"
               "input = corpus.jsonl\n"
               "format = jsonl\n"
               "laureates = laureates.txt\n"
               "geocode = geocode.csv\n"
               "affiliations = affiliations.csv\n"
               "out_dir = out\n"
               "clique_guard = 500\n"
               "null_trials = 100\n"
               "rng_seed = 42\n"
               "measures = degree,closeness,betweenness,eigenvector,load\n"
               "betweenness_samples = 0\n"
               "indicators = n_papers,n_citations,h_index\n"
               "fig3_stat = mean\n"
               "top_countries = 11\n";
    }

    std::cout << "fixture: " << scholars.size() << " scholars, " << papers.size()
              << " papers -> " << out_dir.string() << '\n';
    return 0;
}
