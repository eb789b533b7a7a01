// Command-line surface for the coauthorship/laureate-distance toolkit:
// ingest -> graph -> tn -> centrality -> stats -> reports, plus a `pipeline`
// command that runs the lot from one config file with reproducible outputs.

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "tn/bibliometrics.hpp"
#include "tn/centrality.hpp"
#include "tn/csv.hpp"
#include "tn/dblp_parser.hpp"
#include "tn/errors.hpp"
#include "tn/geocode.hpp"
#include "tn/graph.hpp"
#include "tn/graph_io.hpp"
#include "tn/jsonl.hpp"
#include "tn/laureates.hpp"
#include "tn/scholar_table.hpp"
#include "tn/stats.hpp"
#include "tn/tables_io.hpp"
#include "tn/turing_number.hpp"

namespace fs = std::filesystem;
using namespace tn;

namespace {

constexpr const char* kToolVersion = "1.0.0";

// ---------------------------------------------------------------- logging

enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

LogLevel g_log_level = LogLevel::warn;

void init_log_level() {
    const char* env = std::getenv("TN_LOG");
    if (!env) return;
    const std::string v(env);
    if (v == "error") g_log_level = LogLevel::error;
    else if (v == "warn") g_log_level = LogLevel::warn;
    else if (v == "info") g_log_level = LogLevel::info;
    else if (v == "debug") g_log_level = LogLevel::debug;
}

void log_at(LogLevel level, const std::string& msg) {
    if (level > g_log_level) return;
    const char* tag = level == LogLevel::error ? "error"
                      : level == LogLevel::warn ? "warn"
                      : level == LogLevel::info ? "info"
                                                : "debug";
    std::cerr << "tn: " << tag << ": " << msg << '\n';
}

void log_warn(const std::string& msg) { log_at(LogLevel::warn, msg); }
void log_info(const std::string& msg) { log_at(LogLevel::info, msg); }

// ---------------------------------------------------------------- files

std::ifstream open_input(const fs::path& path, bool binary = false) {
    std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
    if (!in) throw io_error("cannot open for reading: " + path.string());
    return in;
}

// Tracks files created by the current command so a failed run removes its
// partial outputs.
struct OutputTracker {
    std::vector<fs::path> written;
    bool keep = false;

    ~OutputTracker() {
        if (keep) return;
        for (const auto& p : written) {
            std::error_code ec;
            fs::remove(p, ec);
        }
    }
};

std::ofstream open_output(const fs::path& path, OutputTracker& tracker) {
    std::ofstream out(path, std::ios::binary); // pin "\n" on every platform
    if (!out) throw io_error("cannot open for writing: " + path.string());
    tracker.written.push_back(path);
    return out;
}

uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 0xCBF29CE484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ULL;
    }
    return h;
}

uint64_t hash_file(const fs::path& path, uint64_t h) {
    auto in = open_input(path, true);
    char buf[65536];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0)
        h = fnv1a64(buf, static_cast<size_t>(in.gcount()), h);
    return h;
}

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// ---------------------------------------------------------------- config

struct RunConfig {
    std::string input;
    std::string format = "jsonl"; // jsonl | dblp
    std::string laureates;
    std::string geocode;
    std::string affiliations;
    std::string out_dir = "out";
    uint32_t clique_guard = 500;
    uint32_t khop_radius = 0; // 0 = whole graph
    uint32_t null_k = 0;      // 0 = laureate count
    uint32_t null_trials = 100;
    uint64_t rng_seed = 42;
    bool null_exclude_seeds = false;
    std::string measures = "degree,closeness,betweenness,eigenvector,load";
    uint32_t betweenness_samples = 0; // 0 = exact
    double eigen_tolerance = 1e-10;
    uint32_t eigen_max_iters = 1000;
    std::string indicators = "n_papers,n_citations,h_index";
    std::string fig3_stat = "mean";
    uint32_t top_countries = 11;
};

std::vector<std::string> split_list(const std::string& csv_list) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv_list) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::map<std::string, std::string> parse_config_file(const fs::path& path) {
    auto in = open_input(path);
    std::map<std::string, std::string> kv;
    std::string line;
    uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw parse_error("config line " + std::to_string(line_no) +
                                  ": expected key = value");
            continue;
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string();
            const auto b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw parse_error("config line " + std::to_string(line_no) + ": empty key");
        kv[key] = value;
    }
    return kv;
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    auto as_u32 = [&](const std::string& v) {
        try {
            return static_cast<uint32_t>(std::stoul(v));
        } catch (...) {
            throw validation_error("config key '" + key + "': bad integer '" + v + "'");
        }
    };
    auto as_bool = [&](const std::string& v) {
        if (v == "true" || v == "1") return true;
        if (v == "false" || v == "0") return false;
        throw validation_error("config key '" + key + "': bad boolean '" + v + "'");
    };
    if (key == "input") cfg.input = value;
    else if (key == "format") cfg.format = value;
    else if (key == "laureates") cfg.laureates = value;
    else if (key == "geocode") cfg.geocode = value;
    else if (key == "affiliations") cfg.affiliations = value;
    else if (key == "out_dir") cfg.out_dir = value;
    else if (key == "clique_guard") cfg.clique_guard = as_u32(value);
    else if (key == "khop_radius") cfg.khop_radius = as_u32(value);
    else if (key == "null_k") cfg.null_k = as_u32(value);
    else if (key == "null_trials") cfg.null_trials = as_u32(value);
    else if (key == "rng_seed") cfg.rng_seed = std::stoull(value);
    else if (key == "null_exclude_seeds") cfg.null_exclude_seeds = as_bool(value);
    else if (key == "measures") cfg.measures = value;
    else if (key == "betweenness_samples") cfg.betweenness_samples = as_u32(value);
    else if (key == "eigen_tolerance") cfg.eigen_tolerance = std::stod(value);
    else if (key == "eigen_max_iters") cfg.eigen_max_iters = as_u32(value);
    else if (key == "indicators") cfg.indicators = value;
    else if (key == "fig3_stat") cfg.fig3_stat = value;
    else if (key == "top_countries") cfg.top_countries = as_u32(value);
    else throw validation_error("unknown config key '" + key + "'");
}

std::string canonical_config(const RunConfig& c) {
    std::ostringstream out;
    out << "affiliations=" << c.affiliations << '\n'
        << "betweenness_samples=" << c.betweenness_samples << '\n'
        << "clique_guard=" << c.clique_guard << '\n'
        << "eigen_max_iters=" << c.eigen_max_iters << '\n'
        << "eigen_tolerance=" << csv::fmt_real(c.eigen_tolerance) << '\n'
        << "fig3_stat=" << c.fig3_stat << '\n'
        << "format=" << c.format << '\n'
        << "geocode=" << c.geocode << '\n'
        << "indicators=" << c.indicators << '\n'
        << "input=" << c.input << '\n'
        << "khop_radius=" << c.khop_radius << '\n'
        << "laureates=" << c.laureates << '\n'
        << "measures=" << c.measures << '\n'
        << "null_exclude_seeds=" << (c.null_exclude_seeds ? "true" : "false") << '\n'
        << "null_k=" << c.null_k << '\n'
        << "null_trials=" << c.null_trials << '\n'
        << "rng_seed=" << c.rng_seed << '\n'
        << "top_countries=" << c.top_countries << '\n';
    return out.str();
}

std::vector<Measure> parse_measures(const std::string& list) {
    std::vector<Measure> measures;
    for (const auto& name : split_list(list)) {
        const auto m = measure_from_string(name);
        if (!m) throw validation_error("unknown centrality measure '" + name + "'");
        if (std::find(measures.begin(), measures.end(), *m) == measures.end())
            measures.push_back(*m);
    }
    if (measures.empty()) throw validation_error("no centrality measures selected");
    return measures;
}

void validate_config(const RunConfig& cfg) {
    if (cfg.input.empty()) throw validation_error("no input corpus given");
    if (cfg.format != "jsonl" && cfg.format != "dblp")
        throw validation_error("format must be jsonl or dblp, got '" + cfg.format + "'");
    if (cfg.laureates.empty()) throw validation_error("no laureate list given");
    for (const std::string& p : {cfg.input, cfg.laureates}) {
        if (!fs::exists(p)) throw validation_error("input path does not exist: " + p);
    }
    for (const std::string& p : {cfg.geocode, cfg.affiliations}) {
        if (!p.empty() && !fs::exists(p))
            throw validation_error("input path does not exist: " + p);
    }
    if (cfg.null_trials < 1) throw validation_error("null_trials must be at least 1");
    (void)parse_measures(cfg.measures);
    for (const auto& ind : split_list(cfg.indicators)) {
        if (ind != "n_papers" && ind != "n_citations" && ind != "h_index")
            throw validation_error("unknown indicator '" + ind + "'");
    }
    if (cfg.fig3_stat != "mean" && cfg.fig3_stat != "median")
        throw validation_error("fig3_stat must be mean or median");
    if (cfg.top_countries < 1) throw validation_error("top_countries must be at least 1");
}

// ---------------------------------------------------------------- corpus I/O

// Streams records from a corpus file, stopping on the first malformed DBLP
// byte or after collecting 10 bad JSON lines.
template <class Fn>
SkipReport for_each_record(const fs::path& path, const std::string& format, Fn fn) {
    auto in = open_input(path, format == "dblp");
    if (format == "dblp") {
        DblpParser parser(in);
        while (auto rec = parser.next()) fn(*rec);
        return parser.skip_report();
    }
    JsonlParser parser(in);
    std::vector<std::string> errors;
    for (;;) {
        try {
            auto rec = parser.next();
            if (!rec) break;
            fn(*rec);
        } catch (const parse_error& e) {
            errors.push_back(e.what());
            if (errors.size() >= 10) break;
        }
    }
    if (!errors.empty()) {
        std::string msg = "corpus has malformed lines:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw parse_error(msg);
    }
    return parser.skip_report();
}

struct KeyIndex {
    std::unordered_map<std::string, uint32_t> key_to_id;

    explicit KeyIndex(const ScholarTable& scholars) {
        key_to_id.reserve(scholars.size());
        for (const auto& s : scholars) key_to_id.emplace(s.author_key, s.scholar_id);
    }

    std::optional<uint32_t> find(const std::string& key) const {
        const auto it = key_to_id.find(key);
        if (it == key_to_id.end()) return std::nullopt;
        return it->second;
    }
};

// ---------------------------------------------------------------- stages

struct IngestOutputs {
    ScholarTable scholars;
    std::vector<uint32_t> laureate_ids;
    SkipReport skip;
    AttachStats attach;
    bool attach_ran = false;
};

IngestOutputs stage_ingest(const RunConfig& cfg, const fs::path& out_dir,
                           OutputTracker& tracker) {
    log_info("ingest: parsing " + cfg.input);
    auto corpus_out = open_output(out_dir / "corpus.jsonl", tracker);
    AuthorResolver resolver(/*keep_papers=*/false);
    const SkipReport skip =
        for_each_record(cfg.input, cfg.format, [&](const PaperRecord& rec) {
            write_jsonl_record(corpus_out, rec);
            resolver.add(rec);
        });
    corpus_out.close();

    IngestOutputs out;
    out.skip = skip;
    auto corpus = std::move(resolver).finish();
    out.scholars = std::move(corpus.scholars);
    log_info("ingest: " + std::to_string(skip.records_emitted) + " records, " +
             std::to_string(out.scholars.size()) + " scholars, " +
             std::to_string(skip.total_skipped()) + " skipped");

    if (!cfg.affiliations.empty() && !cfg.geocode.empty()) {
        auto geo_in = open_input(cfg.geocode);
        const auto geocode = GeocodeTable::from_csv(geo_in);
        auto aff_in = open_input(cfg.affiliations);
        const auto rows = load_affiliations(aff_in);
        out.attach = attach_affiliations(out.scholars, rows, geocode);
        out.attach_ran = true;
        if (out.attach.n_duplicate_rows)
            log_warn(std::to_string(out.attach.n_duplicate_rows) +
                     " duplicate affiliation rows (last write wins)");
        log_info("geocoded " + std::to_string(out.attach.n_matched) + " scholars, " +
                 std::to_string(out.attach.n_missing) + " without a geocode");
    } else if (!cfg.affiliations.empty() || !cfg.geocode.empty()) {
        throw validation_error("affiliations and geocode must be given together");
    }

    if (!cfg.laureates.empty()) {
        auto in = open_input(cfg.laureates);
        out.laureate_ids = load_laureates(in, out.scholars);
        log_info("resolved " + std::to_string(out.laureate_ids.size()) + " laureates");
    }

    auto scholars_out = open_output(out_dir / "scholars.csv", tracker);
    write_scholar_csv(scholars_out, out.scholars);

    auto report_out = open_output(out_dir / "skip_report.json", tracker);
    nlohmann::ordered_json j;
    j["records_emitted"] = skip.records_emitted;
    j["skipped_no_authors"] = skip.skipped_no_authors;
    j["skipped_bad_year"] = skip.skipped_bad_year;
    j["duplicate_authors_removed"] = skip.duplicate_authors_removed;
    if (out.attach_ran) {
        j["geocoded"] = out.attach.n_matched;
        j["missing_geocode"] = out.attach.n_missing;
        j["duplicate_affiliation_rows"] = out.attach.n_duplicate_rows;
        j["unknown_affiliation_keys"] = out.attach.n_unknown_keys;
    }
    report_out << j.dump(2) << '\n';
    return out;
}

// Streams the normalized corpus and hands each paper's resolved author ids to fn.
template <class Fn>
void for_each_paper_ids(const fs::path& corpus, const KeyIndex& index, Fn fn) {
    uint64_t unknown = 0;
    for_each_record(corpus, "jsonl", [&](const PaperRecord& rec) {
        std::vector<uint32_t> ids;
        ids.reserve(rec.author_keys.size());
        for (const auto& key : rec.author_keys) {
            if (auto id = index.find(key)) ids.push_back(*id);
            else ++unknown;
        }
        fn(rec, ids);
    });
    if (unknown) log_info(std::to_string(unknown) + " author keys not in the scholar table");
}

struct GraphOutputs {
    CollabGraph graph;
    BuildStats stats;
};

GraphOutputs build_graph_from_corpus(const fs::path& corpus, const ScholarTable& scholars,
                                     uint32_t clique_guard) {
    const KeyIndex index(scholars);
    std::vector<ResolvedPaper> papers;
    for_each_paper_ids(corpus, index,
                       [&](const PaperRecord& rec, std::vector<uint32_t> ids) {
                           ResolvedPaper p;
                           p.paper_id = rec.paper_id;
                           p.year = rec.year;
                           p.citation_count = rec.citation_count;
                           p.authors = std::move(ids);
                           papers.push_back(std::move(p));
                       });
    GraphOutputs out;
    out.graph = build_graph(papers, static_cast<uint32_t>(scholars.size()),
                            BuildOptions{.clique_guard = clique_guard}, &out.stats);
    if (out.stats.papers_over_guard)
        log_warn(std::to_string(out.stats.papers_over_guard) +
                 " papers over the clique guard were not expanded");
    return out;
}

// Applies k-hop extraction in place: graph, table and laureate ids all shrink
// to the kept node set.
void apply_khop(CollabGraph& graph, ScholarTable& scholars,
                std::vector<uint32_t>& laureate_ids, uint32_t radius) {
    auto sub = extract_khop(graph, laureate_ids, radius);
    ScholarTable kept;
    kept.reserve(sub.orig_id.size());
    std::vector<uint32_t> new_laureates;
    for (uint32_t new_id = 0; new_id < sub.orig_id.size(); ++new_id) {
        ScholarProfile p = scholars[sub.orig_id[new_id]];
        p.scholar_id = new_id;
        if (p.is_laureate) new_laureates.push_back(new_id);
        kept.push_back(std::move(p));
    }
    log_info("k-hop extraction kept " + std::to_string(kept.size()) + " of " +
             std::to_string(scholars.size()) + " scholars");
    graph = std::move(sub.graph);
    scholars = std::move(kept);
    laureate_ids = std::move(new_laureates);
}

std::vector<ScholarMetrics> metrics_from_corpus(const fs::path& corpus,
                                                const ScholarTable& scholars) {
    const KeyIndex index(scholars);
    std::vector<std::vector<long long>> citations(scholars.size());
    for_each_paper_ids(corpus, index,
                       [&](const PaperRecord& rec, const std::vector<uint32_t>& ids) {
                           for (uint32_t id : ids)
                               citations[id].push_back(rec.citation_count);
                       });
    std::vector<ScholarMetrics> metrics(scholars.size());
    for (uint32_t v = 0; v < scholars.size(); ++v) {
        metrics[v].scholar_id = v;
        metrics[v].n_papers = static_cast<int>(citations[v].size());
        for (long long c : citations[v]) metrics[v].n_citations += c;
        metrics[v].h_index = h_index(citations[v]);
    }
    return metrics;
}

std::vector<uint32_t> seeds_from_flags(const ScholarTable& scholars) {
    std::vector<uint32_t> seeds;
    for (const auto& s : scholars)
        if (s.is_laureate) seeds.push_back(s.scholar_id);
    if (seeds.empty())
        throw validation_error("no laureates: pass --laureates or ingest with a laureate list");
    return seeds;
}

std::vector<IndicatorColumn> indicator_columns(const std::string& list,
                                               std::span<const ScholarMetrics> metrics) {
    std::vector<IndicatorColumn> cols;
    for (const auto& name : split_list(list)) {
        IndicatorColumn col;
        col.name = name;
        col.values.resize(metrics.size());
        for (size_t v = 0; v < metrics.size(); ++v) {
            if (name == "n_papers") col.values[v] = metrics[v].n_papers;
            else if (name == "n_citations")
                col.values[v] = static_cast<double>(metrics[v].n_citations);
            else if (name == "h_index") col.values[v] = metrics[v].h_index;
            else throw validation_error("unknown indicator '" + name + "'");
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

CentralityScores compute_measure(const CollabGraph& graph, Measure m, const RunConfig& cfg) {
    switch (m) {
        case Measure::degree: return degree_centrality(graph);
        case Measure::closeness: return closeness_centrality(graph);
        case Measure::betweenness:
            return betweenness_centrality(
                graph, {.samples = cfg.betweenness_samples, .rng_seed = cfg.rng_seed});
        case Measure::eigenvector:
            return eigenvector_centrality(
                graph, {.tolerance = cfg.eigen_tolerance,
                        .max_iters = static_cast<int>(cfg.eigen_max_iters)});
        case Measure::load: return load_centrality(graph);
    }
    throw validation_error("unhandled measure");
}

void write_centrality_outputs(const fs::path& out_dir,
                              const std::vector<std::pair<Measure, CentralityScores>>& all,
                              OutputTracker& tracker) {
    nlohmann::ordered_json params;
    for (const auto& [m, scores] : all) {
        if (scores.params.count("clamped_to_exact"))
            log_warn(std::string(to_string(m)) +
                     ": more pivots than nodes, clamped to the exact sweep");
        auto out = open_output(
            out_dir / (std::string("centrality_") + to_string(m) + ".csv"), tracker);
        write_centrality_csv(out, scores);
        nlohmann::ordered_json p;
        for (const auto& [k, v] : scores.params) p[k] = v;
        params[to_string(m)] = p;
    }
    auto sidecar = open_output(out_dir / "centrality_params.json", tracker);
    sidecar << params.dump(2) << '\n';
}

void write_manifest(const fs::path& out_dir, const RunConfig& cfg, OutputTracker& tracker) {
    uint64_t corpus_hash = 0xCBF29CE484222325ULL;
    const std::pair<const char*, const std::string*> inputs[] = {
        {"input", &cfg.input},
        {"laureates", &cfg.laureates},
        {"geocode", &cfg.geocode},
        {"affiliations", &cfg.affiliations},
    };
    for (const auto& [role, path] : inputs) {
        corpus_hash = fnv1a64(role, std::strlen(role), corpus_hash);
        if (!path->empty()) corpus_hash = hash_file(*path, corpus_hash);
    }
    const std::string canonical = canonical_config(cfg);
    nlohmann::ordered_json j;
    j["tool_version"] = kToolVersion;
    j["config_hash"] = hex64(fnv1a64(canonical.data(), canonical.size()));
    j["corpus_hash"] = hex64(corpus_hash);
    j["rng_seed"] = cfg.rng_seed;
    auto out = open_output(out_dir / "manifest.json", tracker);
    out << j.dump(2) << '\n';
}

// Report stage shared by `report` and `pipeline`.
void write_reports(const fs::path& out_dir, const RunConfig& cfg,
                   const ScholarTable& scholars, std::span<const ScholarMetrics> metrics,
                   const TnResult& tn,
                   const std::vector<std::pair<Measure, CentralityScores>>& centrality,
                   OutputTracker& tracker) {
    {
        auto out = open_output(out_dir / "tn_histogram.csv", tracker);
        write_tn_histogram_csv(out, tn);
    }
    {
        auto out = open_output(out_dir / "fig2_buckets.csv", tracker);
        write_fig2_csv(out, metrics_by_tn(metrics, tn));
    }
    {
        const auto rows = country_table(scholars, metrics, tn, cfg.top_countries);
        if (rows.empty()) log_warn("no geocoded scholars: country table is empty");
        auto out = open_output(out_dir / "table2_countries.csv", tracker);
        write_table2_csv(out, rows);
    }
    {
        const auto cols = indicator_columns(cfg.indicators, metrics);
        auto out = open_output(out_dir / "table3_correlations.csv", tracker);
        write_table3_csv(out, correlate_tn(tn, cols));
    }
    {
        const Fig3Stat stat = cfg.fig3_stat == "median" ? Fig3Stat::median : Fig3Stat::mean;
        auto out = open_output(out_dir / "fig3_centrality_by_tn.csv", tracker);
        bool header = true;
        for (const auto& [m, scores] : centrality) {
            write_fig3_csv(out, m, centrality_by_tn(scores, tn), stat, header);
            header = false;
        }
    }
    {
        const auto geo = geographic_distribution(scholars, tn);
        auto out = open_output(out_dir / "geo_countries.csv", tracker);
        write_geo_countries_csv(out, geo);
        auto out2 = open_output(out_dir / "geo_institutions.csv", tracker);
        write_geo_institutions_csv(out2, geo);
    }
}

fs::path ensure_out_dir(const std::string& dir) {
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) throw io_error("cannot create output directory: " + dir);
    return p;
}

// ---------------------------------------------------------------- commands

int cmd_ingest(const RunConfig& cfg) {
    if (!fs::exists(cfg.input)) throw io_error("input does not exist: " + cfg.input);
    if (cfg.format != "jsonl" && cfg.format != "dblp")
        throw validation_error("format must be jsonl or dblp");
    if (!cfg.laureates.empty() && !fs::exists(cfg.laureates))
        throw io_error("laureate list does not exist: " + cfg.laureates);
    OutputTracker tracker;
    const auto out_dir = ensure_out_dir(cfg.out_dir);
    stage_ingest(cfg, out_dir, tracker);
    tracker.keep = true;
    return 0;
}

struct GraphArgs {
    std::string corpus;
    std::string scholars;
    std::string out_dir = "out";
    std::string laureates;
    uint32_t clique_guard = 500;
    uint32_t khop_radius = 0;
};

int cmd_graph_build(const GraphArgs& args) {
    for (const auto& p : {args.corpus, args.scholars})
        if (!fs::exists(p)) throw io_error("input does not exist: " + p);
    OutputTracker tracker;
    const auto out_dir = ensure_out_dir(args.out_dir);

    auto scholars_in = open_input(args.scholars);
    ScholarTable scholars = read_scholar_csv(scholars_in);
    auto built = build_graph_from_corpus(args.corpus, scholars, args.clique_guard);

    if (args.khop_radius > 0) {
        std::vector<uint32_t> seeds;
        if (!args.laureates.empty()) {
            auto in = open_input(args.laureates);
            seeds = load_laureates(in, scholars);
        } else {
            seeds = seeds_from_flags(scholars);
        }
        apply_khop(built.graph, scholars, seeds, args.khop_radius);
        auto scholars_out = open_output(out_dir / "scholars.csv", tracker);
        write_scholar_csv(scholars_out, scholars);
    }

    save_graph(built.graph, (out_dir / "graph.bin").string());
    tracker.written.push_back(out_dir / "graph.bin");
    auto edges_out = open_output(out_dir / "graph_edges.txt", tracker);
    write_edge_list(built.graph, edges_out);
    log_info("graph: " + std::to_string(built.graph.num_nodes()) + " nodes, " +
             std::to_string(built.graph.num_edges()) + " edges");
    tracker.keep = true;
    return 0;
}

struct TnArgs {
    std::string graph;
    std::string scholars;
    std::string laureates;
    std::string out_dir = "out";
    uint32_t k = 0;
    uint32_t trials = 100;
    uint64_t rng_seed = 42;
    bool exclude_seeds = false;
};

std::vector<uint32_t> resolve_seeds(const TnArgs& args, ScholarTable& scholars) {
    if (!args.laureates.empty()) {
        if (!fs::exists(args.laureates))
            throw io_error("laureate list does not exist: " + args.laureates);
        auto in = open_input(args.laureates);
        return load_laureates(in, scholars);
    }
    return seeds_from_flags(scholars);
}

int cmd_tn_compute(const TnArgs& args) {
    for (const auto& p : {args.graph, args.scholars})
        if (!fs::exists(p)) throw io_error("input does not exist: " + p);
    OutputTracker tracker;
    const auto out_dir = ensure_out_dir(args.out_dir);

    auto scholars_in = open_input(args.scholars);
    ScholarTable scholars = read_scholar_csv(scholars_in);
    const auto graph = load_graph(args.graph);
    if (graph.num_nodes() != scholars.size())
        throw validation_error("graph has " + std::to_string(graph.num_nodes()) +
                               " nodes but the scholar table has " +
                               std::to_string(scholars.size()));
    const auto seeds = resolve_seeds(args, scholars);
    const auto tn = compute_tn(graph, seeds);

    auto tn_out = open_output(out_dir / "tn.csv", tracker);
    write_tn_csv(tn_out, tn, scholars);
    auto summary_out = open_output(out_dir / "tn_summary.json", tracker);
    write_tn_summary_json(summary_out, tn);
    tracker.keep = true;
    return 0;
}

int cmd_tn_null_model(const TnArgs& args) {
    for (const auto& p : {args.graph, args.scholars})
        if (!fs::exists(p)) throw io_error("input does not exist: " + p);
    if (args.trials < 1) throw validation_error("--trials must be at least 1");
    OutputTracker tracker;
    const auto out_dir = ensure_out_dir(args.out_dir);

    auto scholars_in = open_input(args.scholars);
    ScholarTable scholars = read_scholar_csv(scholars_in);
    const auto graph = load_graph(args.graph);
    const auto seeds = resolve_seeds(args, scholars);
    const uint32_t k = args.k ? args.k : static_cast<uint32_t>(seeds.size());
    const std::span<const uint32_t> exclude =
        args.exclude_seeds ? std::span<const uint32_t>(seeds) : std::span<const uint32_t>();
    const auto null = null_model(graph, k, args.trials, args.rng_seed, exclude);

    auto csv_out = open_output(out_dir / "null_model.csv", tracker);
    write_null_model_csv(csv_out, null);
    auto summary_out = open_output(out_dir / "null_model_summary.json", tracker);
    write_null_model_summary_json(summary_out, null);
    tracker.keep = true;
    return 0;
}

struct CentralityArgs {
    std::string graph;
    std::string out_dir = "out";
    std::string measures = "degree,closeness,betweenness,eigenvector,load";
    uint32_t betweenness_samples = 0;
    uint64_t rng_seed = 42;
    double eigen_tolerance = 1e-10;
    uint32_t eigen_max_iters = 1000;
};

int cmd_centrality(const CentralityArgs& args) {
    const auto measures = parse_measures(args.measures); // validate before any work
    if (!fs::exists(args.graph)) throw io_error("input does not exist: " + args.graph);
    OutputTracker tracker;
    const auto out_dir = ensure_out_dir(args.out_dir);
    const auto graph = load_graph(args.graph);

    RunConfig cfg;
    cfg.betweenness_samples = args.betweenness_samples;
    cfg.rng_seed = args.rng_seed;
    cfg.eigen_tolerance = args.eigen_tolerance;
    cfg.eigen_max_iters = args.eigen_max_iters;

    std::vector<std::pair<Measure, CentralityScores>> all;
    for (Measure m : measures) {
        log_info(std::string("centrality: ") + to_string(m));
        all.emplace_back(m, compute_measure(graph, m, cfg));
    }
    write_centrality_outputs(out_dir, all, tracker);
    tracker.keep = true;
    return 0;
}

struct StatsArgs {
    std::string tn_csv;
    std::string scholars;
    std::string corpus;
    std::string out = "table3_correlations.csv";
    std::string indicators = "n_papers,n_citations,h_index";
};

int cmd_stats_correlate(const StatsArgs& args) {
    for (const auto& p : {args.tn_csv, args.scholars, args.corpus})
        if (!fs::exists(p)) throw io_error("input does not exist: " + p);
    auto scholars_in = open_input(args.scholars);
    const ScholarTable scholars = read_scholar_csv(scholars_in);
    auto tn_in = open_input(args.tn_csv);
    const TnResult tn = read_tn_csv(tn_in, scholars.size());
    const auto metrics = metrics_from_corpus(args.corpus, scholars);
    const auto cols = indicator_columns(args.indicators, metrics);
    const auto rows = correlate_tn(tn, cols);

    OutputTracker tracker;
    auto out = open_output(args.out, tracker);
    write_table3_csv(out, rows);
    tracker.keep = true;
    return 0;
}

struct ReportArgs {
    std::string run_dir = "out";
    std::string indicators = "n_papers,n_citations,h_index";
    std::string fig3_stat = "mean";
    uint32_t top_countries = 11;
};

int cmd_report(const ReportArgs& args) {
    const fs::path dir(args.run_dir);
    for (const char* f : {"scholars.csv", "corpus.jsonl", "tn.csv"})
        if (!fs::exists(dir / f))
            throw io_error("run directory is missing " + std::string(f) + ": " +
                           args.run_dir);
    if (args.fig3_stat != "mean" && args.fig3_stat != "median")
        throw validation_error("fig3_stat must be mean or median");

    auto scholars_in = open_input(dir / "scholars.csv");
    const ScholarTable scholars = read_scholar_csv(scholars_in);
    auto tn_in = open_input(dir / "tn.csv");
    const TnResult tn = read_tn_csv(tn_in, scholars.size());
    const auto metrics = metrics_from_corpus(dir / "corpus.jsonl", scholars);

    std::vector<std::pair<Measure, CentralityScores>> centrality;
    for (Measure m : {Measure::degree, Measure::closeness, Measure::betweenness,
                      Measure::eigenvector, Measure::load}) {
        const fs::path csv_path = dir / (std::string("centrality_") + to_string(m) + ".csv");
        if (!fs::exists(csv_path)) continue;
        auto in = open_input(csv_path);
        centrality.emplace_back(m, read_centrality_csv(in, m, scholars.size()));
    }

    RunConfig cfg;
    cfg.indicators = args.indicators;
    cfg.fig3_stat = args.fig3_stat;
    cfg.top_countries = args.top_countries;

    OutputTracker tracker;
    write_reports(dir, cfg, scholars, metrics, tn, centrality, tracker);
    tracker.keep = true;
    return 0;
}

int cmd_pipeline(const RunConfig& cfg) {
    validate_config(cfg);
    OutputTracker tracker;
    const auto out_dir = ensure_out_dir(cfg.out_dir);

    auto ingest = stage_ingest(cfg, out_dir, tracker);
    ScholarTable scholars = std::move(ingest.scholars);
    std::vector<uint32_t> seeds = std::move(ingest.laureate_ids);
    if (seeds.empty()) throw validation_error("laureate list resolved to no scholars");

    auto built = build_graph_from_corpus(out_dir / "corpus.jsonl", scholars, cfg.clique_guard);
    CollabGraph graph = std::move(built.graph);
    if (cfg.khop_radius > 0) {
        apply_khop(graph, scholars, seeds, cfg.khop_radius);
        auto scholars_out = open_output(out_dir / "scholars.csv", tracker);
        write_scholar_csv(scholars_out, scholars);
    }
    save_graph(graph, (out_dir / "graph.bin").string());
    tracker.written.push_back(out_dir / "graph.bin");
    {
        auto edges_out = open_output(out_dir / "graph_edges.txt", tracker);
        write_edge_list(graph, edges_out);
    }

    log_info("tn: multi-source BFS from " + std::to_string(seeds.size()) + " seeds");
    const auto tn = compute_tn(graph, seeds);
    {
        auto out = open_output(out_dir / "tn.csv", tracker);
        write_tn_csv(out, tn, scholars);
        auto summary = open_output(out_dir / "tn_summary.json", tracker);
        write_tn_summary_json(summary, tn);
    }

    const uint32_t k = cfg.null_k ? cfg.null_k : static_cast<uint32_t>(seeds.size());
    log_info("null model: k=" + std::to_string(k) + ", trials=" +
             std::to_string(cfg.null_trials));
    const std::span<const uint32_t> exclude =
        cfg.null_exclude_seeds ? std::span<const uint32_t>(seeds)
                               : std::span<const uint32_t>();
    const auto null = null_model(graph, k, cfg.null_trials, cfg.rng_seed, exclude);
    {
        auto out = open_output(out_dir / "null_model.csv", tracker);
        write_null_model_csv(out, null);
        auto summary = open_output(out_dir / "null_model_summary.json", tracker);
        write_null_model_summary_json(summary, null);
    }

    std::vector<std::pair<Measure, CentralityScores>> centrality;
    for (Measure m : parse_measures(cfg.measures)) {
        log_info(std::string("centrality: ") + to_string(m));
        centrality.emplace_back(m, compute_measure(graph, m, cfg));
    }
    write_centrality_outputs(out_dir, centrality, tracker);

    const auto metrics = metrics_from_corpus(out_dir / "corpus.jsonl", scholars);
    write_reports(out_dir, cfg, scholars, metrics, tn, centrality, tracker);
    write_manifest(out_dir, cfg, tracker);

    tracker.keep = true;
    log_info("pipeline complete: " + out_dir.string());
    return 0;
}

// ---------------------------------------------------------------- wiring

int run(int argc, char** argv) {
    CLI::App app{"Coauthorship network toolkit: laureate-distance metrics, centrality and "
                 "bibliometric reports"};
    app.set_version_flag("--version", std::string("tn ") + kToolVersion);
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "OpenMP thread count (default: library choice)");

    // ingest
    RunConfig ingest_cfg;
    auto* ingest = app.add_subcommand("ingest", "Parse a corpus into the normalized form");
    ingest->add_option("--in", ingest_cfg.input, "Corpus file")->required();
    ingest->add_option("--format", ingest_cfg.format, "jsonl or dblp");
    ingest->add_option("--out-dir", ingest_cfg.out_dir, "Output directory");
    ingest->add_option("--affiliations", ingest_cfg.affiliations,
                       "author_key,institution CSV");
    ingest->add_option("--geocode", ingest_cfg.geocode, "pattern,country,lat,lon CSV");
    ingest->add_option("--laureates", ingest_cfg.laureates, "Laureate name/key list");

    // graph build
    GraphArgs graph_args;
    auto* graph = app.add_subcommand("graph", "Graph construction");
    graph->require_subcommand(1);
    auto* build = graph->add_subcommand("build", "Build the coauthorship graph");
    build->add_option("--corpus", graph_args.corpus, "Normalized corpus.jsonl")->required();
    build->add_option("--scholars", graph_args.scholars, "scholars.csv")->required();
    build->add_option("--out-dir", graph_args.out_dir, "Output directory");
    build->add_option("--clique-guard", graph_args.clique_guard,
                      "Skip edge expansion for papers with more authors than this");
    build->add_option("--khop-radius", graph_args.khop_radius,
                      "Restrict to nodes within this many hops of the laureates (0 = all)");
    build->add_option("--laureates", graph_args.laureates,
                      "Laureate list (for --khop-radius)");

    // tn compute / null-model
    TnArgs tn_args;
    auto* tn_cmd = app.add_subcommand("tn", "Laureate-distance computations");
    tn_cmd->require_subcommand(1);
    auto* compute = tn_cmd->add_subcommand("compute", "Multi-source BFS from the laureates");
    compute->add_option("--graph", tn_args.graph, "graph.bin")->required();
    compute->add_option("--scholars", tn_args.scholars, "scholars.csv")->required();
    compute->add_option("--laureates", tn_args.laureates, "Laureate list (else table flags)");
    compute->add_option("--out-dir", tn_args.out_dir, "Output directory");
    auto* null_cmd = tn_cmd->add_subcommand("null-model", "Random-seed comparison model");
    null_cmd->add_option("--graph", tn_args.graph, "graph.bin")->required();
    null_cmd->add_option("--scholars", tn_args.scholars, "scholars.csv")->required();
    null_cmd->add_option("--laureates", tn_args.laureates, "Laureate list (else table flags)");
    null_cmd->add_option("--out-dir", tn_args.out_dir, "Output directory");
    null_cmd->add_option("--k", tn_args.k, "Seeds per trial (0 = laureate count)");
    null_cmd->add_option("--trials", tn_args.trials, "Trial count");
    null_cmd->add_option("--rng-seed", tn_args.rng_seed, "Top-level RNG seed");
    null_cmd->add_flag("--exclude-seeds", tn_args.exclude_seeds,
                       "Sample from non-laureates only");

    // centrality
    CentralityArgs cent_args;
    auto* cent = app.add_subcommand("centrality", "Network centrality measures");
    cent->add_option("--graph", cent_args.graph, "graph.bin")->required();
    cent->add_option("--out-dir", cent_args.out_dir, "Output directory");
    cent->add_option("--measures", cent_args.measures, "Comma list of measures");
    cent->add_option("--betweenness-samples", cent_args.betweenness_samples,
                     "Pivot count for sampled betweenness (0 = exact)");
    cent->add_option("--rng-seed", cent_args.rng_seed, "Pivot sampling seed");
    cent->add_option("--eigen-tolerance", cent_args.eigen_tolerance,
                     "Power iteration tolerance");
    cent->add_option("--eigen-max-iters", cent_args.eigen_max_iters, "Power iteration cap");

    // stats correlate
    StatsArgs stats_args;
    auto* stats = app.add_subcommand("stats", "Correlation analysis");
    stats->require_subcommand(1);
    auto* correlate = stats->add_subcommand("correlate", "TN vs bibliometric indicators");
    correlate->add_option("--tn", stats_args.tn_csv, "tn.csv")->required();
    correlate->add_option("--scholars", stats_args.scholars, "scholars.csv")->required();
    correlate->add_option("--corpus", stats_args.corpus, "corpus.jsonl")->required();
    correlate->add_option("--out", stats_args.out, "Output CSV path");
    correlate->add_option("--indicators", stats_args.indicators, "Comma list of indicators");

    // report
    ReportArgs report_args;
    auto* report = app.add_subcommand("report", "Regenerate report CSVs from a run directory");
    report->add_option("--run-dir", report_args.run_dir, "Directory with prior stage outputs");
    report->add_option("--indicators", report_args.indicators, "Comma list of indicators");
    report->add_option("--fig3-stat", report_args.fig3_stat, "mean or median");
    report->add_option("--top-countries", report_args.top_countries, "Country table size");

    // pipeline
    RunConfig flag_cfg;
    std::string config_path;
    auto* pipeline = app.add_subcommand("pipeline", "Run the whole analysis end to end");
    pipeline->add_option("--config", config_path, "key = value config file");
    pipeline->add_option("--in", flag_cfg.input, "Corpus file");
    pipeline->add_option("--format", flag_cfg.format, "jsonl or dblp");
    pipeline->add_option("--laureates", flag_cfg.laureates, "Laureate list");
    pipeline->add_option("--geocode", flag_cfg.geocode, "Geocode CSV");
    pipeline->add_option("--affiliations", flag_cfg.affiliations, "Affiliations CSV");
    pipeline->add_option("--out-dir", flag_cfg.out_dir, "Output directory");
    pipeline->add_option("--clique-guard", flag_cfg.clique_guard, "Clique expansion guard");
    pipeline->add_option("--khop-radius", flag_cfg.khop_radius, "Seed neighborhood radius");
    pipeline->add_option("--null-k", flag_cfg.null_k, "Null model seeds per trial");
    pipeline->add_option("--null-trials", flag_cfg.null_trials, "Null model trials");
    pipeline->add_option("--rng-seed", flag_cfg.rng_seed, "Top-level RNG seed");
    pipeline->add_flag("--null-exclude-seeds", flag_cfg.null_exclude_seeds,
                       "Null model samples non-laureates only");
    pipeline->add_option("--measures", flag_cfg.measures, "Centrality measures");
    pipeline->add_option("--betweenness-samples", flag_cfg.betweenness_samples,
                         "Sampled betweenness pivots (0 = exact)");
    pipeline->add_option("--eigen-tolerance", flag_cfg.eigen_tolerance,
                         "Eigenvector tolerance");
    pipeline->add_option("--eigen-max-iters", flag_cfg.eigen_max_iters, "Eigenvector cap");
    pipeline->add_option("--indicators", flag_cfg.indicators, "Correlation indicators");
    pipeline->add_option("--fig3-stat", flag_cfg.fig3_stat, "mean or median");
    pipeline->add_option("--top-countries", flag_cfg.top_countries, "Country table size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "tn: error: " << e.what() << '\n';
        return 4;
    }

    if (threads > 0) omp_set_num_threads(threads);

    if (*ingest) return cmd_ingest(ingest_cfg);
    if (*graph) return cmd_graph_build(graph_args);
    if (*tn_cmd) {
        if (*compute) return cmd_tn_compute(tn_args);
        return cmd_tn_null_model(tn_args);
    }
    if (*cent) return cmd_centrality(cent_args);
    if (*stats) return cmd_stats_correlate(stats_args);
    if (*report) return cmd_report(report_args);
    if (*pipeline) {
        // precedence: flags > config file > defaults
        RunConfig cfg;
        if (!config_path.empty()) {
            if (!fs::exists(config_path))
                throw io_error("config file does not exist: " + config_path);
            for (const auto& [k, v] : parse_config_file(config_path))
                apply_config_entry(cfg, k, v);
        }
        const std::pair<const char*, std::function<void()>> overrides[] = {
            {"--in", [&] { cfg.input = flag_cfg.input; }},
            {"--format", [&] { cfg.format = flag_cfg.format; }},
            {"--laureates", [&] { cfg.laureates = flag_cfg.laureates; }},
            {"--geocode", [&] { cfg.geocode = flag_cfg.geocode; }},
            {"--affiliations", [&] { cfg.affiliations = flag_cfg.affiliations; }},
            {"--out-dir", [&] { cfg.out_dir = flag_cfg.out_dir; }},
            {"--clique-guard", [&] { cfg.clique_guard = flag_cfg.clique_guard; }},
            {"--khop-radius", [&] { cfg.khop_radius = flag_cfg.khop_radius; }},
            {"--null-k", [&] { cfg.null_k = flag_cfg.null_k; }},
            {"--null-trials", [&] { cfg.null_trials = flag_cfg.null_trials; }},
            {"--rng-seed", [&] { cfg.rng_seed = flag_cfg.rng_seed; }},
            {"--null-exclude-seeds",
             [&] { cfg.null_exclude_seeds = flag_cfg.null_exclude_seeds; }},
            {"--measures", [&] { cfg.measures = flag_cfg.measures; }},
            {"--betweenness-samples",
             [&] { cfg.betweenness_samples = flag_cfg.betweenness_samples; }},
            {"--eigen-tolerance", [&] { cfg.eigen_tolerance = flag_cfg.eigen_tolerance; }},
            {"--eigen-max-iters", [&] { cfg.eigen_max_iters = flag_cfg.eigen_max_iters; }},
            {"--indicators", [&] { cfg.indicators = flag_cfg.indicators; }},
            {"--fig3-stat", [&] { cfg.fig3_stat = flag_cfg.fig3_stat; }},
            {"--top-countries", [&] { cfg.top_countries = flag_cfg.top_countries; }},
        };
        for (const auto& [flag, apply] : overrides)
            if (pipeline->count(flag)) apply();
        return cmd_pipeline(cfg);
    }
    return 4;
}

} // namespace

int main(int argc, char** argv) {
    init_log_level();
    try {
        return run(argc, argv);
    } catch (const io_error& e) {
        std::cerr << "tn: i/o error: " << e.what() << '\n';
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "tn: parse error: " << e.what() << '\n';
        return 3;
    } catch (const validation_error& e) {
        std::cerr << "tn: validation error: " << e.what() << '\n';
        return 4;
    } catch (const std::out_of_range& e) {
        std::cerr << "tn: validation error: " << e.what() << '\n';
        return 4;
    } catch (const numeric_error& e) {
        std::cerr << "tn: numeric error: " << e.what() << '\n';
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "tn: error: " << e.what() << '\n';
        return 1;
    }
}
