#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "tn/det_rng.hpp"
#include "tn/errors.hpp"
#include "tn/graph.hpp"
#include "tn/graph_io.hpp"
#include "tn_reference.hpp"

using namespace tn;

namespace {

ResolvedPaper paper(std::vector<uint32_t> authors) {
    ResolvedPaper p;
    p.authors = std::move(authors);
    return p;
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("one paper with three authors expands to a triangle") {
    std::vector<ResolvedPaper> papers{paper({0, 1, 2})};
    const auto g = build_graph(papers, 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 2);
}

TEST_CASE("repeated collaborations collapse to one edge") {
    std::vector<ResolvedPaper> papers{paper({0, 1}), paper({1, 0})};
    const auto g = build_graph(papers, 2);
    CHECK(g.num_edges() == 1);
}

TEST_CASE("clique guard skips hyper-authored papers with a count") {
    std::vector<uint32_t> huge(600);
    for (uint32_t i = 0; i < 600; ++i) huge[i] = i;
    std::vector<ResolvedPaper> papers{paper(huge), paper({0, 1})};
    BuildStats stats;
    const auto g = build_graph(papers, 600, BuildOptions{.clique_guard = 500}, &stats);
    CHECK(stats.papers_over_guard == 1);
    CHECK(stats.papers_expanded == 1);
    CHECK(g.num_edges() == 1);
}

TEST_CASE("degree and neighbors") {
    // 0-1, 1-2 plus isolated node 3
    const auto g = CollabGraph::from_edges(4, {{0, 1}, {1, 2}});
    CHECK(g.degree(3) == 0);
    CHECK(g.neighbors(3).empty());
    CHECK(g.degree(1) == 2);
    const auto nb = g.neighbors(1);
    CHECK(std::vector<uint32_t>(nb.begin(), nb.end()) == std::vector<uint32_t>{0, 2});
    CHECK_THROWS_AS((void)g.degree(4), std::out_of_range);
    CHECK_THROWS_AS((void)g.neighbors(17), std::out_of_range);
}

TEST_CASE("from_edges rejects self-loops and bad endpoints") {
    CHECK_THROWS_AS(CollabGraph::from_edges(3, {{1, 1}}), validation_error);
    CHECK_THROWS_AS(CollabGraph::from_edges(3, {{0, 3}}), validation_error);
}

TEST_CASE("connected components: two disjoint edges") {
    const auto g = CollabGraph::from_edges(4, {{0, 1}, {2, 3}});
    const auto c = connected_components(g);
    CHECK(c.sizes == std::vector<uint64_t>{2, 2});
    CHECK(c.id[0] == c.id[1]);
    CHECK(c.id[2] == c.id[3]);
    CHECK(c.id[0] != c.id[2]);
}

TEST_CASE("connected components: empty graph") {
    const auto c = connected_components(CollabGraph::from_edges(0, {}));
    CHECK(c.id.empty());
    CHECK(c.sizes.empty());
}

TEST_CASE("connected components match a per-node BFS oracle") {
    const auto g = ref::random_graph(200, 180, 0xC0115EED);
    const auto c = connected_components(g);
    for (uint32_t v = 0; v < g.num_nodes(); ++v) {
        const auto dist = ref::single_source_bfs(g, v);
        for (uint32_t u = 0; u < g.num_nodes(); ++u)
            CHECK((dist[u] >= 0) == (c.id[u] == c.id[v]));
    }
    uint64_t total = 0;
    for (auto s : c.sizes) total += s;
    CHECK(total == g.num_nodes());
}

TEST_CASE("CSR slices are sorted, duplicate-free and symmetric") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        const auto g = ref::random_graph(80, 200, seed * 3);
        CHECK(g.offsets().front() == 0);
        CHECK(g.offsets().back() == g.adjacency().size());
        for (uint32_t v = 0; v < g.num_nodes(); ++v) {
            const auto nb = g.neighbors(v);
            for (size_t i = 0; i + 1 < nb.size(); ++i) CHECK(nb[i] < nb[i + 1]);
            for (uint32_t u : nb) {
                CHECK(u != v);
                const auto back = g.neighbors(u);
                CHECK(std::binary_search(back.begin(), back.end(), v));
            }
        }
    }
}

TEST_CASE("handshake lemma on random graphs") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        const auto g = ref::random_graph(100, 250, seed);
        uint64_t degree_sum = 0;
        for (uint32_t v = 0; v < g.num_nodes(); ++v) degree_sum += g.degree(v);
        CHECK(degree_sum == 2 * g.num_edges());
    }
}

TEST_CASE("build_graph is invariant under paper order") {
    SplitMix64 rng(7);
    std::vector<ResolvedPaper> papers;
    for (int i = 0; i < 300; ++i) {
        std::vector<uint32_t> authors;
        const int k = 2 + static_cast<int>(bounded(rng, 4));
        while (static_cast<int>(authors.size()) < k) {
            const uint32_t a = static_cast<uint32_t>(bounded(rng, 80));
            if (std::find(authors.begin(), authors.end(), a) == authors.end())
                authors.push_back(a);
        }
        papers.push_back(paper(std::move(authors)));
    }
    const auto g1 = build_graph(papers, 80);
    // deterministic shuffle
    for (size_t i = papers.size(); i > 1; --i)
        std::swap(papers[i - 1], papers[bounded(rng, i)]);
    const auto g2 = build_graph(papers, 80);
    CHECK(g1 == g2);
}

TEST_CASE("build_graph edge set equals brute-force pairwise union") {
    SplitMix64 rng(99);
    std::vector<ResolvedPaper> papers;
    std::set<std::pair<uint32_t, uint32_t>> expected;
    for (int i = 0; i < 500; ++i) {
        std::vector<uint32_t> authors;
        const int k = 1 + static_cast<int>(bounded(rng, 5));
        while (static_cast<int>(authors.size()) < k) {
            const uint32_t a = static_cast<uint32_t>(bounded(rng, 120));
            if (std::find(authors.begin(), authors.end(), a) == authors.end())
                authors.push_back(a);
        }
        for (size_t x = 0; x < authors.size(); ++x)
            for (size_t y = x + 1; y < authors.size(); ++y)
                expected.insert({std::min(authors[x], authors[y]),
                                 std::max(authors[x], authors[y])});
        papers.push_back(paper(std::move(authors)));
    }
    const auto g = build_graph(papers, 120);
    std::set<std::pair<uint32_t, uint32_t>> got;
    for (uint32_t u = 0; u < g.num_nodes(); ++u)
        for (uint32_t v : g.neighbors(u))
            if (u < v) got.insert({u, v});
    CHECK(got == expected);
}

TEST_CASE("graph cache round trip: triangle") {
    const auto g = ref::complete_graph(3);
    const auto path = temp_file("tn_triangle.bin");
    save_graph(g, path.string());
    const auto loaded = load_graph(path.string());
    CHECK(loaded == g);
    std::filesystem::remove(path);
}

TEST_CASE("graph cache round trip: 10k-node random graph") {
    const auto g = ref::random_graph(10000, 40000, 0xABCDEF);
    const auto path = temp_file("tn_10k.bin");
    save_graph(g, path.string());
    const auto loaded = load_graph(path.string());
    CHECK(loaded.num_nodes() == g.num_nodes());
    CHECK(loaded.offsets() == g.offsets());
    CHECK(loaded.adjacency() == g.adjacency());
    std::filesystem::remove(path);
}

TEST_CASE("graph cache rejects corruption") {
    const auto g = ref::complete_graph(4);
    const auto path = temp_file("tn_corrupt.bin");
    save_graph(g, path.string());

    SUBCASE("flipped magic") {
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(0);
        f.put('X');
        f.close();
        CHECK_THROWS_WITH_AS(load_graph(path.string()),
                             doctest::Contains("bad magic"), parse_error);
    }
    SUBCASE("version mismatch") {
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(4);
        f.put(static_cast<char>(9));
        f.close();
        CHECK_THROWS_WITH_AS(load_graph(path.string()),
                             doctest::Contains("version mismatch"), parse_error);
    }
    SUBCASE("truncation") {
        const auto size = std::filesystem::file_size(path);
        std::filesystem::resize_file(path, size - 4);
        CHECK_THROWS_AS(load_graph(path.string()), parse_error);
    }
    SUBCASE("payload corruption fails the checksum") {
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(30);
        f.put(static_cast<char>(0x5A));
        f.close();
        CHECK_THROWS_WITH_AS(load_graph(path.string()),
                             doctest::Contains("checksum"), parse_error);
    }
    std::filesystem::remove(path);
}

TEST_CASE("edge list export") {
    const auto g = CollabGraph::from_edges(4, {{2, 1}, {0, 3}, {0, 1}});
    std::ostringstream out;
    write_edge_list(g, out);
    CHECK(out.str() == "0 1\n0 3\n1 2\n");
}

TEST_CASE("k-hop extraction around a seed set") {
    // path 0-1-2-3-4 plus far node 5
    auto g = CollabGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    const std::vector<uint32_t> seeds{2};
    const auto sub = extract_khop(g, seeds, 1);
    CHECK(sub.orig_id == std::vector<uint32_t>{1, 2, 3});
    CHECK(sub.graph.num_nodes() == 3);
    CHECK(sub.graph.num_edges() == 2);

    const auto all = extract_khop(g, seeds, 10);
    CHECK(all.orig_id == std::vector<uint32_t>{0, 1, 2, 3, 4}); // 5 unreachable
    CHECK(all.graph.num_edges() == 4);
}
