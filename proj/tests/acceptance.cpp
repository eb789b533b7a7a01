// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line each. Exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "tn/bibliometrics.hpp"
#include "tn/csv.hpp"
#include "tn/centrality.hpp"
#include "tn/errors.hpp"
#include "tn/det_rng.hpp"
#include "tn/graph_io.hpp"
#include "tn/stats.hpp"
#include "tn/tables_io.hpp"
#include "tn/turing_number.hpp"
#include "tn_reference.hpp"

namespace fs = std::filesystem;
using namespace tn;
using Clock = std::chrono::steady_clock;

namespace {

const std::string kCli = TN_CLI_PATH;
const fs::path kFixtures = TN_FIXTURE_DIR;
const fs::path kGolden = TN_GOLDEN_DIR;

int g_failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* id, const char* label, bool pass, const std::string& detail) {
    std::printf("%-4s %-52s %s%s%s\n", id, label, pass ? "PASS" : "FAIL",
                detail.empty() ? "" : "  -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

template <class Fn>
void criterion(const char* id, const char* label, Fn body) {
    try {
        std::string detail;
        const bool pass = body(detail);
        report(id, label, pass, detail);
    } catch (const std::exception& e) {
        report(id, label, false, std::string("exception: ") + e.what());
    }
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2fs", s);
    return buf;
}

int run_cli(const std::string& args, const fs::path& cwd) {
    const std::string cmd =
        "cd '" + cwd.string() + "' && '" + kCli + "' " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "<unreadable:" + path.string() + ">";
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ------------------------------------------------------------- criteria

void a1_tn_oracle() {
    criterion("A1", "TN equals per-seed BFS minimum (100 graphs)", [](std::string& detail) {
        const auto start = Clock::now();
        for (uint64_t rep = 1; rep <= 100; ++rep) {
            SplitMix64 rng(rep * 7771);
            const uint32_t n = 20 + static_cast<uint32_t>(bounded(rng, 181));
            const auto g = ref::random_graph(n, 2 * n, rep);
            std::vector<uint32_t> pool(n);
            std::iota(pool.begin(), pool.end(), 0u);
            const auto seeds = sample_distinct(rng, pool, 5);
            const auto res = compute_tn(g, seeds);
            const auto oracle = ref::min_over_seeds_bfs(g, seeds);
            for (uint32_t v = 0; v < n; ++v) {
                if ((oracle[v] >= 0) != static_cast<bool>(res.reachable[v])) {
                    detail = "reachability mismatch";
                    return false;
                }
                if (oracle[v] >= 0 && res.tn[v] != oracle[v]) {
                    detail = "distance mismatch";
                    return false;
                }
            }
        }
        const double elapsed = seconds_since(start);
        detail = fmt_seconds(elapsed);
        return elapsed < 5.0;
    });
}

void a2_betweenness_oracle() {
    criterion("A2", "Brandes matches brute-force enumeration (100 graphs)",
              [](std::string& detail) {
                  const auto start = Clock::now();
                  double worst = 0.0;
                  for (uint64_t rep = 1; rep <= 100; ++rep) {
                      SplitMix64 rng(rep * 104729);
                      const uint32_t n = 5 + static_cast<uint32_t>(bounded(rng, 56));
                      const auto g = ref::random_graph(n, n + bounded(rng, 2 * n), rep);
                      const auto got = betweenness_centrality(g);
                      const auto expected = ref::betweenness_bruteforce(g);
                      for (uint32_t v = 0; v < n; ++v)
                          worst = std::max(worst, std::abs(got.values[v] - expected[v]));
                  }
                  const double elapsed = seconds_since(start);
                  detail = "max |err| " + csv::fmt_real(worst) + ", " + fmt_seconds(elapsed);
                  return worst <= 1e-9 && elapsed < 60.0;
              });
}

void a3_load_oracle() {
    criterion("A3", "Load matches flow simulation + conservation (50 graphs)",
              [](std::string& detail) {
                  double worst = 0.0, worst_cons = 0.0;
                  for (uint64_t rep = 1; rep <= 50; ++rep) {
                      SplitMix64 rng(rep * 31337);
                      const uint32_t n = 5 + static_cast<uint32_t>(bounded(rng, 36));
                      const auto g = ref::random_graph(n, n + bounded(rng, n), rep ^ 0x10ADull);
                      const auto got = load_centrality(g);
                      std::vector<double> absorbed;
                      const auto expected = ref::load_flow_simulation(g, &absorbed);
                      for (uint32_t v = 0; v < n; ++v)
                          worst = std::max(worst, std::abs(got.values[v] - expected[v]));
                      for (uint32_t s = 0; s < n; ++s) {
                          const auto dist = ref::single_source_bfs(g, s);
                          uint64_t reach = 0;
                          for (int32_t d : dist)
                              if (d >= 0) ++reach;
                          worst_cons = std::max(
                              worst_cons,
                              std::abs(absorbed[s] - static_cast<double>(reach - 1)));
                      }
                  }
                  detail = "max |err| " + csv::fmt_real(worst) + ", conservation " +
                           csv::fmt_real(worst_cons);
                  return worst <= 1e-9 && worst_cons <= 1e-9;
              });
}

void a4_closeness_degree() {
    criterion("A4", "Closeness formula oracle; Kn closeness 1, betweenness 0",
              [](std::string& detail) {
                  double worst = 0.0;
                  for (uint64_t rep = 1; rep <= 30; ++rep) {
                      const uint32_t n = 20 + static_cast<uint32_t>(rep);
                      const auto g = ref::random_connected_graph(n, 2 * n, rep);
                      const auto got = closeness_centrality(g);
                      // Table-style formula evaluated by an independent per-node BFS
                      for (uint32_t v = 0; v < n; ++v) {
                          const auto dist = ref::single_source_bfs(g, v);
                          uint64_t sum = 0;
                          for (int32_t d : dist) sum += static_cast<uint64_t>(d);
                          const double expected =
                              static_cast<double>(n - 1) / static_cast<double>(sum);
                          worst = std::max(worst, std::abs(got.values[v] - expected));
                      }
                  }
                  for (uint32_t n : {4u, 7u, 11u}) {
                      const auto kn = ref::complete_graph(n);
                      const auto c = closeness_centrality(kn);
                      const auto b = betweenness_centrality(kn);
                      for (uint32_t v = 0; v < n; ++v) {
                          worst = std::max(worst, std::abs(c.values[v] - 1.0));
                          if (b.values[v] != 0.0) {
                              detail = "Kn betweenness not exactly 0";
                              return false;
                          }
                      }
                  }
                  detail = "max |err| " + csv::fmt_real(worst);
                  return worst <= 1e-12;
              });
}

void a5_eigenvector() {
    criterion("A5", "Eigenvector residual <= 1e-8, positive; cycles uniform",
              [](std::string& detail) {
                  double worst_res = 0.0, worst_cycle = 0.0;
                  for (uint64_t rep = 1; rep <= 50; ++rep) {
                      SplitMix64 rng(rep);
                      const uint32_t n = 10 + static_cast<uint32_t>(bounded(rng, 91));
                      const auto g = ref::random_connected_graph(n, 2 * n, rep * 13);
                      const auto s = eigenvector_centrality(g);
                      double lambda = 0.0;
                      std::vector<double> av(g.num_nodes(), 0.0);
                      for (uint32_t v = 0; v < g.num_nodes(); ++v) {
                          for (uint32_t u : g.neighbors(v)) av[v] += s.values[u];
                          lambda += av[v] * s.values[v];
                      }
                      double res_sq = 0.0;
                      for (uint32_t v = 0; v < g.num_nodes(); ++v) {
                          res_sq += (av[v] - lambda * s.values[v]) *
                                    (av[v] - lambda * s.values[v]);
                          if (s.values[v] <= 0.0) {
                              detail = "non-positive entry";
                              return false;
                          }
                      }
                      worst_res = std::max(worst_res, std::sqrt(res_sq));
                  }
                  for (uint32_t n : {4u, 5u, 8u, 13u}) {
                      const auto s = eigenvector_centrality(ref::cycle_graph(n));
                      for (double v : s.values)
                          worst_cycle =
                              std::max(worst_cycle, std::abs(v - 1.0 / std::sqrt(n)));
                  }
                  detail = "max residual " + csv::fmt_real(worst_res) + ", cycle err " +
                           csv::fmt_real(worst_cycle);
                  return worst_res <= 1e-8 && worst_cycle <= 1e-10;
              });
}

void a6_statistics() {
    criterion("A6", "Correlation oracles and stars thresholds", [](std::string& detail) {
        SplitMix64 rng(0xACC6);
        double worst_k = 0.0, worst_p = 0.0, worst_s = 0.0;
        int done = 0;
        while (done < 1000) {
            const size_t n = 3 + bounded(rng, 60);
            const int levels = 2 + static_cast<int>(bounded(rng, 10));
            std::vector<double> x(n), y(n);
            for (auto& v : x) v = static_cast<double>(bounded(rng, levels));
            for (auto& v : y) v = static_cast<double>(bounded(rng, levels));
            try {
                const double kt = kendall_tau_b(x, y).coefficient;
                const double ko = ref::kendall_tau_b_quadratic(x, y);
                worst_k = std::max(worst_k, std::abs(kt - ko));

                // relative to the coefficient scale (|r| <= 1), so near-zero
                // oracles do not blow the ratio up
                const double pe = pearson(x, y).coefficient;
                const double po = ref::pearson_two_pass(x, y);
                worst_p = std::max(worst_p, std::abs(pe - po) / std::max(1.0, std::abs(po)));

                const double sp = spearman(x, y).coefficient;
                const double so = ref::spearman_rank_oracle(x, y);
                worst_s = std::max(worst_s, std::abs(sp - so) / std::max(1.0, std::abs(so)));
            } catch (const numeric_error&) {
                continue; // constant draw; undefined by contract
            }
            ++done;
        }
        const bool stars_ok = significance_stars(0.009) == "***" &&
                              significance_stars(0.04) == "**" &&
                              significance_stars(0.09) == "*" &&
                              significance_stars(0.2).empty();
        detail = "kendall " + csv::fmt_real(worst_k) + ", pearson " + csv::fmt_real(worst_p) +
                 ", spearman " + csv::fmt_real(worst_s) + (stars_ok ? "" : ", stars BAD");
        return worst_k <= 1e-12 && worst_p <= 1e-12 && worst_s <= 1e-12 && stars_ok;
    });
}

void a7_h_index() {
    criterion("A7", "h-index exhaustive oracle (1000 lists)", [](std::string& detail) {
        if (h_index(std::vector<long long>{10, 8, 5, 4, 3}) != 4) {
            detail = "canonical example failed";
            return false;
        }
        SplitMix64 rng(0xACC7);
        for (int rep = 0; rep < 1000; ++rep) {
            const size_t n = bounded(rng, 80);
            std::vector<long long> citations(n);
            for (auto& c : citations) c = static_cast<long long>(bounded(rng, 60));
            if (h_index(citations) != ref::h_index_exhaustive(citations)) {
                detail = "mismatch vs oracle";
                return false;
            }
        }
        return true;
    });
}

void a8_null_model_reproducibility() {
    criterion("A8", "Null model bit-identical across runs and thread counts",
              [](std::string& detail) {
                  const auto g = ref::random_connected_graph(2000, 4000, 0xACC8);
                  omp_set_num_threads(1);
                  const auto single_a = null_model(g, 65, 40, 20240808);
                  const auto single_b = null_model(g, 65, 40, 20240808);
                  omp_set_num_threads(8);
                  const auto eight = null_model(g, 65, 40, 20240808);
                  omp_set_num_threads(omp_get_num_procs());
                  if (!(single_a == single_b)) {
                      detail = "two single-thread runs differ";
                      return false;
                  }
                  if (!(single_a == eight)) {
                      detail = "1-thread and 8-thread runs differ";
                      return false;
                  }
                  return true;
              });
}

void a9_end_to_end() {
    criterion("A9", "Fixture pipeline: golden bytes + negative *** correlations",
              [](std::string& detail) {
                  const fs::path out = fs::temp_directory_path() / "tn_acceptance_a9";
                  fs::remove_all(out);
                  const auto start = Clock::now();
                  const int rc =
                      run_cli("pipeline --config pipeline.cfg --out-dir " + out.string(),
                              kFixtures);
                  const double elapsed = seconds_since(start);
                  if (rc != 0) {
                      detail = "pipeline exit code " + std::to_string(rc);
                      return false;
                  }

                  size_t compared = 0;
                  for (const auto& entry : fs::directory_iterator(kGolden)) {
                      const auto name = entry.path().filename();
                      if (read_file(entry.path()) != read_file(out / name)) {
                          detail = "differs from golden: " + name.string();
                          return false;
                      }
                      ++compared;
                  }
                  for (const auto& entry : fs::directory_iterator(out)) {
                      if (!fs::exists(kGolden / entry.path().filename())) {
                          detail = "unexpected output: " +
                                   entry.path().filename().string();
                          return false;
                      }
                  }

                  // all nine coefficients negative and ***
                  std::istringstream table3(read_file(out / "table3_correlations.csv"));
                  std::string line;
                  std::getline(table3, line); // header
                  int rows = 0;
                  while (std::getline(table3, line)) {
                      const auto f = csv::split(line);
                      if (f.size() != 6) continue;
                      if (std::stod(f[2]) >= 0.0 || f[4] != "***") {
                          detail = "non-negative or unstarred row: " + line;
                          return false;
                      }
                      ++rows;
                  }
                  if (rows != 9) {
                      detail = "expected 9 correlation rows, got " + std::to_string(rows);
                      return false;
                  }
                  detail = std::to_string(compared) + " golden files, " +
                           fmt_seconds(elapsed);
                  return elapsed < 30.0;
              });
}

void a10_scale() {
    criterion("A10", "50k-node scale: TN, exact + sampled betweenness",
              [](std::string& detail) {
                  // four 12.5k-node clusters chained through short bridges: the
                  // bridge nodes are the top betweenness nodes and carry almost
                  // every cross-cluster pair, which is the regime the sampled
                  // estimator is meant to recover
                  const auto g = ref::clustered_bridge_graph(4, 12497, 4, 12, 0xACC10);
                  const uint32_t n = g.num_nodes();
                  const uint64_t m = g.num_edges();
                  if (n != 50000 || m < 250000 || m > 350000) {
                      detail = "graph has " + std::to_string(n) + " nodes, " +
                               std::to_string(m) + " edges, wanted 50k/~300k";
                      return false;
                  }

                  SplitMix64 rng(0x5EED65);
                  std::vector<uint32_t> pool(n);
                  std::iota(pool.begin(), pool.end(), 0u);
                  const auto seeds = sample_distinct(rng, pool, 65);
                  auto start = Clock::now();
                  const auto tn = compute_tn(g, seeds);
                  const double tn_time = seconds_since(start);
                  if (tn_time >= 1.0) {
                      detail = "TN took " + fmt_seconds(tn_time);
                      return false;
                  }
                  (void)tn;

                  omp_set_num_threads(8);
                  start = Clock::now();
                  const auto exact = betweenness_centrality(g);
                  const double exact_time = seconds_since(start);

                  start = Clock::now();
                  const auto sampled =
                      betweenness_centrality(g, {.samples = 2000, .rng_seed = 7});
                  const double sampled_time = seconds_since(start);
                  omp_set_num_threads(omp_get_num_procs());

                  std::vector<uint32_t> order(n);
                  std::iota(order.begin(), order.end(), 0u);
                  std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
                      return exact.values[a] > exact.values[b];
                  });
                  double worst_rel = 0.0;
                  for (int i = 0; i < 10; ++i) {
                      const uint32_t v = order[i];
                      worst_rel = std::max(worst_rel,
                                           std::abs(sampled.values[v] - exact.values[v]) /
                                               exact.values[v]);
                  }

                  detail = "tn " + fmt_seconds(tn_time) + ", exact " +
                           fmt_seconds(exact_time) + ", sampled " +
                           fmt_seconds(sampled_time) + ", top-10 rel err " +
                           csv::fmt_real(worst_rel);
                  return tn_time < 1.0 && exact_time < 600.0 && sampled_time < 30.0 &&
                         worst_rel < 0.05;
              });
}

void a11_fixture_shape() {
    criterion("A11", "Fixture TN histogram: oracle match, unimodal, 4-value band",
              [](std::string& detail) {
                  const fs::path out = fs::temp_directory_path() / "tn_acceptance_a9";
                  if (!fs::exists(out / "graph.bin")) {
                      detail = "A9 outputs missing";
                      return false;
                  }
                  const auto g = load_graph((out / "graph.bin").string());
                  std::ifstream scholars_in(out / "scholars.csv", std::ios::binary);
                  const auto scholars = read_scholar_csv(scholars_in);
                  std::vector<uint32_t> seeds;
                  for (const auto& s : scholars)
                      if (s.is_laureate) seeds.push_back(s.scholar_id);

                  // oracle histogram from independent per-seed BFS
                  const auto oracle = ref::min_over_seeds_bfs(g, seeds);
                  std::map<int32_t, uint64_t> expected;
                  uint64_t reachable = 0;
                  for (int32_t d : oracle)
                      if (d >= 0) {
                          ++expected[d];
                          ++reachable;
                      }

                  std::ifstream tn_in(out / "tn.csv", std::ios::binary);
                  const auto tn = read_tn_csv(tn_in, scholars.size());
                  if (tn.histogram != expected) {
                      detail = "histogram differs from oracle";
                      return false;
                  }

                  // unimodal: counts rise then fall over the dense tn range
                  std::vector<uint64_t> counts;
                  for (const auto& [_, c] : tn.histogram) counts.push_back(c);
                  size_t peak = std::max_element(counts.begin(), counts.end()) -
                                counts.begin();
                  for (size_t i = 0; i + 1 < counts.size(); ++i) {
                      if (i < peak && counts[i] > counts[i + 1]) {
                          detail = "not unimodal before peak";
                          return false;
                      }
                      if (i >= peak && counts[i] < counts[i + 1]) {
                          detail = "not unimodal after peak";
                          return false;
                      }
                  }

                  // best contiguous 4-value band share
                  double best_share = 0.0;
                  for (const auto& [lo, _] : tn.histogram) {
                      uint64_t in_band = 0;
                      for (int32_t v = lo; v < lo + 4; ++v) {
                          auto it = tn.histogram.find(v);
                          if (it != tn.histogram.end()) in_band += it->second;
                      }
                      best_share = std::max(
                          best_share, static_cast<double>(in_band) / reachable);
                  }
                  detail = "band share " + csv::fmt_real(best_share);
                  return best_share > 0.90;
              });
}

} // namespace

int main() {
    std::printf("acceptance criteria\n");
    a1_tn_oracle();
    a2_betweenness_oracle();
    a3_load_oracle();
    a4_closeness_degree();
    a5_eigenvector();
    a6_statistics();
    a7_h_index();
    a8_null_model_reproducibility();
    a9_end_to_end();
    a10_scale();
    a11_fixture_shape();
    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
