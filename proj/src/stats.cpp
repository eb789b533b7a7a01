#include "tn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tn/errors.hpp"

namespace tn {

const char* to_string(CorrMethod m) {
    switch (m) {
        case CorrMethod::pearson: return "pearson";
        case CorrMethod::spearman: return "spearman";
        case CorrMethod::kendall: return "kendall";
    }
    return "?";
}

std::string significance_stars(double p) {
    if (p < 0.01) return "***";
    if (p < 0.05) return "**";
    if (p < 0.1) return "*";
    return "";
}

namespace {

constexpr double kCfEps = 1e-15;
constexpr double kCfTiny = 1e-300;

// Continued fraction for the incomplete beta (modified Lentz).
double betacf(double a, double b, double x) {
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kCfTiny) d = kCfTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kCfTiny) d = kCfTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kCfTiny) c = kCfTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kCfTiny) d = kCfTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kCfTiny) c = kCfTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kCfEps) return h;
    }
    throw numeric_error("incomplete beta continued fraction did not converge");
}

void check_lengths(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw validation_error("correlation input lengths differ: " +
                               std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    if (x.size() < 3)
        throw validation_error("correlation needs at least 3 samples, got " +
                               std::to_string(x.size()));
}

// Average ranks; tied values share the mean of the positions they occupy.
std::vector<double> average_ranks(std::span<const double> x) {
    const size_t n = x.size();
    std::vector<uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(n);
    size_t i = 0;
    while (i < n) {
        size_t j = i + 1;
        while (j < n && x[idx[j]] == x[idx[i]]) ++j;
        const double mean_rank = 0.5 * (static_cast<double>(i) + static_cast<double>(j - 1)) + 1.0;
        for (size_t k = i; k < j; ++k) ranks[idx[k]] = mean_rank;
        i = j;
    }
    return ranks;
}

double clamp_coefficient(double r) { return std::clamp(r, -1.0, 1.0); }

CorrelationResult pearson_impl(std::span<const double> x, std::span<const double> y,
                               CorrMethod method) {
    const size_t n = x.size();
    // Welford-style co-moment accumulation.
    double mean_x = 0.0, mean_y = 0.0, m2x = 0.0, m2y = 0.0, cxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double k = 1.0 / static_cast<double>(i + 1);
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        mean_x += dx * k;
        mean_y += dy * k;
        m2x += dx * (x[i] - mean_x);
        m2y += dy * (y[i] - mean_y);
        cxy += dx * (y[i] - mean_y);
    }
    if (m2x <= 0.0 || m2y <= 0.0)
        throw numeric_error(std::string("correlation undefined: ") +
                            (m2x <= 0.0 ? "x" : "y") + " is constant");

    CorrelationResult res;
    res.method = method;
    res.n = n;
    res.coefficient = clamp_coefficient(cxy / std::sqrt(m2x * m2y));
    const double r = res.coefficient;
    const double dof = static_cast<double>(n - 2);
    if (1.0 - r * r <= 0.0) {
        res.p_value = 0.0;
    } else {
        const double t = r * std::sqrt(dof / (1.0 - r * r));
        res.p_value = students_t_two_sided_p(t, dof);
    }
    res.stars = significance_stars(res.p_value);
    return res;
}

// Merge-sort inversion counting over y (already grouped by x).
uint64_t count_inversions(std::vector<double>& v, std::vector<double>& tmp,
                          size_t lo, size_t hi) {
    if (hi - lo < 2) return 0;
    const size_t mid = (lo + hi) / 2;
    uint64_t inv = count_inversions(v, tmp, lo, mid) + count_inversions(v, tmp, mid, hi);
    size_t a = lo, b = mid, out = lo;
    while (a < mid && b < hi) {
        if (v[b] < v[a]) {
            inv += mid - a;
            tmp[out++] = v[b++];
        } else {
            tmp[out++] = v[a++];
        }
    }
    while (a < mid) tmp[out++] = v[a++];
    while (b < hi) tmp[out++] = v[b++];
    std::copy(tmp.begin() + lo, tmp.begin() + hi, v.begin() + lo);
    return inv;
}

struct TieTallies {
    uint64_t pairs = 0;        // sum t(t-1)/2
    double v_term = 0.0;       // sum t(t-1)(2t+5)
    double pairs_d = 0.0;      // sum t(t-1)
    double triples_d = 0.0;    // sum t(t-1)(t-2)
};

template <class Eq>
TieTallies tally_runs(size_t n, Eq same) {
    TieTallies t;
    size_t i = 0;
    while (i < n) {
        size_t j = i + 1;
        while (j < n && same(j - 1, j)) ++j;
        const double run = static_cast<double>(j - i);
        t.pairs += static_cast<uint64_t>(run * (run - 1) / 2);
        t.v_term += run * (run - 1) * (2 * run + 5);
        t.pairs_d += run * (run - 1);
        t.triples_d += run * (run - 1) * (run - 2);
        i = j;
    }
    return t;
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    if (x < (a + 1.0) / (a + b + 2.0))
        return std::exp(ln_front) * betacf(a, b, x) / a;
    return 1.0 - std::exp(ln_front) * betacf(b, a, 1.0 - x) / b;
}

double students_t_two_sided_p(double t, double dof) {
    return regularized_incomplete_beta(dof / 2.0, 0.5, dof / (dof + t * t));
}

double normal_two_sided_p(double z) {
    return std::erfc(std::abs(z) / std::sqrt(2.0));
}

CorrelationResult pearson(std::span<const double> x, std::span<const double> y) {
    check_lengths(x, y);
    return pearson_impl(x, y, CorrMethod::pearson);
}

CorrelationResult spearman(std::span<const double> x, std::span<const double> y) {
    check_lengths(x, y);
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    return pearson_impl(rx, ry, CorrMethod::spearman);
}

CorrelationResult kendall_tau_b(std::span<const double> x, std::span<const double> y) {
    check_lengths(x, y);
    const size_t n = x.size();

    std::vector<uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
        if (x[a] != x[b]) return x[a] < x[b];
        return y[a] < y[b];
    });

    const auto x_ties = tally_runs(n, [&](size_t a, size_t b) { return x[idx[a]] == x[idx[b]]; });
    const auto joint_ties = tally_runs(n, [&](size_t a, size_t b) {
        return x[idx[a]] == x[idx[b]] && y[idx[a]] == y[idx[b]];
    });

    std::vector<double> ys(n), tmp(n);
    for (size_t i = 0; i < n; ++i) ys[i] = y[idx[i]];
    const uint64_t swaps = count_inversions(ys, tmp, 0, n); // ys ends up sorted
    const auto y_ties = tally_runs(n, [&](size_t a, size_t b) { return ys[a] == ys[b]; });

    const uint64_t n0 = static_cast<uint64_t>(n) * (n - 1) / 2;
    if (x_ties.pairs == n0 || y_ties.pairs == n0)
        throw numeric_error(std::string("correlation undefined: ") +
                            (x_ties.pairs == n0 ? "x" : "y") + " is constant");

    // C - D = n0 - n1 - n2 + n3 - 2*swaps, all tie bookkeeping explicit.
    const double s_stat = static_cast<double>(n0) - static_cast<double>(x_ties.pairs) -
                          static_cast<double>(y_ties.pairs) +
                          static_cast<double>(joint_ties.pairs) -
                          2.0 * static_cast<double>(swaps);

    CorrelationResult res;
    res.method = CorrMethod::kendall;
    res.n = n;
    const double den = std::sqrt(static_cast<double>(n0 - x_ties.pairs)) *
                       std::sqrt(static_cast<double>(n0 - y_ties.pairs));
    res.coefficient = clamp_coefficient(s_stat / den);

    // Tie-corrected variance of S for the normal approximation.
    const double dn = static_cast<double>(n);
    const double v0 = dn * (dn - 1.0) * (2.0 * dn + 5.0);
    double var = (v0 - x_ties.v_term - y_ties.v_term) / 18.0;
    var += x_ties.pairs_d * y_ties.pairs_d / (2.0 * dn * (dn - 1.0));
    var += x_ties.triples_d * y_ties.triples_d / (9.0 * dn * (dn - 1.0) * (dn - 2.0));
    if (var <= 0.0) {
        res.p_value = 1.0;
    } else {
        res.p_value = normal_two_sided_p(s_stat / std::sqrt(var));
    }
    res.stars = significance_stars(res.p_value);
    return res;
}

std::vector<CorrelationRow> correlate_tn(const TnResult& tn,
                                         std::span<const IndicatorColumn> indicators) {
    const size_t n = tn.tn.size();
    for (const auto& col : indicators) {
        if (col.values.size() != n)
            throw validation_error("indicator '" + col.name + "' covers " +
                                   std::to_string(col.values.size()) + " scholars, expected " +
                                   std::to_string(n));
        if (!col.present.empty() && col.present.size() != n)
            throw validation_error("indicator '" + col.name + "' presence mask has wrong length");
    }

    std::vector<CorrelationRow> rows;
    for (CorrMethod method : {CorrMethod::pearson, CorrMethod::spearman, CorrMethod::kendall}) {
        for (const auto& col : indicators) {
            std::vector<double> tx, ty;
            for (size_t v = 0; v < n; ++v) {
                if (!tn.reachable[v]) continue; // pairwise deletion
                if (!col.present.empty() && !col.present[v]) continue;
                tx.push_back(static_cast<double>(tn.tn[v]));
                ty.push_back(col.values[v]);
            }
            if (tx.size() < 3)
                throw validation_error("indicator '" + col.name + "' has fewer than 3 complete pairs");
            CorrelationResult res;
            switch (method) {
                case CorrMethod::pearson: res = pearson(tx, ty); break;
                case CorrMethod::spearman: res = spearman(tx, ty); break;
                case CorrMethod::kendall: res = kendall_tau_b(tx, ty); break;
            }
            rows.push_back({col.name, res});
        }
    }
    return rows;
}

} // namespace tn
