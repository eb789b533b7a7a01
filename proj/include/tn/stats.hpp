#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tn/turing_number.hpp"

namespace tn {

enum class CorrMethod { pearson, spearman, kendall };

const char* to_string(CorrMethod m);

struct CorrelationResult {
    CorrMethod method = CorrMethod::pearson;
    double coefficient = 0.0; // in [-1, 1]
    double p_value = 1.0;     // two-sided
    size_t n = 0;
    std::string stars;        // "", "*", "**", "***"
};

// Sample correlation; p from t = r*sqrt((n-2)/(1-r^2)) against a t
// distribution with n-2 degrees of freedom, two-sided.
CorrelationResult pearson(std::span<const double> x, std::span<const double> y);

// Pearson of average ranks (ties get the mean of the positions they occupy).
CorrelationResult spearman(std::span<const double> x, std::span<const double> y);

// Tau-b with tie corrections, O(n log n) via merge-sort inversion counting;
// p from the normal approximation with tie-corrected variance.
CorrelationResult kendall_tau_b(std::span<const double> x, std::span<const double> y);

// *p<0.1, **p<0.05, ***p<0.01.
std::string significance_stars(double p);

// Continued-fraction evaluation, relative accuracy ~1e-14.
double regularized_incomplete_beta(double a, double b, double x);

// P(|T| >= t) for Student's t with dof degrees of freedom.
double students_t_two_sided_p(double t, double dof);

// P(|Z| >= z) for a standard normal.
double normal_two_sided_p(double z);

struct IndicatorColumn {
    std::string name;
    std::vector<double> values;   // aligned with scholar ids
    std::vector<uint8_t> present; // empty = all present
};

struct CorrelationRow {
    std::string indicator;
    CorrelationResult result;
};

// One row per (method, indicator) over reachable scholars, missing indicator
// values deleted pairwise. Rows are grouped by method in the order pearson,
// spearman, kendall.
std::vector<CorrelationRow> correlate_tn(const TnResult& tn,
                                         std::span<const IndicatorColumn> indicators);

} // namespace tn
