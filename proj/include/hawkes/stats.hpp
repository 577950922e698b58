#pragma once

#include <functional>
#include <vector>

namespace hawkes {

struct SampleSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double variance = 0.0; // unbiased
    double m3 = 0.0;       // third central moment
    double se_mean = 0.0;  // standard error of the mean
};

SampleSummary summarize(const std::vector<double>& x);

/// Sample covariance and Pearson correlation of paired samples.
struct PairedSummary {
    double cov = 0.0;
    double corr = 0.0;
    double se_cov = 0.0; // delta-method standard error of the covariance
};

PairedSummary summarize_pairs(const std::vector<double>& x,
                              const std::vector<double>& y);

struct KsResult {
    double statistic; // sup |F_n - F|
    double p_value;   // asymptotic, Stephens-corrected
};

/// One-sample Kolmogorov-Smirnov test against a fully specified CDF.
KsResult ks_one_sample(std::vector<double> samples,
                       const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov test.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

struct Chi2Result {
    double statistic;
    int dof;
    double p_value;
};

/// Two-sample chi-square on pooled-quantile bins, merged so that every bin
/// has expected count >= min_expected in both samples.
Chi2Result chi2_two_sample(std::vector<double> a, std::vector<double> b,
                           int target_bins = 20, double min_expected = 5.0);

/// Regularized upper incomplete gamma Q(a, x).
double gamma_q(double a, double x);

/// Kolmogorov distribution tail Q(lambda) = 2 sum (-1)^{k-1} e^{-2 k^2 lambda^2}.
double kolmogorov_tail(double lambda);

/// Smallest eigenvalue of a symmetric matrix (row-major, n x n), by Jacobi
/// rotations; used for Gram-matrix positive-semidefiniteness checks.
double smallest_eigenvalue(std::vector<double> m, std::size_t n);

} // namespace hawkes
