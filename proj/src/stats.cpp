#include "hawkes/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hawkes {

SampleSummary summarize(const std::vector<double>& x) {
    SampleSummary s;
    s.count = x.size();
    if (x.empty()) {
        return s;
    }
    double sum = 0.0;
    for (double v : x) {
        sum += v;
    }
    s.mean = sum / static_cast<double>(x.size());
    double m2 = 0.0;
    double m3 = 0.0;
    for (double v : x) {
        const double d = v - s.mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    const double n = static_cast<double>(x.size());
    s.variance = (x.size() > 1) ? m2 / (n - 1.0) : 0.0;
    s.m3 = m3 / n;
    s.se_mean = std::sqrt(s.variance / n);
    return s;
}

PairedSummary summarize_pairs(const std::vector<double>& x,
                              const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("summarize_pairs: need equal sizes >= 2");
    }
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double cxy = 0.0, cxx = 0.0, cyy = 0.0, m22 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        cxy += dx * dy;
        cxx += dx * dx;
        cyy += dy * dy;
        m22 += dx * dx * dy * dy;
    }
    PairedSummary p;
    p.cov = cxy / (n - 1.0);
    p.corr = cxy / std::sqrt(cxx * cyy);
    m22 /= n;
    p.se_cov = std::sqrt(std::max(m22 - p.cov * p.cov, 0.0) / n);
    return p;
}

double kolmogorov_tail(double lambda) {
    if (lambda < 0.2) {
        return 1.0;
    }
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        sign = -sign;
        if (term < 1e-16) {
            break;
        }
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_one_sample(std::vector<double> samples,
                       const std::function<double(double)>& cdf) {
    if (samples.empty()) {
        throw std::invalid_argument("ks_one_sample: empty sample");
    }
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max({d, f - lo, hi - f});
    }
    const double sn = std::sqrt(n);
    const double lambda = (sn + 0.12 + 0.11 / sn) * d;
    return {d, kolmogorov_tail(lambda)};
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("ks_two_sample: empty sample");
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) {
            ++i;
        }
        while (j < b.size() && b[j] <= x) {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    const double ne = na * nb / (na + nb);
    const double sn = std::sqrt(ne);
    const double lambda = (sn + 0.12 + 0.11 / sn) * d;
    return {d, kolmogorov_tail(lambda)};
}

namespace {

// Regularized lower incomplete gamma by series; x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 1000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-15) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma by continued fraction; x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double fpmin = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin) {
            d = fpmin;
        }
        c = b + an / c;
        if (std::abs(c) < fpmin) {
            c = fpmin;
        }
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) {
            break;
        }
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) {
        throw std::invalid_argument("gamma_q: need a > 0, x >= 0");
    }
    if (x == 0.0) {
        return 1.0;
    }
    if (x < a + 1.0) {
        return 1.0 - gamma_p_series(a, x);
    }
    return gamma_q_cf(a, x);
}

Chi2Result chi2_two_sample(std::vector<double> a, std::vector<double> b,
                           int target_bins, double min_expected) {
    if (a.size() < 20 || b.size() < 20) {
        throw std::invalid_argument("chi2_two_sample: samples too small");
    }
    std::vector<double> pooled;
    pooled.reserve(a.size() + b.size());
    pooled.insert(pooled.end(), a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    std::sort(pooled.begin(), pooled.end());

    // Bin edges at pooled quantiles.
    std::vector<double> edges;
    for (int k = 1; k < target_bins; ++k) {
        const std::size_t idx =
            (pooled.size() * static_cast<std::size_t>(k)) / target_bins;
        edges.push_back(pooled[idx]);
    }
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const auto histogram = [&edges](const std::vector<double>& v) {
        std::vector<double> h(edges.size() + 1, 0.0);
        for (double x : v) {
            const std::size_t bin = static_cast<std::size_t>(
                std::upper_bound(edges.begin(), edges.end(), x) - edges.begin());
            h[bin] += 1.0;
        }
        return h;
    };
    std::vector<double> ha = histogram(a);
    std::vector<double> hb = histogram(b);

    // Merge adjacent bins until every cell's expected count under pooling
    // clears the validity floor.
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const auto expected_ok = [&](double ca, double cb) {
        const double tot = ca + cb;
        return tot * na / (na + nb) >= min_expected &&
               tot * nb / (na + nb) >= min_expected;
    };
    std::vector<double> ma, mb;
    double acc_a = 0.0, acc_b = 0.0;
    for (std::size_t i = 0; i < ha.size(); ++i) {
        acc_a += ha[i];
        acc_b += hb[i];
        if (expected_ok(acc_a, acc_b)) {
            ma.push_back(acc_a);
            mb.push_back(acc_b);
            acc_a = acc_b = 0.0;
        }
    }
    if (acc_a + acc_b > 0.0) {
        if (!ma.empty()) {
            ma.back() += acc_a;
            mb.back() += acc_b;
        } else {
            ma.push_back(acc_a);
            mb.push_back(acc_b);
        }
    }
    if (ma.size() < 2) {
        throw std::invalid_argument("chi2_two_sample: degenerate binning");
    }

    const double ka = std::sqrt(nb / na);
    const double kb = std::sqrt(na / nb);
    double stat = 0.0;
    for (std::size_t i = 0; i < ma.size(); ++i) {
        const double num = ka * ma[i] - kb * mb[i];
        stat += num * num / (ma[i] + mb[i]);
    }
    const int dof = static_cast<int>(ma.size()) - 1;
    return {stat, dof, gamma_q(0.5 * dof, 0.5 * stat)};
}

double smallest_eigenvalue(std::vector<double> m, std::size_t n) {
    if (m.size() != n * n || n == 0) {
        throw std::invalid_argument("smallest_eigenvalue: bad dimensions");
    }
    const auto at = [&m, n](std::size_t i, std::size_t j) -> double& {
        return m[i * n + j];
    };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                off += at(i, j) * at(i, j);
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(at(p, q)) < 1e-300) {
                    continue;
                }
                const double theta = 0.5 * (at(q, q) - at(p, p)) / at(p, q);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = at(k, p);
                    const double mkq = at(k, q);
                    at(k, p) = c * mkp - s * mkq;
                    at(k, q) = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = at(p, k);
                    const double mqk = at(q, k);
                    at(p, k) = c * mpk - s * mqk;
                    at(q, k) = s * mpk + c * mqk;
                }
            }
        }
    }
    double lo = at(0, 0);
    for (std::size_t i = 1; i < n; ++i) {
        lo = std::min(lo, at(i, i));
    }
    return lo;
}

} // namespace hawkes
