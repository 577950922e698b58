#pragma once

#include <variant>

#include "hawkes/params.hpp"

namespace hawkes {

/// Covariance function of the limiting Gaussian process G of the
/// Z-fluctuation: for s <= t, (alpha^2/(alpha-beta)) (e^{(a-b)(t+s)} -
/// e^{(a-b)t}), with the alpha = beta value alpha^2 s. Symmetrized in (s,t).
double cov_g(const HawkesParams& p, double s, double t);

/// Covariance of the N-fluctuation limit H = G/alpha + (beta/alpha) int G.
/// No closed form; evaluated by adaptive quadrature of the covariance
/// expansion (single plus double integrals of cov_g). Unlike cov_g it has
/// no product form, so H is not Markov.
double cov_h(const HawkesParams& p, double s, double t);

/// Var(H_t) = cov_h(t, t).
double var_h(const HawkesParams& p, double t);

/// Standard normal CDF via erfc.
double normal_cdf(double x);

/// Normal approximation of P(tau_K <= t) = P(N_t >= K):
/// 1 - Phi((K - n psi(t)) / sqrt(n Var(H_t))) with n = z0.
double passage_time_cdf(const HawkesParams& p, double K, double t);

/// Deterministic predictor pair for the log-n-rescaled laws of large
/// numbers: the limits of Z_{s tau_n}/n^{1+s} (super) or Z_{s t_n}/n^{1-s}
/// (sub), and the matching N predictor at scale n^{1+s} (super) or n (sub).
struct RescaledCurves {
    double z_pred;
    double n_pred;
};

RescaledCurves lln_rescaled_curves(const HawkesParams& p, double s, double n);

/// Limit law of the doubly-rescaled fluctuation statistic, by regime.
struct SuperCriticalXi {
    double variance; // alpha^2 / (alpha - beta)
};

struct SubCriticalR {
    double variance; // alpha^2 / (beta - alpha), Cov zero off-diagonal
};

struct CriticalCir {
    double beta;
    double gamma;
    double mu;
    double x0; // = 1 in the theorem
};

using RescaledLimitLaw = std::variant<SuperCriticalXi, SubCriticalR, CriticalCir>;

RescaledLimitLaw rescaled_limit_law(const HawkesParams& p, const Regime& regime);

} // namespace hawkes
