#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hawkes/params.hpp"

namespace hawkes {

inline constexpr const char* kVersionString = "hawkes-0.1.0";

enum class CheckKind { MomentZ, Flln, Fclt, Rescaled, Passage };

const char* check_kind_name(CheckKind k);
CheckKind check_kind_from_name(const std::string& name);

struct Thresholds {
    double z_max = 4.0;       // moment z-scores
    double ks_p = 0.01;       // one-sample KS floor
    double two_sample_p = 0.001; // chi-square / two-sample KS floor
    double corr_flat_min = 0.8;  // super-critical flatness
    double corr_zero_max = 0.1;  // sub-critical decorrelation
    double abs_err = 0.02;       // passage-time pointwise error
};

/// One Monte Carlo experiment: which statistic to form, at which scales and
/// times, against which limit law, with pinned thresholds.
struct ExperimentSpec {
    std::string name;
    CheckKind kind = CheckKind::MomentZ;
    double mu = 0.0;
    double alpha = 1.0;
    double beta = 1.0;
    std::vector<double> scales{100.0}; // z0 = n values
    long paths_per_scale = 1000;
    std::vector<double> times{1.0}; // absolute t (fixed-time kinds) or scaled s
    std::uint64_t master_seed = 20200317;
    long event_cap = 10'000'000;
    Thresholds thresholds;
    // Rescaled-critical only: alpha is derived as beta + gamma/n.
    std::optional<double> gamma;
    long cir_paths = 100'000;
    double cir_step = 1e-3;
    bool skip_gate = false; // the simulator cross-validation gate

    std::string to_json() const;
    static ExperimentSpec from_json(const std::string& text);

    HawkesParams params_at_scale(double n) const;
};

struct CheckEntry {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    std::string comparison; // "<=", ">=", ...
    bool pass = false;
};

struct McReport {
    std::string experiment;
    std::string version;
    std::uint64_t master_seed = 0;
    std::vector<CheckEntry> entries;
    bool pass = false;
    int attempt = 0; // 0 = first seed, 1 = retry seed

    void add(std::string name, double value, double threshold,
             std::string comparison);
    std::string to_json() const;
    std::string to_table() const;
};

McReport run_moment_check(const ExperimentSpec& spec, int workers);
McReport run_flln_check(const ExperimentSpec& spec, int workers);
McReport run_fclt_check(const ExperimentSpec& spec, int workers);
McReport run_rescaled_check(const ExperimentSpec& spec, int workers);
McReport run_passage_check(const ExperimentSpec& spec, int workers);

McReport run_experiment(const ExperimentSpec& spec, int workers);

/// Suite policy: one retry with a fresh seed; a second failure is final.
McReport run_experiment_with_retry(const ExperimentSpec& spec, int workers);

/// Direct-vs-cluster two-sample chi-square on N_T; runs as a gate before
/// law comparisons inside every suite.
CheckEntry simulator_cross_check(const HawkesParams& p, double T, long paths,
                                 std::uint64_t seed, int workers, double p_floor);

} // namespace hawkes
