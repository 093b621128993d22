#ifndef MARGINLAB_EXPERIMENTS_HPP
#define MARGINLAB_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "marginlab/intervals.hpp"
#include "marginlab/parallel.hpp"

namespace marginlab {

struct ExperimentConfig {
    IntervalsProblem problem;
    int n = 500;
    int rounds = 50;
    int replicates = 200;
    double t = 2.0;
    int complexity_draws = 500;  // Monte Carlo draws for R_n over the stump class
    std::vector<double> gammas = {2.0 / 3.0, 0.8, 1.0};
    double c_gamma = 1.0;
    std::uint64_t seed = 1;
};

// One replicate: fresh sample, AdaBoost run, per-round bound evaluations and
// exact-oracle comparisons.  Coverage flags require the bound to dominate at
// every completed round (the bounds hold uniformly over the class).
struct ReplicateRecord {
    std::uint64_t replicate = 0;
    int rounds_completed = 0;
    double rn_hat = 0.0;
    double rn_std_error = 0.0;
    double true_error = 0.0;   // final round
    double train_error = 0.0;  // final round
    double bound_t2 = 0.0;
    double bound_adaboost = 0.0;
    std::vector<double> gamma_bounds;  // final round, one per configured gamma
    double levy_sup = 0.0;             // sup over rounds of L(F_{n,f}, F_f)
    double bound_t10 = 0.0;
    bool covered_t2 = false;
    bool covered_t10 = false;
    int gamma_ordering_violations = 0;
    // per-round trajectories (kept for the curves CSV and the ordering check)
    std::vector<double> round_true_error;
    std::vector<double> round_train_error;
    std::vector<double> round_bound_t2;
    std::vector<std::vector<double>> round_gamma_bounds;  // [round][gamma]
};

struct ExperimentReport {
    int schema = 1;
    ExperimentConfig config;
    std::vector<ReplicateRecord> records;
    double coverage_t2 = 0.0;
    double coverage_t10 = 0.0;
    long gamma_ordering_violations = 0;
};

ExperimentReport run_intervals_experiment(const ExperimentConfig& config,
                                          Execution exec = Execution::parallel);

// JSON report (schema 1); per-replicate summaries plus the config echo.
std::string report_to_json(const ExperimentReport& report);

// Figure-style per-round curves of the first replicate:
// round,true_error,train_error,bound_t2,bound_gamma_<gamma>...
std::string curves_csv(const ExperimentReport& report);

// Empirical-to-true gamma-margin ratios on the intervals testbed.
struct RatioConfig {
    IntervalsProblem problem;
    int n = 1000;
    int rounds = 20;
    int replicates = 50;
    std::vector<double> gammas = {2.0 / 3.0, 0.8, 1.0};
    std::uint64_t seed = 1;
    int vc_dimension_assumed = 2;  // stumps on the line
};

struct RatioSummary {
    double gamma = 0.0;
    double min = 0.0;
    double median = 0.0;
    double max = 0.0;
    bool outside_guarantee = false;  // gamma below the VC threshold gamma*
    std::vector<double> ratios;      // per replicate
};

struct RatioReport {
    RatioConfig config;
    double gamma_star = 0.0;
    std::vector<RatioSummary> per_gamma;
};

RatioReport margin_ratio_experiment(const RatioConfig& config,
                                    Execution exec = Execution::parallel);

std::string ratio_report_to_json(const RatioReport& report);
std::string ratio_report_to_csv(const RatioReport& report);  // replicate,gamma,ratio

}  // namespace marginlab

#endif
