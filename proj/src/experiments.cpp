#include "marginlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "marginlab/boosting.hpp"
#include "marginlab/bounds.hpp"
#include "marginlab/complexity.hpp"
#include "marginlab/gamma.hpp"
#include "marginlab/levy.hpp"
#include "marginlab/rng.hpp"

namespace marginlab {

namespace {

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t m = v.size();
    return m % 2 == 1 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

ReplicateRecord run_replicate(const ExperimentConfig& config, std::uint64_t r) {
    ReplicateRecord rec;
    rec.replicate = r;
    Dataset data = sample_dataset(config.problem, config.n,
                                  substream_seed(config.seed, r, /*leaf=*/0));
    BoostingTrace trace = adaboost(data, config.rounds, weak_learn_stump);
    rec.rounds_completed = static_cast<int>(trace.rounds.size());

    StumpClass stumps;
    ComplexityEstimate rn =
        estimate_rademacher(stumps, data, config.complexity_draws,
                            substream_seed(config.seed, r, /*leaf=*/1),
                            {Execution::serial, false});
    rec.rn_hat = rn.value;
    rec.rn_std_error = rn.std_error;

    const int n = config.n;
    const auto cost = CostFunction::upper_step();
    std::vector<double> gammas = config.gammas;

    std::vector<double> scores(data.size(), 0.0);
    double alpha_total = 0.0;
    std::vector<AdaBoostRoundSummary> prefix_rounds;
    rec.covered_t2 = true;
    rec.levy_sup = 0.0;
    for (std::size_t k = 0; k < trace.rounds.size(); ++k) {
        const auto& round = trace.rounds[k];
        for (std::size_t i = 0; i < data.size(); ++i)
            scores[i] += round.alpha * round.hypothesis.value_at(data, i);
        alpha_total += round.alpha;
        prefix_rounds.push_back({round.error});

        std::vector<double> margins(data.size());
        for (std::size_t i = 0; i < data.size(); ++i)
            margins[i] = static_cast<double>(data.label(i)) * scores[i] / alpha_total;
        MarginDistribution empirical = MarginDistribution::from_values(margins);
        VotingClassifier prefix = trace.prefix_classifier(k + 1);
        MarginDistribution exact = exact_margin_distribution(prefix, config.problem);

        double true_err = exact_generalization_error(prefix, config.problem);
        double train_err = empirical.cdf(0.0);
        BoundReport t2 = theorem2_bound(empirical, rn, cost, config.t, n,
                                        default_delta_grid(empirical, n));
        rec.round_true_error.push_back(true_err);
        rec.round_train_error.push_back(train_err);
        rec.round_bound_t2.push_back(t2.bound_value);
        if (t2.bound_value < true_err) rec.covered_t2 = false;

        std::vector<double> gbounds;
        for (double gamma : gammas) {
            double delta_hat = empirical_gamma_margin(empirical, gamma, n);
            gbounds.push_back(gamma_bound(delta_hat, gamma, n, config.c_gamma));
        }
        for (std::size_t g = 1; g < gbounds.size(); ++g)
            if (gammas[g] > gammas[g - 1] && gbounds[g] < gbounds[g - 1] - 1e-12)
                ++rec.gamma_ordering_violations;
        rec.round_gamma_bounds.push_back(gbounds);

        rec.levy_sup = std::max(
            rec.levy_sup,
            levy_distance(StepCDF::from_margins(empirical), StepCDF::from_margins(exact)));

        if (k + 1 == trace.rounds.size()) {
            rec.true_error = true_err;
            rec.train_error = train_err;
            rec.bound_t2 = t2.bound_value;
            rec.gamma_bounds = gbounds;
            rec.bound_adaboost =
                adaboost_product_bound(prefix_rounds, rn, config.t, n).bound_value;
        }
    }
    rec.bound_t10 = theorem10_bound(rn, /*m_bound=*/1.0, n, config.t);
    rec.covered_t10 = rec.levy_sup <= rec.bound_t10;
    return rec;
}

}  // namespace

ExperimentReport run_intervals_experiment(const ExperimentConfig& config, Execution exec) {
    if (config.replicates < 1) throw std::invalid_argument("need at least one replicate");
    config.problem.validate();
    ExperimentReport report;
    report.config = config;
    report.records.resize(static_cast<std::size_t>(config.replicates));
    parallel_for(static_cast<std::size_t>(config.replicates), exec,
                 [&](std::size_t r) { report.records[r] = run_replicate(config, r); });
    long covered_t2 = 0, covered_t10 = 0;
    for (const auto& rec : report.records) {
        covered_t2 += rec.covered_t2 ? 1 : 0;
        covered_t10 += rec.covered_t10 ? 1 : 0;
        report.gamma_ordering_violations += rec.gamma_ordering_violations;
    }
    report.coverage_t2 = static_cast<double>(covered_t2) / config.replicates;
    report.coverage_t10 = static_cast<double>(covered_t10) / config.replicates;
    return report;
}

namespace {

nlohmann::json config_to_json(const ExperimentConfig& c) {
    nlohmann::json j;
    j["targets"] = c.problem.targets;
    j["noise"] = c.problem.noise;
    j["n"] = c.n;
    j["rounds"] = c.rounds;
    j["replicates"] = c.replicates;
    j["t"] = c.t;
    j["complexity_draws"] = c.complexity_draws;
    j["gammas"] = c.gammas;
    j["c_gamma"] = c.c_gamma;
    j["seed"] = c.seed;
    j["delta_grid"] = "dyadic-and-margin-values";
    j["e_clamp"] = "1/(2n)";
    return j;
}

}  // namespace

std::string report_to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["schema"] = report.schema;
    j["config"] = config_to_json(report.config);
    j["coverage_t2"] = report.coverage_t2;
    j["coverage_t10"] = report.coverage_t10;
    j["gamma_ordering_violations"] = report.gamma_ordering_violations;
    j["replicates"] = nlohmann::json::array();
    for (const auto& rec : report.records) {
        nlohmann::json jr;
        jr["replicate"] = rec.replicate;
        jr["rounds_completed"] = rec.rounds_completed;
        jr["rn_hat"] = rec.rn_hat;
        jr["rn_std_error"] = rec.rn_std_error;
        jr["true_error"] = rec.true_error;
        jr["train_error"] = rec.train_error;
        jr["bound_t2"] = rec.bound_t2;
        jr["bound_adaboost"] = rec.bound_adaboost;
        jr["gamma_bounds"] = rec.gamma_bounds;
        jr["levy_sup"] = rec.levy_sup;
        jr["bound_t10"] = rec.bound_t10;
        jr["covered_t2"] = rec.covered_t2;
        jr["covered_t10"] = rec.covered_t10;
        j["replicates"].push_back(jr);
    }
    return j.dump(2);
}

std::string curves_csv(const ExperimentReport& report) {
    if (report.records.empty()) return "";
    const auto& rec = report.records.front();
    std::string out = "round,true_error,train_error,bound_t2";
    char buf[64];
    for (double gamma : report.config.gammas) {
        std::snprintf(buf, sizeof(buf), ",bound_gamma_%g", gamma);
        out += buf;
    }
    out += "\n";
    for (std::size_t k = 0; k < rec.round_true_error.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g", k + 1, rec.round_true_error[k],
                      rec.round_train_error[k], rec.round_bound_t2[k]);
        out += buf;
        for (double g : rec.round_gamma_bounds[k]) {
            std::snprintf(buf, sizeof(buf), ",%.17g", g);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

RatioReport margin_ratio_experiment(const RatioConfig& config, Execution exec) {
    if (config.replicates < 1) throw std::invalid_argument("need at least one replicate");
    config.problem.validate();
    RatioReport report;
    report.config = config;
    report.gamma_star = gamma_threshold_from_vc(config.vc_dimension_assumed).gamma_star;

    std::vector<std::vector<double>> ratios(config.gammas.size());
    for (auto& v : ratios) v.resize(static_cast<std::size_t>(config.replicates));
    parallel_for(static_cast<std::size_t>(config.replicates), exec, [&](std::size_t r) {
        Dataset data =
            sample_dataset(config.problem, config.n, substream_seed(config.seed, r, 7));
        BoostingTrace trace = adaboost(data, config.rounds, weak_learn_stump);
        VotingClassifier f = trace.prefix_classifier();
        MarginDistribution empirical = empirical_margin_distribution(f, data);
        MarginDistribution exact = exact_margin_distribution(f, config.problem);
        for (std::size_t g = 0; g < config.gammas.size(); ++g) {
            double hat = empirical_gamma_margin(empirical, config.gammas[g], config.n);
            double truth = true_gamma_margin(exact, config.gammas[g], config.n);
            ratios[g][r] = hat / truth;
        }
    });
    for (std::size_t g = 0; g < config.gammas.size(); ++g) {
        RatioSummary s;
        s.gamma = config.gammas[g];
        s.ratios = ratios[g];
        s.min = *std::min_element(s.ratios.begin(), s.ratios.end());
        s.max = *std::max_element(s.ratios.begin(), s.ratios.end());
        s.median = median_of(s.ratios);
        s.outside_guarantee = s.gamma < report.gamma_star - 1e-12;
        report.per_gamma.push_back(std::move(s));
    }
    return report;
}

std::string ratio_report_to_json(const RatioReport& report) {
    nlohmann::json j;
    j["n"] = report.config.n;
    j["rounds"] = report.config.rounds;
    j["replicates"] = report.config.replicates;
    j["seed"] = report.config.seed;
    j["vc_dimension_assumed"] = report.config.vc_dimension_assumed;
    j["gamma_star"] = report.gamma_star;
    j["targets"] = report.config.problem.targets;
    j["noise"] = report.config.problem.noise;
    j["per_gamma"] = nlohmann::json::array();
    for (const auto& s : report.per_gamma) {
        nlohmann::json js;
        js["gamma"] = s.gamma;
        js["min"] = s.min;
        js["median"] = s.median;
        js["max"] = s.max;
        js["outside_guarantee"] = s.outside_guarantee;
        j["per_gamma"].push_back(js);
    }
    return j.dump(2);
}

std::string ratio_report_to_csv(const RatioReport& report) {
    std::string out = "replicate,gamma,ratio\n";
    char buf[96];
    for (const auto& s : report.per_gamma)
        for (std::size_t r = 0; r < s.ratios.size(); ++r) {
            std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", r, s.gamma, s.ratios[r]);
            out += buf;
        }
    return out;
}

}  // namespace marginlab
