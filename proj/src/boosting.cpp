#include "marginlab/boosting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "marginlab/errors.hpp"

namespace marginlab {

namespace {

void check_weights(const Dataset& data, const WeightVector& w) {
    if (w.size() != data.size()) throw SchemaError("weight vector length must match dataset");
    double total = 0.0;
    for (double x : w) {
        if (x < 0.0) throw SchemaError("sample weights must be nonnegative");
        total += x;
    }
    if (std::fabs(total - 1.0) > 1e-12) throw SchemaError("sample weights must sum to 1");
}

}  // namespace

WeakLearnResult weak_learn_stump(const Dataset& data, const WeightVector& weights) {
    if (data.label_kind() != LabelKind::binary)
        throw SchemaError("stump learner requires binary labels");
    check_weights(data, weights);
    const std::size_t n = data.size();

    // err(orient=+1, theta) = sum_{x >= theta} w I{y=-1} + sum_{x < theta} w I{y=+1}
    //                       = W- - prefix(signed) with signed_i = w_i y_i ... swept below;
    // err(orient=-1) = 1 - err(orient=+1).
    double w_plus = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (data.label(i) == 1) w_plus += weights[i];
    const double w_minus = 1.0 - w_plus;

    double best_err = 2.0;
    Stump best;
    for (std::size_t j = 0; j < data.dimension(); ++j) {
        const auto& order = data.sorted_indices(j);
        // cut k: the k smallest points fall below the threshold
        double below_plus = 0.0, below_minus = 0.0;
        for (std::size_t k = 0; k <= n; ++k) {
            bool valid_cut =
                k == 0 || k == n || data.feature(order[k - 1], j) < data.feature(order[k], j);
            if (valid_cut) {
                double theta;
                if (k == 0)
                    theta = data.feature(order[0], j) - 1.0;
                else if (k == n)
                    theta = data.feature(order[n - 1], j) + 1.0;
                else
                    theta = 0.5 * (data.feature(order[k - 1], j) + data.feature(order[k], j));
                // orientation +1: h = +1 above the cut
                double err_pos = below_plus + (w_minus - below_minus);
                for (int orient : {1, -1}) {
                    double err = orient == 1 ? err_pos : 1.0 - err_pos;
                    if (err < best_err - 1e-15) {
                        best_err = err;
                        best = Stump{j, theta, orient};
                    }
                }
            }
            if (k < n) {
                if (data.label(order[k]) == 1)
                    below_plus += weights[order[k]];
                else
                    below_minus += weights[order[k]];
            }
        }
    }
    return {BaseHypothesis(best), std::min(best_err, 0.5)};
}

WeakLearnResult weak_learn_interval(const Dataset& data, const WeightVector& weights) {
    if (data.label_kind() != LabelKind::binary)
        throw SchemaError("interval learner requires binary labels");
    check_weights(data, weights);
    const std::size_t n = data.size();

    double w_plus = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (data.label(i) == 1) w_plus += weights[i];

    double best_err = 2.0;
    IntervalHypothesis best;
    for (std::size_t j = 0; j < data.dimension(); ++j) {
        const auto& order = data.sorted_indices(j);
        // prefix sums of signed weights w_i y_i in feature order
        std::vector<double> prefix(n + 1, 0.0);
        for (std::size_t k = 0; k < n; ++k)
            prefix[k + 1] =
                prefix[k] + weights[order[k]] * static_cast<double>(data.label(order[k]));
        auto endpoint = [&](std::size_t cut) {
            if (cut == 0) return data.feature(order[0], j) - 1.0;
            if (cut == n) return data.feature(order[n - 1], j) + 1.0;
            return 0.5 * (data.feature(order[cut - 1], j) + data.feature(order[cut], j));
        };
        // interval = points in cut range (a, b]: indices a..b-1
        for (std::size_t a = 0; a < n; ++a) {
            if (a > 0 && data.feature(order[a - 1], j) == data.feature(order[a], j)) continue;
            for (std::size_t b = a + 1; b <= n; ++b) {
                if (b < n && data.feature(order[b - 1], j) == data.feature(order[b], j)) continue;
                // orientation +1: err = W+ - (inside signed sum)
                double inside = prefix[b] - prefix[a];
                double err_pos = w_plus - inside;
                for (int orient : {1, -1}) {
                    double err = orient == 1 ? err_pos : 1.0 - err_pos;
                    if (err < best_err - 1e-15) {
                        best_err = err;
                        best = IntervalHypothesis{j, endpoint(a), endpoint(b), orient};
                    }
                }
            }
        }
    }
    return {BaseHypothesis(best), std::min(best_err, 0.5)};
}

double BoostingTrace::alpha_sum(std::size_t prefix) const {
    if (prefix == 0 || prefix > rounds.size()) prefix = rounds.size();
    double s = 0.0;
    for (std::size_t k = 0; k < prefix; ++k) s += rounds[k].alpha;
    return s;
}

VotingClassifier BoostingTrace::prefix_classifier(std::size_t prefix) const {
    if (prefix == 0 || prefix > rounds.size()) prefix = rounds.size();
    if (prefix == 0) throw SchemaError("empty boosting trace has no classifier");
    double total = alpha_sum(prefix);
    std::vector<BaseHypothesis> hyps;
    std::vector<double> w;
    for (std::size_t k = 0; k < prefix; ++k) {
        hyps.push_back(rounds[k].hypothesis);
        w.push_back(total > 0.0 ? rounds[k].alpha / total
                                : 1.0 / static_cast<double>(prefix));
    }
    // remove renormalization round-off
    double s = 0.0;
    for (double x : w) s += x;
    for (double& x : w) x /= s;
    return VotingClassifier(std::move(hyps), std::move(w));
}

bool BoostingTrace::any_clamped() const {
    return std::any_of(rounds.begin(), rounds.end(), [](const auto& r) { return r.clamped; });
}

BoostingTrace adaboost(const Dataset& data, int rounds, const WeakLearner& learner,
                       const AdaBoostOptions& options) {
    if (rounds < 1) throw std::invalid_argument("need at least one boosting round");
    if (data.label_kind() != LabelKind::binary) throw SchemaError("adaboost requires binary labels");
    const std::size_t n = data.size();
    const double clamp = options.e_clamp > 0.0 ? options.e_clamp
                                               : 1.0 / (2.0 * static_cast<double>(n));

    BoostingTrace trace;
    trace.n = static_cast<int>(n);
    WeightVector w(n, 1.0 / static_cast<double>(n));
    for (int k = 0; k < rounds; ++k) {
        WeakLearnResult weak = learner(data, w);
        if (weak.error == 0.5) {
            trace.stop_reason = "no-weak-edge";
            break;
        }
        BoostRound round{std::move(weak.hypothesis), weak.error, weak.error, 0.0, 0.0, false};
        double lo = clamp, hi = 0.5 - clamp;
        if (round.error < lo || round.error > hi) {
            round.error = std::clamp(round.error, lo, hi);
            round.clamped = true;
        }
        round.alpha = 0.5 * std::log((1.0 - round.error) / round.error);

        double z = 0.0;
        std::vector<double> updated(n);
        for (std::size_t i = 0; i < n; ++i) {
            double h = round.hypothesis.value_at(data, i);
            updated[i] = w[i] * std::exp(-static_cast<double>(data.label(i)) * round.alpha * h);
            z += updated[i];
        }
        round.z = z;
        for (std::size_t i = 0; i < n; ++i) w[i] = updated[i] / z;
        // kill residual normalization drift
        double total = 0.0;
        for (double x : w) total += x;
        for (double& x : w) x /= total;
        trace.rounds.push_back(std::move(round));
    }
    if (trace.rounds.empty()) throw SchemaError("boosting stopped before completing any round");
    return trace;
}

}  // namespace marginlab
