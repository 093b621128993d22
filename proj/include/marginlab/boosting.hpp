#ifndef MARGINLAB_BOOSTING_HPP
#define MARGINLAB_BOOSTING_HPP

#include <functional>
#include <string>
#include <vector>

#include "marginlab/dataset.hpp"
#include "marginlab/hypothesis.hpp"
#include "marginlab/voting.hpp"

namespace marginlab {

// Per-sample nonnegative weights summing to 1 (renormalized after every
// update to keep the sum within 1e-12).
using WeightVector = std::vector<double>;

struct WeakLearnResult {
    BaseHypothesis hypothesis;
    double error;  // weighted training error, guaranteed <= 1/2
};

using WeakLearner = std::function<WeakLearnResult(const Dataset&, const WeightVector&)>;

// Exhaustive stump search: every feature, both orientations, thresholds
// midway between consecutive distinct sorted values plus both outer
// positions.  Ties break lexicographically by (feature, threshold,
// orientation +1 first).  The orientation flip guarantees error <= 1/2;
// constant features degrade to the best constant stump.
WeakLearnResult weak_learn_stump(const Dataset& data, const WeightVector& weights);

// Exhaustive interval search: both orientations over all O(n^2) intervals
// with endpoints between consecutive sorted values, per feature.
WeakLearnResult weak_learn_interval(const Dataset& data, const WeightVector& weights);

struct BoostRound {
    BaseHypothesis hypothesis;
    double error_raw;    // weighted error returned by the weak learner
    double error;        // clamped into [e_clamp, 1/2 - e_clamp]
    double alpha;        // 1/2 log((1 - e)/e), from the clamped error
    double z;            // actual normalizer of the weight update
    bool clamped = false;
};

// Full AdaBoost run record.  The exp-loss telescoping
// n^{-1} sum_i exp(-y_i sum_k alpha_k h_k(x_i)) = prod_k Z_k holds exactly
// on every prefix; Z_k = 2 sqrt(e_k (1 - e_k)) additionally holds on rounds
// where no clamp engaged and the hypothesis outputs are +/-1.
struct BoostingTrace {
    std::vector<BoostRound> rounds;
    int n = 0;
    std::string stop_reason;  // empty, or "no-weak-edge" on an early stop

    // sum of alpha_k over the first `prefix` rounds (all rounds if 0)
    double alpha_sum(std::size_t prefix = 0) const;
    // f_S over the first `prefix` rounds: weights alpha_k / sum alpha_j
    VotingClassifier prefix_classifier(std::size_t prefix = 0) const;
    bool any_clamped() const;
};

struct AdaBoostOptions {
    // e_k is clamped into [e_clamp, 1/2 - e_clamp] before computing alpha_k;
    // <= 0 selects the default 1/(2n)
    double e_clamp = 0.0;
};

// Runs `rounds` boosting rounds on binary data.  Stops early (recording the
// reason) if the weak learner has no edge (e = 1/2 exactly).
BoostingTrace adaboost(const Dataset& data, int rounds, const WeakLearner& learner,
                       const AdaBoostOptions& options = {});

}  // namespace marginlab

#endif
