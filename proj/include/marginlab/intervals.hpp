#ifndef MARGINLAB_INTERVALS_HPP
#define MARGINLAB_INTERVALS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "marginlab/dataset.hpp"
#include "marginlab/margin_distribution.hpp"
#include "marginlab/voting.hpp"

namespace marginlab {

// Toy problem with an exactly computable generalization error:
// X ~ Uniform[0, 1], true label +1 on a union of disjoint target intervals,
// -1 elsewhere, label flipped with probability eta.
struct IntervalsProblem {
    std::vector<std::pair<double, double>> targets = {{0.1, 0.25}, {0.4, 0.6}, {0.8, 0.95}};
    double noise = 0.0;  // eta in [0, 1/2)

    void validate() const;
    int clean_label(double x) const;  // +1 inside a target interval, -1 outside
};

// n iid samples of the problem (1-D features).
Dataset sample_dataset(const IntervalsProblem& problem, int n, std::uint64_t seed);

// Exact generalization error P{Y f(X) <= 0} of a piecewise-constant voting
// classifier over stump/interval bases: the breakpoints of f are merged with
// the target endpoints, the disagreement measure is summed per cell, and the
// noise enters as eta + (1 - 2 eta) * disagreement.  Cells where f is
// exactly 0 count as errors under both labels.
double exact_generalization_error(const VotingClassifier& f, const IntervalsProblem& problem);

// Exact margin distribution of Y f(X): per cell, mass (1 - eta) * length at
// the clean margin and eta * length at its negation.
MarginDistribution exact_margin_distribution(const VotingClassifier& f,
                                             const IntervalsProblem& problem);

// Sorted cell boundaries of f merged with the target endpoints (exposed for
// tests).  Throws SchemaError if the classifier holds a base hypothesis
// that is not piecewise constant on [0, 1].
std::vector<double> classifier_breakpoints(const VotingClassifier& f,
                                           const IntervalsProblem& problem);

}  // namespace marginlab

#endif
