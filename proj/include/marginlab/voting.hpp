#ifndef MARGINLAB_VOTING_HPP
#define MARGINLAB_VOTING_HPP

#include <span>
#include <vector>

#include "marginlab/dataset.hpp"
#include "marginlab/hypothesis.hpp"
#include "marginlab/margin_distribution.hpp"

namespace marginlab {

// Convex combination f = sum_j w_j h_j of base hypotheses: the element of
// conv(H).  Weights are nonnegative and must sum to 1 within 1e-12; since
// every base output lies in [-1, 1], so does f.
class VotingClassifier {
public:
    VotingClassifier(std::vector<BaseHypothesis> hypotheses, std::vector<double> weights);

    double value(std::span<const double> features) const;
    double value(const LabeledSample& s) const { return value(std::span<const double>(s.features)); }
    double value_at(const Dataset& data, std::size_t i) const;

    const std::vector<BaseHypothesis>& hypotheses() const { return hypotheses_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<BaseHypothesis> hypotheses_;
    std::vector<double> weights_;
};

// Binary margin y * f(x).  Throws SchemaError on a non-binary label.
double margin_binary(const VotingClassifier& f, const LabeledSample& s);
double margin_binary_at(const VotingClassifier& f, const Dataset& data, std::size_t i);

// Multiclass margin f(x, y) - max_{y' != y} f(x, y') given the score table
// scores[y'] for every label y'.  m <= 0 means the example is misclassified
// (ties at the top score count as errors).
double margin_multiclass(std::span<const double> scores, int label);

// Distribution of the n sample margins, each with weight 1/n, duplicates merged.
MarginDistribution empirical_margin_distribution(const VotingClassifier& f, const Dataset& data);

}  // namespace marginlab

#endif
