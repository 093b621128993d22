#include "marginlab/voting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "marginlab/errors.hpp"

namespace marginlab {

VotingClassifier::VotingClassifier(std::vector<BaseHypothesis> hypotheses,
                                   std::vector<double> weights)
    : hypotheses_(std::move(hypotheses)), weights_(std::move(weights)) {
    if (hypotheses_.empty() || hypotheses_.size() != weights_.size())
        throw SchemaError("voting classifier needs equally many hypotheses and weights (>= 1)");
    double total = 0.0;
    for (double w : weights_) {
        if (w < 0.0) throw SchemaError("voting weights must be nonnegative");
        total += w;
    }
    if (std::fabs(total - 1.0) > 1e-12)
        throw SchemaError("voting weights must sum to 1 within 1e-12");
}

double VotingClassifier::value(std::span<const double> features) const {
    double v = 0.0;
    for (std::size_t j = 0; j < hypotheses_.size(); ++j)
        v += weights_[j] * hypotheses_[j].value(features);
    return v;
}

double VotingClassifier::value_at(const Dataset& data, std::size_t i) const {
    double v = 0.0;
    for (std::size_t j = 0; j < hypotheses_.size(); ++j)
        v += weights_[j] * hypotheses_[j].value_at(data, i);
    return v;
}

double margin_binary(const VotingClassifier& f, const LabeledSample& s) {
    if (s.label != -1 && s.label != 1)
        throw SchemaError("margin_binary requires a -1/+1 label");
    return static_cast<double>(s.label) * f.value(s);
}

double margin_binary_at(const VotingClassifier& f, const Dataset& data, std::size_t i) {
    if (data.label_kind() != LabelKind::binary)
        throw SchemaError("margin_binary requires a binary dataset");
    return static_cast<double>(data.label(i)) * f.value_at(data, i);
}

double margin_multiclass(std::span<const double> scores, int label) {
    if (label < 0 || static_cast<std::size_t>(label) >= scores.size())
        throw SchemaError("no score available for the sample's label");
    if (scores.size() < 2)
        throw SchemaError("multiclass margin needs scores for at least two labels");
    double best_other = -std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < scores.size(); ++y)
        if (static_cast<int>(y) != label) best_other = std::max(best_other, scores[y]);
    return scores[static_cast<std::size_t>(label)] - best_other;
}

MarginDistribution empirical_margin_distribution(const VotingClassifier& f, const Dataset& data) {
    std::vector<double> margins(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) margins[i] = margin_binary_at(f, data, i);
    return MarginDistribution::from_values(margins);
}

}  // namespace marginlab
