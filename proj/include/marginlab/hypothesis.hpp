#ifndef MARGINLAB_HYPOTHESIS_HPP
#define MARGINLAB_HYPOTHESIS_HPP

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "marginlab/dataset.hpp"

namespace marginlab {

// Threshold classifier on one feature: orientation if x[feature] >= threshold,
// -orientation otherwise (so the output is always +/-1, including at the
// threshold itself).
struct Stump {
    std::size_t feature = 0;
    double threshold = 0.0;
    int orientation = 1;
};

// Interval indicator on one feature: orientation inside [lo, hi] (closed),
// -orientation outside.
struct IntervalHypothesis {
    std::size_t feature = 0;
    double lo = 0.0;
    double hi = 0.0;
    int orientation = 1;
};

// Precomputed per-sample outputs for one fixed dataset; only evaluable by
// sample index.  Values must lie in [-1, 1].
struct Tabulated {
    std::vector<double> values;
};

// Base hypothesis h in H.  Evaluation is pure; outputs lie in [-1, 1].
class BaseHypothesis {
public:
    BaseHypothesis(Stump s) : impl_(s) {}                  // NOLINT(google-explicit-constructor)
    BaseHypothesis(IntervalHypothesis s) : impl_(s) {}     // NOLINT(google-explicit-constructor)
    explicit BaseHypothesis(Tabulated t);

    // Pointwise evaluation; throws SchemaError for tabulated hypotheses.
    double value(std::span<const double> features) const;
    double value(const LabeledSample& s) const { return value(std::span<const double>(s.features)); }

    // Evaluation by sample index (the only route for tabulated hypotheses).
    double value_at(const Dataset& data, std::size_t i) const;

    bool is_tabulated() const { return std::holds_alternative<Tabulated>(impl_); }
    const Stump* as_stump() const { return std::get_if<Stump>(&impl_); }
    const IntervalHypothesis* as_interval() const { return std::get_if<IntervalHypothesis>(&impl_); }
    const Tabulated* as_tabulated() const { return std::get_if<Tabulated>(&impl_); }

private:
    std::variant<Stump, IntervalHypothesis, Tabulated> impl_;
};

}  // namespace marginlab

#endif
