#include "marginlab/function_class.hpp"

#include <algorithm>
#include <cmath>

#include "marginlab/errors.hpp"

namespace marginlab {

FiniteClass::FiniteClass(const Dataset& data, std::vector<BaseHypothesis> hypotheses) {
    if (hypotheses.empty()) throw SchemaError("finite class needs at least one hypothesis");
    values_.reserve(hypotheses.size());
    for (const auto& h : hypotheses) {
        std::vector<double> row(data.size());
        for (std::size_t i = 0; i < data.size(); ++i) {
            row[i] = h.value_at(data, i);
            if (!(std::fabs(row[i]) <= 1.0))
                throw SchemaError("hypothesis output outside [-1, 1]");
        }
        values_.push_back(std::move(row));
    }
}

double FiniteClass::sup_weighted_mean(const Dataset& data,
                                      std::span<const double> multipliers) const {
    const std::size_t n = data.size();
    double best = 0.0;
    for (const auto& row : values_) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += multipliers[i] * row[i];
        best = std::max(best, std::fabs(s));
    }
    return best / static_cast<double>(n);
}

double StumpClass::sup_weighted_mean(const Dataset& data,
                                     std::span<const double> multipliers) const {
    const std::size_t n = data.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += multipliers[i];
    // A stump with k points below its threshold (in feature order) has
    // sum_i m_i h(X_i) = +/-(total - 2 * prefix_k); orientation only flips the
    // sign, so the absolute value covers both.
    double best = std::fabs(total);  // threshold below every point
    for (std::size_t j = 0; j < data.dimension(); ++j) {
        const auto& order = data.sorted_indices(j);
        double prefix = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            prefix += multipliers[order[k]];
            // skip cuts that fall between equal feature values; they do not
            // correspond to any real threshold
            if (k + 1 < n && data.feature(order[k], j) == data.feature(order[k + 1], j))
                continue;
            best = std::max(best, std::fabs(total - 2.0 * prefix));
        }
    }
    return best / static_cast<double>(n);
}

MaxClass::MaxClass(std::shared_ptr<const FiniteClass> base, int l) : base_(std::move(base)), l_(l) {
    if (l_ < 1) throw SchemaError("max-class order must be >= 1");
}

double MaxClass::sup_weighted_mean(const Dataset& data,
                                   std::span<const double> multipliers) const {
    const std::size_t n = data.size();
    const std::size_t m = base_->size();
    std::vector<std::size_t> tuple(static_cast<std::size_t>(l_), 0);
    std::vector<double> maxed(n);
    double best = 0.0;
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) {
            double v = base_->outputs(tuple[0])[i];
            for (int t = 1; t < l_; ++t) v = std::max(v, base_->outputs(tuple[t])[i]);
            maxed[i] = v;
        }
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += multipliers[i] * maxed[i];
        best = std::max(best, std::fabs(s));
        // odometer over tuples with repetition
        int pos = l_ - 1;
        while (pos >= 0 && ++tuple[pos] == m) tuple[pos--] = 0;
        if (pos < 0) break;
    }
    return best / static_cast<double>(n);
}

}  // namespace marginlab
