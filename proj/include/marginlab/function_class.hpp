#ifndef MARGINLAB_FUNCTION_CLASS_HPP
#define MARGINLAB_FUNCTION_CLASS_HPP

#include <memory>
#include <span>
#include <vector>

#include "marginlab/dataset.hpp"
#include "marginlab/hypothesis.hpp"

namespace marginlab {

// A function class F over a fixed evaluation dataset, able to compute the
// per-draw supremum  sup_{f in F} |n^{-1} sum_i m_i f(X_i)|  exactly for a
// given multiplier vector m.  Every represented function maps into [-1, 1].
class FunctionClassHandle {
public:
    virtual ~FunctionClassHandle() = default;
    virtual double sup_weighted_mean(const Dataset& data,
                                     std::span<const double> multipliers) const = 0;
};

// Explicit finite list of hypotheses; per-sample outputs are cached.
class FiniteClass : public FunctionClassHandle {
public:
    FiniteClass(const Dataset& data, std::vector<BaseHypothesis> hypotheses);
    double sup_weighted_mean(const Dataset& data,
                             std::span<const double> multipliers) const override;
    std::size_t size() const { return values_.size(); }
    // Cached outputs of hypothesis j on the evaluation dataset.
    const std::vector<double>& outputs(std::size_t j) const { return values_[j]; }

private:
    std::vector<std::vector<double>> values_;
};

// All decision stumps on the evaluation data (every feature, both
// orientations, every threshold position).  The per-draw supremum is exact:
// sorting each feature once, the weighted mean of a stump is
// |S - 2 * prefix| / n over all cut positions, swept in O(n) per feature.
class StumpClass : public FunctionClassHandle {
public:
    double sup_weighted_mean(const Dataset& data,
                             std::span<const double> multipliers) const override;
};

// Convex hull of a base class.  The supremum of a linear functional over the
// hull is attained at an extreme point, so the per-draw supremum equals the
// base supremum exactly.
class ConvexHullClass : public FunctionClassHandle {
public:
    explicit ConvexHullClass(std::shared_ptr<const FunctionClassHandle> base)
        : base_(std::move(base)) {}
    double sup_weighted_mean(const Dataset& data,
                             std::span<const double> multipliers) const override {
        return base_->sup_weighted_mean(data, multipliers);
    }

private:
    std::shared_ptr<const FunctionClassHandle> base_;
};

// { max(h_1, ..., h_l) : h_i in base } for a finite base class; the per-draw
// supremum enumerates all l-tuples (with repetition).
class MaxClass : public FunctionClassHandle {
public:
    MaxClass(std::shared_ptr<const FiniteClass> base, int l);
    double sup_weighted_mean(const Dataset& data,
                             std::span<const double> multipliers) const override;

private:
    std::shared_ptr<const FiniteClass> base_;
    int l_;
};

}  // namespace marginlab

#endif
