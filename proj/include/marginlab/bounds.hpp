#ifndef MARGINLAB_BOUNDS_HPP
#define MARGINLAB_BOUNDS_HPP

#include <map>
#include <string>
#include <vector>

#include "marginlab/complexity.hpp"
#include "marginlab/cost.hpp"
#include "marginlab/margin_distribution.hpp"

namespace marginlab {

// An evaluated generalization bound with the terms behind it.  bound_value
// equals the sum of the four terms at the minimizing delta.
struct BoundReport {
    std::string variant;  // "t2", "t4", "t11", "adaboost"
    double bound_value = 0.0;
    std::map<std::string, double> terms;  // empirical_cost, complexity_term,
                                          // loglog_term, confidence_term
    double delta = 1.0;                   // minimizing delta (1/\sum alpha for adaboost)
    double t = 0.0;
    int n = 0;
    double confidence = 0.0;  // 1 - 2 exp(-2 t^2), or 1 - 4 exp(-2 t^2) two-sided
    ComplexityEstimate complexity;
    std::string complexity_source;  // "monte-carlo" or "vc-bound"
    // bound(delta) over the evaluated grid, for curve emission
    std::vector<std::pair<double, double>> curve;
};

// Delta_n(F; delta) = 8 R_n / delta + sqrt(log log2(2/delta) / n).
// Natural log outside, base-2 log inside.  delta must lie in (0, 1].
double delta_n(double rademacher, double delta, int n);

// Dyadic deltas {2^-k : k <= ceil(log2 n)} united with the distinct positive
// margin values clipped to (0, 1].
std::vector<double> default_delta_grid(const MarginDistribution& margins, int n);

// One-sided margin bound: minimizes over the grid
//   P_n phi(f/delta) + c(kind) L(phi)/delta * complexity + loglog term,
// then adds t/sqrt(n) (Rademacher, c = 8) or (t+2)/sqrt(n) (Gaussian,
// c = 2 sqrt(2 pi)).  Holds with probability >= 1 - 2 exp(-2 t^2).
BoundReport theorem2_bound(const MarginDistribution& margins, const ComplexityEstimate& complexity,
                           const CostFunction& cost, double t, int n,
                           const std::vector<double>& delta_grid);

// Two-sided deviation bound: minimizes P_n{|f| <= delta} + Delta_n(F; delta)
// over the grid, adds t/sqrt(n); probability >= 1 - 4 exp(-2 t^2).
BoundReport theorem4_two_sided(const MarginDistribution& margins,
                               const ComplexityEstimate& complexity, double t, int n,
                               const std::vector<double>& delta_grid);

// Largest delta in (0, 1] with delta * P_n{|f| <= delta} <= rademacher,
// i.e. the generalized inverse H_{n,f}^{-1}(R_n) ^ 1, computed exactly by a
// sweep over the sorted |margins|.
double plug_in_delta(const MarginDistribution& margins, double rademacher);

// Multiclass margin bound with complexity factor 8 M (2M - 1) / delta on
// R_n(F).  Requires M >= 2.
BoundReport theorem11_multiclass_bound(const MarginDistribution& multiclass_margins,
                                       const ComplexityEstimate& complexity_of_f, int num_classes,
                                       double t, int n, const std::vector<double>& delta_grid);

struct AdaBoostRoundSummary {
    double error;  // weighted error e_k in (0, 1/2]
};

// Product-form bound for an AdaBoost run:
//   prod_k 2 sqrt(e_k (1 - e_k))  +  8 (sum_k alpha_k v 1) R_n(H)
//   + sqrt(log log2(2 (sum alpha v 1)) / n)  +  t / sqrt(n),
// where sum_k alpha_k = log prod_k sqrt((1 - e_k)/e_k).
BoundReport adaboost_product_bound(const std::vector<AdaBoostRoundSummary>& rounds,
                                   const ComplexityEstimate& complexity_of_base, double t, int n);

}  // namespace marginlab

#endif
