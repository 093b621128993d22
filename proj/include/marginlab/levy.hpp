#ifndef MARGINLAB_LEVY_HPP
#define MARGINLAB_LEVY_HPP

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "marginlab/complexity.hpp"
#include "marginlab/margin_distribution.hpp"
#include "marginlab/parallel.hpp"

namespace marginlab {

// Right-continuous step distribution function: sorted jump points with
// cumulative masses ending at 1.
class StepCDF {
public:
    StepCDF(std::vector<double> jumps, std::vector<double> cumulative);
    static StepCDF from_margins(const MarginDistribution& dist);
    static StepCDF point_mass(double at);

    double value(double t) const;       // F(t)
    double left_value(double t) const;  // F(t-)
    const std::vector<double>& jumps() const { return jumps_; }
    const std::vector<double>& cumulative() const { return cumulative_; }

    // Values clamped into [-m, m], mass merged at the boundary.
    StepCDF truncated(double m) const;

private:
    std::vector<double> jumps_;
    std::vector<double> cumulative_;
};

// Levy distance inf{delta > 0 : F(t) <= G(t+delta)+delta and
// G(t) <= F(t+delta)+delta for all t}.  The feasibility check evaluates both
// inequalities at every jump point and at every (jump - delta) probe, which
// is exact for step CDFs; binary search returns the infimum within tol.
double levy_distance(const StepCDF& f, const StepCDF& g, double tol = 1e-9);

// sup_t |F(t) - G(t)|; dominates the Levy distance.
double kolmogorov_distance(const StepCDF& f, const StepCDF& g);

// 2 (R_n + M / sqrt(n))^{1/2} + t / sqrt(n): uniform bound on the Levy
// distance between empirical and true margin distributions, holding with
// probability >= 1 - exp(-2 t^2).
double theorem10_bound(const ComplexityEstimate& complexity, double m_bound, int n, double t);

// Levy distance between two laws on {-a, +a} with masses p and q at -a:
// min(|p - q|, 2a).
double two_point_levy(double a, double p, double q);

// The coordinate-projection class over sequences with independent signs:
// coordinate k takes values +/- a_k, a_k = (2 log(k+1))^{-1/2-beta},
// beta = 1/alpha - 1/2.
struct ProjectionClassConfig {
    double alpha = 2.0;       // in (0, 2]
    std::int64_t k_max = 10000;
    double beta() const { return 1.0 / alpha - 0.5; }
    double coordinate_scale(std::int64_t k) const;  // a_k
};

struct ProjectionSupResult {
    double sup = 0.0;
    std::int64_t max_k = 0;       // coordinate attaining the sup
    bool hit_boundary = false;    // max_k == k_max (truncation visible)
};

// Direct simulation: per coordinate k <= k_max the empirical two-point law
// of n sign draws, and the exact Levy distance to the true symmetric law.
ProjectionSupResult projection_class_levy_sup(const ProjectionClassConfig& config, int n,
                                              std::uint64_t seed);

// Draws sup_{k <= K} min(|p_hat_k - 1/2|, 2 a_k) from its exact law in one
// inverse-transform step: the coordinates are independent, so
// P(sup <= x) = P(|D| <= x)^{#{k : 2 a_k > x}} with D the centered binomial
// deviation.  ln_k_limit is ln(K+1); +infinity selects the untruncated
// class, which direct enumeration cannot reach.
double sample_projection_sup_exact(int n, double alpha, double uniform_draw,
                                   double ln_k_limit = std::numeric_limits<double>::infinity());

struct LevyRateResult {
    double alpha = 0.0;
    double slope = 0.0;
    double slope_std_error = 0.0;
    double intercept = 0.0;
    double expected_slope = 0.0;  // -1 / (2 + alpha)
    std::vector<std::pair<double, double>> medians;  // (n, median distance)
    std::vector<double> residuals;
};

// Median over replicates of the projection-class sup per n (sampled from the
// exact law of the untruncated class), and the least-squares slope of
// log(distance) against log(n).  The n list must span >= 1.5 decades.
LevyRateResult levy_rate_experiment(double alpha, const std::vector<int>& n_list, int replicates,
                                    std::uint64_t seed, Execution exec = Execution::parallel);

}  // namespace marginlab

#endif
