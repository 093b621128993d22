#ifndef MARGINLAB_GAMMA_HPP
#define MARGINLAB_GAMMA_HPP

#include <vector>

#include "marginlab/margin_distribution.hpp"

namespace marginlab {

struct GammaMarginResult {
    double gamma = 1.0;
    double delta_hat = 1.0;   // the gamma-margin, in (0, 1]
    double gamma_bound = 0.0; // C_gamma / (n^{1-gamma/2} delta_hat^gamma)
    int n = 0;
    double c_gamma = 1.0;     // reporting constant, a convention rather than a claim
};

// sup{ delta in (0,1) : delta^gamma * P{f <= delta} <= n^{-1+gamma/2} },
// computed exactly: the left side is nondecreasing in delta, so the sweep
// over sorted margin values with the closed-form within-segment solve
// delta = (T / mass)^{1/gamma} returns the supremum of the feasible set
// (the limit from below at a jump), capped at 1.
//
// Pass the empirical margin distribution for the empirical gamma-margin or
// an exact margin distribution for the true gamma-margin; n is the sample
// size entering the threshold n^{-1+gamma/2} in both cases.
double gamma_margin(const MarginDistribution& margins, double gamma, int n);

inline double empirical_gamma_margin(const MarginDistribution& margins, double gamma, int n) {
    return gamma_margin(margins, gamma, n);
}
inline double true_gamma_margin(const MarginDistribution& exact_margins, double gamma, int n) {
    return gamma_margin(exact_margins, gamma, n);
}

// C / (n^{1-gamma/2} * delta_hat^gamma)
double gamma_bound(double delta_hat, double gamma, int n, double c_gamma = 1.0);

GammaMarginResult gamma_margin_report(const MarginDistribution& margins, double gamma, int n,
                                      double c_gamma = 1.0);

// For a VC dimension V: the convex-hull entropy exponent alpha = 2(V-1)/V
// and the gamma threshold gamma* = 2 alpha / (2 + alpha) = 2(V-1)/(2V-1);
// the gamma-bounds are guaranteed only for gamma >= gamma*.
struct GammaThreshold {
    double alpha = 0.0;
    double gamma_star = 0.0;
};
GammaThreshold gamma_threshold_from_vc(int vc_dimension);

}  // namespace marginlab

#endif
