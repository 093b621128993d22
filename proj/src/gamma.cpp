#include "marginlab/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace marginlab {

double gamma_margin(const MarginDistribution& margins, double gamma, int n) {
    if (!(gamma > 0.0) || gamma > 1.0)
        throw std::invalid_argument("gamma must lie in (0, 1]");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double threshold = std::pow(static_cast<double>(n), -1.0 + gamma / 2.0);

    // Segment boundaries: distinct margin values in (0, 1), then 1.
    std::set<double> cut_set;
    for (const auto& p : margins.points())
        if (p.value > 0.0 && p.value < 1.0) cut_set.insert(p.value);
    std::vector<double> cuts(cut_set.begin(), cut_set.end());
    cuts.push_back(1.0);

    double sup = 0.0;
    double seg_start = 0.0;
    for (double seg_end : cuts) {
        // on [seg_start, seg_end): P{f <= delta} equals the mass <= seg_start
        double mass = margins.cdf(seg_start);
        if (mass <= 0.0) {
            sup = seg_end;
        } else {
            // delta^gamma * mass <= threshold  <=>  delta <= (threshold/mass)^{1/gamma}
            double solve = std::pow(threshold / mass, 1.0 / gamma);
            if (solve >= seg_end) {
                sup = seg_end;
            } else {
                if (solve >= seg_start) sup = solve;
                break;  // the left side is nondecreasing: nothing feasible beyond
            }
        }
        seg_start = seg_end;
    }
    return std::min(sup, 1.0);
}

double gamma_bound(double delta_hat, double gamma, int n, double c_gamma) {
    if (!(delta_hat > 0.0)) throw std::invalid_argument("delta_hat must be positive");
    if (!(gamma > 0.0) || gamma > 1.0) throw std::invalid_argument("gamma must lie in (0, 1]");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return c_gamma /
           (std::pow(static_cast<double>(n), 1.0 - gamma / 2.0) * std::pow(delta_hat, gamma));
}

GammaMarginResult gamma_margin_report(const MarginDistribution& margins, double gamma, int n,
                                      double c_gamma) {
    GammaMarginResult r;
    r.gamma = gamma;
    r.n = n;
    r.c_gamma = c_gamma;
    r.delta_hat = gamma_margin(margins, gamma, n);
    r.gamma_bound = gamma_bound(r.delta_hat, gamma, n, c_gamma);
    return r;
}

GammaThreshold gamma_threshold_from_vc(int vc_dimension) {
    if (vc_dimension < 1) throw std::invalid_argument("VC dimension must be >= 1");
    GammaThreshold t;
    const double v = static_cast<double>(vc_dimension);
    t.alpha = 2.0 * (v - 1.0) / v;
    t.gamma_star = 2.0 * (v - 1.0) / (2.0 * v - 1.0);
    return t;
}

}  // namespace marginlab
