#include "marginlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace marginlab {

namespace {

double loglog_term(double delta, int n) {
    // sqrt( ln(log2(2/delta)) / n ); zero at delta = 1
    double inner = std::log2(2.0 / delta);
    return std::sqrt(std::log(inner) / static_cast<double>(n));
}

void check_delta(double delta) {
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("delta must lie in (0, 1]");
}

struct GridMin {
    double best_total = 0.0;
    double best_delta = 1.0;
    std::map<std::string, double> best_terms;
    std::vector<std::pair<double, double>> curve;
};

// Minimizes empirical(delta) + complexity(delta) + loglog(delta) over the grid.
template <typename Empirical, typename Complexity>
GridMin minimize_over_grid(const std::vector<double>& grid, int n, Empirical empirical,
                           Complexity complexity) {
    if (grid.empty()) throw std::invalid_argument("delta grid must be nonempty");
    GridMin out;
    bool first = true;
    for (double delta : grid) {
        check_delta(delta);
        double emp = empirical(delta);
        double cpx = complexity(delta);
        double ll = loglog_term(delta, n);
        double total = emp + cpx + ll;
        out.curve.emplace_back(delta, total);
        if (first || total < out.best_total) {
            first = false;
            out.best_total = total;
            out.best_delta = delta;
            out.best_terms = {{"empirical_cost", emp}, {"complexity_term", cpx}, {"loglog_term", ll}};
        }
    }
    std::sort(out.curve.begin(), out.curve.end());
    return out;
}

BoundReport assemble(const std::string& variant, const GridMin& gm, double t, int n,
                     double confidence_term, double confidence,
                     const ComplexityEstimate& complexity) {
    BoundReport r;
    r.variant = variant;
    r.terms = gm.best_terms;
    r.terms["confidence_term"] = confidence_term;
    r.bound_value = gm.best_total + confidence_term;
    r.delta = gm.best_delta;
    r.t = t;
    r.n = n;
    r.confidence = confidence;
    r.complexity = complexity;
    r.curve = gm.curve;
    for (auto& [delta, v] : r.curve) v += confidence_term;
    return r;
}

}  // namespace

double delta_n(double rademacher, double delta, int n) {
    check_delta(delta);
    if (rademacher < 0.0) throw std::invalid_argument("complexity must be nonnegative");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return 8.0 * rademacher / delta + loglog_term(delta, n);
}

std::vector<double> default_delta_grid(const MarginDistribution& margins, int n) {
    std::set<double> grid;
    int kmax = static_cast<int>(std::ceil(std::log2(std::max(2, n))));
    for (int k = 0; k <= kmax; ++k) grid.insert(std::ldexp(1.0, -k));
    for (const auto& p : margins.points())
        if (p.value > 0.0 && p.value <= 1.0) grid.insert(p.value);
    return {grid.begin(), grid.end()};
}

BoundReport theorem2_bound(const MarginDistribution& margins, const ComplexityEstimate& complexity,
                           const CostFunction& cost, double t, int n,
                           const std::vector<double>& delta_grid) {
    if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
    const bool gaussian = complexity.kind == MultiplierKind::gaussian;
    const double factor = gaussian ? 2.0 * std::sqrt(2.0 * std::numbers::pi) : 8.0;
    GridMin gm = minimize_over_grid(
        delta_grid, n,
        [&](double delta) {
            double acc = 0.0;
            for (const auto& p : margins.points()) acc += p.weight * cost(p.value / delta);
            return acc;
        },
        [&](double delta) { return factor * cost.lipschitz() / delta * complexity.value; });
    const double rootn = std::sqrt(static_cast<double>(n));
    const double conf_term = gaussian ? (t + 2.0) / rootn : t / rootn;
    return assemble("t2", gm, t, n, conf_term, 1.0 - 2.0 * std::exp(-2.0 * t * t), complexity);
}

BoundReport theorem4_two_sided(const MarginDistribution& margins,
                               const ComplexityEstimate& complexity, double t, int n,
                               const std::vector<double>& delta_grid) {
    if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
    GridMin gm = minimize_over_grid(
        delta_grid, n, [&](double delta) { return margins.mass_abs_leq(delta); },
        [&](double delta) { return 8.0 * complexity.value / delta; });
    const double conf_term = t / std::sqrt(static_cast<double>(n));
    return assemble("t4", gm, t, n, conf_term, 1.0 - 4.0 * std::exp(-2.0 * t * t), complexity);
}

double plug_in_delta(const MarginDistribution& margins, double rademacher) {
    if (rademacher < 0.0) throw std::invalid_argument("complexity must be nonnegative");
    // H(delta) = delta * P_n{|f| <= delta} is nondecreasing; sweep the
    // segments between sorted distinct |margin| values.
    std::set<double> abs_values;
    for (const auto& p : margins.points()) {
        double a = std::fabs(p.value);
        if (a < 1.0) abs_values.insert(a);
    }
    std::vector<double> cuts(abs_values.begin(), abs_values.end());
    cuts.push_back(1.0);
    double sup = 0.0;
    double seg_start = 0.0;
    for (double seg_end : cuts) {
        // on [seg_start, seg_end): P_n{|f| <= delta} is the mass at or below
        // seg_start (right-continuity)
        double count = margins.mass_abs_leq(seg_start);
        if (count <= 0.0) {
            sup = seg_end;  // H = 0, feasible through the segment
        } else {
            double solve = rademacher / count;
            if (solve >= seg_end) {
                sup = seg_end;
            } else {
                if (solve >= seg_start) sup = solve;
                break;  // infeasible beyond (H nondecreasing)
            }
        }
        seg_start = seg_end;
    }
    return std::min(sup, 1.0);
}

BoundReport theorem11_multiclass_bound(const MarginDistribution& multiclass_margins,
                                       const ComplexityEstimate& complexity_of_f, int num_classes,
                                       double t, int n, const std::vector<double>& delta_grid) {
    if (num_classes < 2) throw std::invalid_argument("multiclass bound requires M >= 2");
    if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
    const double m = static_cast<double>(num_classes);
    const double factor = 8.0 * m * (2.0 * m - 1.0);
    GridMin gm = minimize_over_grid(
        delta_grid, n, [&](double delta) { return multiclass_margins.cdf(delta); },
        [&](double delta) { return factor * complexity_of_f.value / delta; });
    const double conf_term = t / std::sqrt(static_cast<double>(n));
    BoundReport r = assemble("t11", gm, t, n, conf_term, 1.0 - 2.0 * std::exp(-2.0 * t * t),
                             complexity_of_f);
    return r;
}

BoundReport adaboost_product_bound(const std::vector<AdaBoostRoundSummary>& rounds,
                                   const ComplexityEstimate& complexity_of_base, double t, int n) {
    if (rounds.empty()) throw std::invalid_argument("adaboost bound needs a nonempty trace");
    if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
    double product = 1.0;
    double alpha_sum = 0.0;
    for (const auto& r : rounds) {
        if (!(r.error > 0.0) || r.error > 0.5)
            throw std::invalid_argument("round errors must lie in (0, 1/2]");
        product *= 2.0 * std::sqrt(r.error * (1.0 - r.error));
        alpha_sum += 0.5 * std::log((1.0 - r.error) / r.error);
    }
    const double s = std::max(alpha_sum, 1.0);
    const double rootn = std::sqrt(static_cast<double>(n));
    BoundReport r;
    r.variant = "adaboost";
    r.terms["empirical_cost"] = product;
    r.terms["complexity_term"] = 8.0 * s * complexity_of_base.value;
    r.terms["loglog_term"] = std::sqrt(std::log(std::log2(2.0 * s)) / static_cast<double>(n));
    r.terms["confidence_term"] = t / rootn;
    r.bound_value = r.terms["empirical_cost"] + r.terms["complexity_term"] +
                    r.terms["loglog_term"] + r.terms["confidence_term"];
    r.delta = std::min(1.0 / alpha_sum, 1.0);
    r.t = t;
    r.n = n;
    r.confidence = 1.0 - 2.0 * std::exp(-2.0 * t * t);
    r.complexity = complexity_of_base;
    return r;
}

}  // namespace marginlab
