#include "marginlab/levy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "marginlab/errors.hpp"
#include "marginlab/rng.hpp"

namespace marginlab {

StepCDF::StepCDF(std::vector<double> jumps, std::vector<double> cumulative)
    : jumps_(std::move(jumps)), cumulative_(std::move(cumulative)) {
    if (jumps_.empty() || jumps_.size() != cumulative_.size())
        throw SchemaError("step CDF needs equally many jump points and masses (>= 1)");
    for (std::size_t i = 1; i < jumps_.size(); ++i) {
        if (!(jumps_[i] > jumps_[i - 1])) throw SchemaError("step CDF jumps must be increasing");
        if (cumulative_[i] < cumulative_[i - 1])
            throw SchemaError("step CDF masses must be nondecreasing");
    }
    if (std::fabs(cumulative_.back() - 1.0) > 1e-12)
        throw SchemaError("step CDF must end at total mass 1");
    cumulative_.back() = 1.0;
}

StepCDF StepCDF::from_margins(const MarginDistribution& dist) {
    std::vector<double> jumps, cum;
    jumps.reserve(dist.points().size());
    cum.reserve(dist.points().size());
    double acc = 0.0;
    for (const auto& p : dist.points()) {
        acc += p.weight;
        jumps.push_back(p.value);
        cum.push_back(acc);
    }
    return StepCDF(std::move(jumps), std::move(cum));
}

StepCDF StepCDF::point_mass(double at) { return StepCDF({at}, {1.0}); }

double StepCDF::value(double t) const {
    auto it = std::upper_bound(jumps_.begin(), jumps_.end(), t);
    if (it == jumps_.begin()) return 0.0;
    return cumulative_[static_cast<std::size_t>(it - jumps_.begin()) - 1];
}

double StepCDF::left_value(double t) const {
    auto it = std::lower_bound(jumps_.begin(), jumps_.end(), t);
    if (it == jumps_.begin()) return 0.0;
    return cumulative_[static_cast<std::size_t>(it - jumps_.begin()) - 1];
}

StepCDF StepCDF::truncated(double m) const {
    if (!(m > 0.0)) throw SchemaError("truncation level must be positive");
    std::vector<double> jumps, cum;
    for (std::size_t i = 0; i < jumps_.size(); ++i) {
        double v = std::clamp(jumps_[i], -m, m);
        if (!jumps.empty() && jumps.back() == v)
            cum.back() = cumulative_[i];
        else {
            jumps.push_back(v);
            cum.push_back(cumulative_[i]);
        }
    }
    return StepCDF(std::move(jumps), std::move(cum));
}

namespace {

// F(t) <= G(t + delta) + delta for all t.  For step CDFs the difference
// F(t) - G(t + delta) is piecewise constant and right-continuous with
// breakpoints at the jumps of F and at (jumps of G) - delta, so checking the
// breakpoints themselves is exact.
bool one_sided_feasible(const StepCDF& f, const StepCDF& g, double delta) {
    for (double t : f.jumps())
        if (f.value(t) > g.value(t + delta) + delta) return false;
    for (double gj : g.jumps()) {
        double t = gj - delta;
        if (f.value(t) > g.value(t + delta) + delta) return false;
    }
    return true;
}

bool levy_feasible(const StepCDF& f, const StepCDF& g, double delta) {
    return one_sided_feasible(f, g, delta) && one_sided_feasible(g, f, delta);
}

}  // namespace

double levy_distance(const StepCDF& f, const StepCDF& g, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (levy_feasible(f, g, 0.0)) return 0.0;
    double lo = 0.0, hi = 1.0;  // delta = 1 is always feasible
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (levy_feasible(f, g, mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double kolmogorov_distance(const StepCDF& f, const StepCDF& g) {
    double sup = 0.0;
    for (double t : f.jumps()) sup = std::max(sup, std::fabs(f.value(t) - g.value(t)));
    for (double t : g.jumps()) sup = std::max(sup, std::fabs(f.value(t) - g.value(t)));
    return sup;
}

double theorem10_bound(const ComplexityEstimate& complexity, double m_bound, int n, double t) {
    if (!(m_bound > 0.0)) throw std::invalid_argument("envelope bound M must be positive");
    if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double rootn = std::sqrt(static_cast<double>(n));
    return 2.0 * std::sqrt(complexity.value + m_bound / rootn) + t / rootn;
}

double two_point_levy(double a, double p, double q) {
    return std::min(std::fabs(p - q), 2.0 * a);
}

double ProjectionClassConfig::coordinate_scale(std::int64_t k) const {
    return std::pow(2.0 * std::log(static_cast<double>(k) + 1.0), -(0.5 + beta()));
}

ProjectionSupResult projection_class_levy_sup(const ProjectionClassConfig& config, int n,
                                              std::uint64_t seed) {
    if (config.k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    if (!(config.alpha > 0.0) || config.alpha > 2.0)
        throw std::invalid_argument("alpha must lie in (0, 2]");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    ProjectionSupResult out;
    for (std::int64_t k = 1; k <= config.k_max; ++k) {
        // the empirical two-point law only depends on the count of -1 signs
        Rng rng = make_rng(substream_seed(seed, static_cast<std::uint64_t>(k)));
        std::binomial_distribution<int> binom(n, 0.5);
        double p_hat = static_cast<double>(binom(rng)) / static_cast<double>(n);
        double dist = two_point_levy(config.coordinate_scale(k), p_hat, 0.5);
        if (dist > out.sup || k == 1) {
            out.sup = dist;
            out.max_k = k;
        }
    }
    out.hit_boundary = out.max_k == config.k_max;
    return out;
}

namespace {

// ln P(Bin(n, 1/2) >= m) for m > n/2, via one lgamma evaluation for the
// leading term and a ratio recursion for the rest.
double ln_binomial_upper_tail(int n, long long m) {
    if (m > n) return -std::numeric_limits<double>::infinity();
    if (2 * m <= n) return std::log(0.5);  // not used below the center; crude floor
    const double nn = static_cast<double>(n);
    double ln_t0 = std::lgamma(nn + 1.0) - std::lgamma(static_cast<double>(m) + 1.0) -
                   std::lgamma(nn - static_cast<double>(m) + 1.0) - nn * std::numbers::ln2;
    double q = 1.0;    // sum of t_c / t_m
    double cur = 1.0;  // current ratio t_c / t_m
    for (long long c = m; c < n; ++c) {
        double ratio = (nn - static_cast<double>(c)) / (static_cast<double>(c) + 1.0);
        cur *= ratio;
        q += cur;
        if (cur < 1e-17 * q) break;
        // geometric remainder bound once the ratio has moved off 1
        if (ratio < 0.999 && cur * ratio / (1.0 - ratio) < 1e-15 * q) break;
    }
    return ln_t0 + std::log(q);
}

// ln P(sup <= x) for the projection-class sup at deviation level x:
// K(x) * ln P(|D| <= x), with K(x) = min(exp((x/2)^-alpha / 2) - 1, K_cap)
// handled in log space (K can be astronomically large).
double ln_sup_cdf(int n, double alpha, double x, double ln_k_limit) {
    if (!(x > 0.0)) return -std::numeric_limits<double>::infinity();
    const double ln_k1 = std::min(std::pow(x / 2.0, -alpha) / 2.0, ln_k_limit);  // ln(K+1)
    if (ln_k1 <= 0.0) return 0.0;  // no coordinate constrains the sup at level x
    const double nn = static_cast<double>(n);
    const long long m = static_cast<long long>(std::floor(nn / 2.0 + nn * x + 1e-9)) + 1;
    if (m > n) return 0.0;  // deviation above x is impossible
    if (ln_k1 < 25.0) {
        double k_count = std::floor(std::expm1(ln_k1) + 1e-9);
        if (k_count < 1.0) return 0.0;
        double tail = 2.0 * std::exp(ln_binomial_upper_tail(n, m));
        if (tail >= 1.0) return -std::numeric_limits<double>::infinity();
        return k_count * std::log1p(-tail);
    }
    // astronomically many coordinates: ln F = K ln(1-s) ~ -K s, s = 2 tail
    double ln_s = std::numbers::ln2 + ln_binomial_upper_tail(n, m);
    double ln_ks = ln_k1 + ln_s;
    if (ln_ks > std::log(1e6)) return -std::numeric_limits<double>::infinity();
    double s = std::exp(ln_s);
    if (s >= 1.0) return -std::numeric_limits<double>::infinity();
    // K s computed in log space; the (1 + s/2 + ...) correction is negligible
    // whenever this branch is active (s <= e^6 / K < 1e-4)
    return -std::exp(ln_ks);
}

}  // namespace

double sample_projection_sup_exact(int n, double alpha, double uniform_draw, double ln_k_limit) {
    if (!(alpha > 0.0) || alpha > 2.0) throw std::invalid_argument("alpha must lie in (0, 2]");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double ln_u = std::log(std::max(uniform_draw, 1e-300));
    double lo = 0.0, hi = 0.5 + 1.0 / static_cast<double>(n);  // |D| <= 1/2 always
    for (int iter = 0; iter < 90; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (ln_sup_cdf(n, alpha, mid, ln_k_limit) >= ln_u)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

LevyRateResult levy_rate_experiment(double alpha, const std::vector<int>& n_list, int replicates,
                                    std::uint64_t seed, Execution exec) {
    if (n_list.size() < 2) throw std::invalid_argument("need at least two sample sizes");
    if (replicates < 1) throw std::invalid_argument("need at least one replicate");
    auto [min_it, max_it] = std::minmax_element(n_list.begin(), n_list.end());
    if (std::log10(static_cast<double>(*max_it) / static_cast<double>(*min_it)) < 1.5)
        throw std::invalid_argument("the n list must span at least 1.5 decades");

    const std::size_t total = n_list.size() * static_cast<std::size_t>(replicates);
    std::vector<double> draws(total);
    parallel_for(total, exec, [&](std::size_t idx) {
        std::size_t j = idx / static_cast<std::size_t>(replicates);
        std::size_t r = idx % static_cast<std::size_t>(replicates);
        Rng rng = make_rng(substream_seed(seed, j, r));
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        draws[idx] = sample_projection_sup_exact(n_list[j], alpha, uni(rng));
    });

    LevyRateResult out;
    out.alpha = alpha;
    out.expected_slope = -1.0 / (2.0 + alpha);
    std::vector<double> xs, ys;
    for (std::size_t j = 0; j < n_list.size(); ++j) {
        std::vector<double> rep(draws.begin() + static_cast<std::ptrdiff_t>(j * replicates),
                                draws.begin() + static_cast<std::ptrdiff_t>((j + 1) * replicates));
        std::sort(rep.begin(), rep.end());
        double median = replicates % 2 == 1
                            ? rep[static_cast<std::size_t>(replicates / 2)]
                            : 0.5 * (rep[static_cast<std::size_t>(replicates / 2) - 1] +
                                     rep[static_cast<std::size_t>(replicates / 2)]);
        out.medians.emplace_back(static_cast<double>(n_list[j]), median);
        xs.push_back(std::log(static_cast<double>(n_list[j])));
        ys.push_back(std::log(median));
    }
    // least squares y = intercept + slope x
    const double m = static_cast<double>(xs.size());
    double xbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= m;
    ybar /= m;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    out.slope = sxy / sxx;
    out.intercept = ybar - out.slope * xbar;
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double resid = ys[i] - (out.intercept + out.slope * xs[i]);
        out.residuals.push_back(resid);
        rss += resid * resid;
    }
    out.slope_std_error = xs.size() > 2 ? std::sqrt(rss / (m - 2.0) / sxx) : 0.0;
    return out;
}

}  // namespace marginlab
