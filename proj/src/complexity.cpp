#include "marginlab/complexity.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "marginlab/errors.hpp"
#include "marginlab/rng.hpp"

namespace marginlab {

std::string to_string(MultiplierKind kind) {
    return kind == MultiplierKind::rademacher ? "rademacher" : "gaussian";
}

namespace {

ComplexityEstimate run_estimator(const FunctionClassHandle& cls, const Dataset& data, int draws,
                                 std::uint64_t seed, MultiplierKind kind,
                                 const EstimatorOptions& opt) {
    if (draws < 1) throw std::invalid_argument("complexity estimate needs draws >= 1");
    const std::size_t n = data.size();
    std::vector<double> sups(static_cast<std::size_t>(draws));
    parallel_for(static_cast<std::size_t>(draws), opt.execution, [&](std::size_t b) {
        Rng rng = make_rng(substream_seed(seed, b));
        std::vector<double> m = kind == MultiplierKind::rademacher ? rademacher_vector(n, rng)
                                                                   : gaussian_vector(n, rng);
        if (opt.label_multipliers)
            for (std::size_t i = 0; i < n; ++i) m[i] *= static_cast<double>(data.label(i));
        sups[b] = cls.sup_weighted_mean(data, m);
    });
    double mean = 0.0;
    for (double s : sups) mean += s;
    mean /= static_cast<double>(draws);
    double var = 0.0;
    for (double s : sups) var += (s - mean) * (s - mean);
    var = draws > 1 ? var / static_cast<double>(draws - 1) : 0.0;
    ComplexityEstimate est;
    est.value = mean;
    est.draws = draws;
    est.std_error = std::sqrt(var / static_cast<double>(draws));
    est.kind = kind;
    est.seed = seed;
    return est;
}

}  // namespace

ComplexityEstimate estimate_rademacher(const FunctionClassHandle& cls, const Dataset& data,
                                       int draws, std::uint64_t seed,
                                       const EstimatorOptions& opt) {
    return run_estimator(cls, data, draws, seed, MultiplierKind::rademacher, opt);
}

ComplexityEstimate estimate_gaussian(const FunctionClassHandle& cls, const Dataset& data,
                                     int draws, std::uint64_t seed, const EstimatorOptions& opt) {
    return run_estimator(cls, data, draws, seed, MultiplierKind::gaussian, opt);
}

double exact_rademacher_small_n(const FunctionClassHandle& cls, const Dataset& data,
                                Execution exec) {
    const std::size_t n = data.size();
    if (n > 14)
        throw std::invalid_argument("exact enumeration is limited to n <= 14 (got n = " +
                                    std::to_string(n) + ")");
    const std::size_t count = std::size_t{1} << n;
    std::vector<double> sups(count);
    parallel_for(count, exec, [&](std::size_t mask) {
        std::vector<double> m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = (mask >> i) & 1u ? 1.0 : -1.0;
        sups[mask] = cls.sup_weighted_mean(data, m);
    });
    double mean = 0.0;
    for (double s : sups) mean += s;
    return mean / static_cast<double>(count);
}

double vc_complexity_bound(int vc_dimension, int n, double constant) {
    if (vc_dimension < 1) throw std::invalid_argument("VC dimension must be >= 1");
    if (n < 1) throw std::invalid_argument("sample size must be >= 1");
    if (!(constant > 0.0)) throw std::invalid_argument("VC bound constant must be positive");
    return constant * std::sqrt(static_cast<double>(vc_dimension) / static_cast<double>(n));
}

}  // namespace marginlab
