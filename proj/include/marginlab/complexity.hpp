#ifndef MARGINLAB_COMPLEXITY_HPP
#define MARGINLAB_COMPLEXITY_HPP

#include <cstdint>
#include <string>

#include "marginlab/dataset.hpp"
#include "marginlab/function_class.hpp"
#include "marginlab/parallel.hpp"

namespace marginlab {

enum class MultiplierKind { rademacher, gaussian };

// Monte Carlo estimate of R_n(F) or G_n(F): mean over B independent
// multiplier draws of the per-draw supremum, with its standard error
// (sample standard deviation across draws divided by sqrt(B)).
struct ComplexityEstimate {
    double value = 0.0;
    int draws = 0;
    double std_error = 0.0;
    MultiplierKind kind = MultiplierKind::rademacher;
    std::uint64_t seed = 0;
};

std::string to_string(MultiplierKind kind);

struct EstimatorOptions {
    Execution execution = Execution::parallel;
    // When set, multiplier i is multiplied by the sample's -1/+1 label,
    // estimating the complexity of the labeled class {(x,y) -> y f(x)}.
    bool label_multipliers = false;
};

// R_n(F): mean over draws of sup_f |n^{-1} sum_i eps_i f(X_i)| with
// Rademacher eps.  Deterministic given the seed: draw b uses substream b,
// so the result does not depend on the execution schedule.
ComplexityEstimate estimate_rademacher(const FunctionClassHandle& cls, const Dataset& data,
                                       int draws, std::uint64_t seed,
                                       const EstimatorOptions& opt = {});

// G_n(F): same with iid standard normal multipliers.
ComplexityEstimate estimate_gaussian(const FunctionClassHandle& cls, const Dataset& data,
                                     int draws, std::uint64_t seed,
                                     const EstimatorOptions& opt = {});

// Exact Rademacher complexity by enumerating all 2^n sign vectors.
// Refuses n > 14.
double exact_rademacher_small_n(const FunctionClassHandle& cls, const Dataset& data,
                                Execution exec = Execution::serial);

// Closed-form VC bound C * sqrt(V / n) on R_n of a VC class.
double vc_complexity_bound(int vc_dimension, int n, double constant = 1.0);

}  // namespace marginlab

#endif
