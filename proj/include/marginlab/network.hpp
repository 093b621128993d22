#ifndef MARGINLAB_NETWORK_HPP
#define MARGINLAB_NETWORK_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "marginlab/complexity.hpp"
#include "marginlab/dataset.hpp"
#include "marginlab/hypothesis.hpp"
#include "marginlab/margin_distribution.hpp"

namespace marginlab {

// Bounded nondecreasing activation into [-1, 1] with a known Lipschitz
// constant.  "clamp" and "tanh" are built in (both Lipschitz 1); custom
// sigmoids supply their own constant, unvalidated.
struct Sigmoid {
    std::string id;
    double lipschitz = 1.0;
    std::function<double(double)> eval;

    static Sigmoid clamp();
    static Sigmoid tanh_unit();
    static Sigmoid by_id(const std::string& id);
};

// One weighted neuron: sources reference outputs of earlier layers
// (layer 0 = base hypotheses).
struct Neuron {
    struct Source {
        std::size_t layer;  // 0 = base layer, j >= 1 = weighted layer j
        std::size_t index;
    };
    std::vector<Source> sources;
    std::vector<double> weights;  // same length as sources

    double l1_norm() const;
};

struct NetworkLayer {
    Sigmoid sigmoid;
    double b_floor = 1.0;  // b_k in W_k = max ||w||_1 v b_k
    std::vector<Neuron> neurons;
};

// Feedforward network over a base class: layer 0 holds base hypotheses,
// each weighted layer feeds on any earlier layer, the final layer has
// exactly one neuron.  Acyclicity and reference validity are enforced at
// construction; forward evaluation keeps every activation in [-1, 1].
class FeedforwardNet {
public:
    FeedforwardNet(std::vector<BaseHypothesis> base, std::vector<NetworkLayer> layers);

    double value(std::span<const double> features) const;
    double value(const LabeledSample& s) const { return value(std::span<const double>(s.features)); }

    std::size_t depth() const { return layers_.size(); }  // l(f)
    const std::vector<BaseHypothesis>& base() const { return base_; }
    const std::vector<NetworkLayer>& layers() const { return layers_; }

private:
    std::vector<BaseHypothesis> base_;
    std::vector<NetworkLayer> layers_;
};

// The l1-weight quantities of a network and the penalties built from them.
struct PenaltyBreakdown {
    std::vector<double> w_per_layer;  // W_k = max ||w||_1 v b_k
    double lambda = 1.0;              // prod_k (4 L_k W_k + 1)
    double gamma_alpha = 0.0;         // sum_k sqrt(alpha/2 log(2 + |log2 W_k|))
    double psi = 0.0;                 // filled by penalty_psi
    double pi_hat = 0.0;              // filled by penalized_select
    double delta = 1.0;
};

// Partial sums of k^-alpha plus the integral tail bound; the upper end is
// used for the acceptance test so rejection is conservative.
double zeta_upper_bound(double alpha);
// Throws std::domain_error unless zeta(alpha) < 3/2 (alpha = 3 passes,
// alpha = 2 does not).
void require_zeta_admissible(double alpha);

// Lambda, Gamma_alpha and the per-layer W_k of a network.
PenaltyBreakdown penalty_quantities(const FeedforwardNet& net, double alpha = 3.0);

// prod_j (2 L_j A_j + 1); empty lists give the empty product 1.
double theorem13_factor(const std::vector<double>& lipschitz, const std::vector<double>& l1_bounds);

// Psi_n(f; delta) = 2 sqrt(2 pi)/delta Lambda(f) G_n(H)
//                   + sqrt(log log2(2/delta) / n) + Gamma_alpha(f)/sqrt(n)
double penalty_psi(const FeedforwardNet& net, double delta, int n,
                   const ComplexityEstimate& gaussian_complexity, double alpha = 3.0);

struct CandidateReport {
    std::size_t index = 0;
    double training_error = 0.0;  // P_n{f~ <= 0}
    double penalty = 0.0;         // inf over the grid of pi_hat_n(f; delta)
    double objective = 0.0;       // training_error + penalty
    double best_delta = 1.0;
    PenaltyBreakdown breakdown;
};

struct SelectionResult {
    std::size_t winner = 0;
    std::vector<CandidateReport> table;
};

// Penalized selection: each candidate is scored by
//   P_n{f~ <= 0} + inf_delta [ P_n{0 < f~ <= delta} + Psi_n(f; delta) ],
// and the argmin wins (ties resolve to the first candidate in input order).
SelectionResult penalized_select(
    const std::vector<std::pair<const FeedforwardNet*, const MarginDistribution*>>& candidates,
    int n, const ComplexityEstimate& gaussian_complexity, double alpha,
    const std::vector<double>& delta_grid);

// JSON (de)serialization of the network description.
std::string net_to_json(const FeedforwardNet& net);
FeedforwardNet net_from_json(const std::string& text);

}  // namespace marginlab

#endif
