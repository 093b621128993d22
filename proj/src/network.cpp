#include "marginlab/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "marginlab/errors.hpp"
#include "marginlab/serialize.hpp"

namespace marginlab {

Sigmoid Sigmoid::clamp() {
    return {"clamp", 1.0, [](double u) { return std::clamp(u, -1.0, 1.0); }};
}

Sigmoid Sigmoid::tanh_unit() {
    return {"tanh", 1.0, [](double u) { return std::tanh(u); }};
}

Sigmoid Sigmoid::by_id(const std::string& id) {
    if (id == "clamp") return clamp();
    if (id == "tanh") return tanh_unit();
    throw SchemaError("unknown sigmoid id: " + id);
}

double Neuron::l1_norm() const {
    double s = 0.0;
    for (double w : weights) s += std::fabs(w);
    return s;
}

FeedforwardNet::FeedforwardNet(std::vector<BaseHypothesis> base, std::vector<NetworkLayer> layers)
    : base_(std::move(base)), layers_(std::move(layers)) {
    if (base_.empty()) throw SchemaError("network needs at least one base hypothesis");
    if (layers_.empty()) throw SchemaError("network needs at least one weighted layer");
    if (layers_.back().neurons.size() != 1)
        throw SchemaError("the output layer must hold exactly one neuron");
    for (std::size_t j = 0; j < layers_.size(); ++j) {
        const auto& layer = layers_[j];
        if (layer.neurons.empty()) throw SchemaError("layer " + std::to_string(j) + " is empty");
        if (layer.b_floor < 0.0) throw SchemaError("b floor must be nonnegative");
        for (const auto& neuron : layer.neurons) {
            if (neuron.sources.size() != neuron.weights.size())
                throw SchemaError("neuron weight/source lengths differ");
            for (const auto& src : neuron.sources) {
                // sources may reference the base layer (0) or any strictly
                // earlier weighted layer; that keeps the graph acyclic
                if (src.layer > j)
                    throw SchemaError("neuron references a later layer");
                std::size_t limit =
                    src.layer == 0 ? base_.size() : layers_[src.layer - 1].neurons.size();
                if (src.index >= limit) throw SchemaError("dangling neuron source reference");
            }
        }
    }
}

double FeedforwardNet::value(std::span<const double> features) const {
    std::vector<std::vector<double>> outputs(layers_.size() + 1);
    outputs[0].resize(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i) outputs[0][i] = base_[i].value(features);
    for (std::size_t j = 0; j < layers_.size(); ++j) {
        const auto& layer = layers_[j];
        outputs[j + 1].resize(layer.neurons.size());
        for (std::size_t m = 0; m < layer.neurons.size(); ++m) {
            const auto& neuron = layer.neurons[m];
            double u = 0.0;
            for (std::size_t s = 0; s < neuron.sources.size(); ++s)
                u += neuron.weights[s] * outputs[neuron.sources[s].layer][neuron.sources[s].index];
            outputs[j + 1][m] = layer.sigmoid.eval(u);
        }
    }
    return outputs.back().front();
}

double zeta_upper_bound(double alpha) {
    if (!(alpha > 1.0)) return std::numeric_limits<double>::infinity();
    static std::mutex mutex;
    static std::map<double, double> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(alpha);
        if (it != cache.end()) return it->second;
    }
    const int terms = 1000000;
    double partial = 0.0;
    for (int k = terms; k >= 1; --k) partial += std::pow(static_cast<double>(k), -alpha);
    // tail sum_{k > N} k^-alpha <= integral_N^inf x^-alpha dx
    double tail = std::pow(static_cast<double>(terms), 1.0 - alpha) / (alpha - 1.0);
    double result = partial + tail;
    std::lock_guard<std::mutex> lock(mutex);
    cache[alpha] = result;
    return result;
}

void require_zeta_admissible(double alpha) {
    if (zeta_upper_bound(alpha) >= 1.5)
        throw std::domain_error("alpha = " + std::to_string(alpha) +
                                " violates the constraint zeta(alpha) < 3/2");
}

PenaltyBreakdown penalty_quantities(const FeedforwardNet& net, double alpha) {
    require_zeta_admissible(alpha);
    PenaltyBreakdown out;
    for (const auto& layer : net.layers()) {
        double w = 0.0;
        for (const auto& neuron : layer.neurons) w = std::max(w, neuron.l1_norm());
        w = std::max(w, layer.b_floor);
        out.w_per_layer.push_back(w);
        out.lambda *= 4.0 * layer.sigmoid.lipschitz * w + 1.0;
        out.gamma_alpha += std::sqrt(alpha / 2.0 * std::log(2.0 + std::fabs(std::log2(w))));
    }
    return out;
}

double theorem13_factor(const std::vector<double>& lipschitz,
                        const std::vector<double>& l1_bounds) {
    if (lipschitz.size() != l1_bounds.size())
        throw std::invalid_argument("lipschitz and l1-bound lists must have equal length");
    double prod = 1.0;
    for (std::size_t j = 0; j < lipschitz.size(); ++j) {
        if (!(lipschitz[j] > 0.0) || !(l1_bounds[j] > 0.0))
            throw std::invalid_argument("lipschitz constants and l1 bounds must be positive");
        prod *= 2.0 * lipschitz[j] * l1_bounds[j] + 1.0;
    }
    return prod;
}

double penalty_psi(const FeedforwardNet& net, double delta, int n,
                   const ComplexityEstimate& gaussian_complexity, double alpha) {
    if (!(delta > 0.0) || delta > 1.0) throw std::domain_error("delta must lie in (0, 1]");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    PenaltyBreakdown q = penalty_quantities(net, alpha);
    const double rootn = std::sqrt(static_cast<double>(n));
    return 2.0 * std::sqrt(2.0 * std::numbers::pi) / delta * q.lambda * gaussian_complexity.value +
           std::sqrt(std::log(std::log2(2.0 / delta)) / static_cast<double>(n)) +
           q.gamma_alpha / rootn;
}

SelectionResult penalized_select(
    const std::vector<std::pair<const FeedforwardNet*, const MarginDistribution*>>& candidates,
    int n, const ComplexityEstimate& gaussian_complexity, double alpha,
    const std::vector<double>& delta_grid) {
    if (candidates.empty()) throw std::invalid_argument("candidate list must be nonempty");
    if (delta_grid.empty()) throw std::invalid_argument("delta grid must be nonempty");
    SelectionResult out;
    const double rootn = std::sqrt(static_cast<double>(n));
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const auto& [net, margins] = candidates[c];
        CandidateReport rep;
        rep.index = c;
        rep.breakdown = penalty_quantities(*net, alpha);
        rep.training_error = margins->cdf(0.0);
        bool first = true;
        for (double delta : delta_grid) {
            if (!(delta > 0.0) || delta > 1.0) throw std::domain_error("delta must lie in (0, 1]");
            double psi = 2.0 * std::sqrt(2.0 * std::numbers::pi) / delta * rep.breakdown.lambda *
                             gaussian_complexity.value +
                         std::sqrt(std::log(std::log2(2.0 / delta)) / static_cast<double>(n)) +
                         rep.breakdown.gamma_alpha / rootn;
            double pi_hat = margins->mass_in(0.0, delta) + psi;
            if (first || pi_hat < rep.penalty) {
                first = false;
                rep.penalty = pi_hat;
                rep.best_delta = delta;
                rep.breakdown.psi = psi;
                rep.breakdown.pi_hat = pi_hat;
                rep.breakdown.delta = delta;
            }
        }
        rep.objective = rep.training_error + rep.penalty;
        out.table.push_back(std::move(rep));
    }
    out.winner = 0;
    for (std::size_t c = 1; c < out.table.size(); ++c)
        if (out.table[c].objective < out.table[out.winner].objective) out.winner = c;
    return out;
}

std::string net_to_json(const FeedforwardNet& net) {
    nlohmann::json j;
    j["base"] = nlohmann::json::array();
    for (const auto& h : net.base()) j["base"].push_back(hypothesis_to_json(h));
    j["layers"] = nlohmann::json::array();
    for (const auto& layer : net.layers()) {
        nlohmann::json jl;
        jl["sigmoid"] = layer.sigmoid.id;
        jl["lipschitz"] = layer.sigmoid.lipschitz;
        jl["b"] = layer.b_floor;
        jl["neurons"] = nlohmann::json::array();
        for (const auto& neuron : layer.neurons) {
            nlohmann::json jn;
            jn["weights"] = neuron.weights;
            jn["sources"] = nlohmann::json::array();
            for (const auto& src : neuron.sources)
                jn["sources"].push_back({{"layer", src.layer}, {"index", src.index}});
            jl["neurons"].push_back(jn);
        }
        j["layers"].push_back(jl);
    }
    return j.dump(2);
}

FeedforwardNet net_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad network JSON: ") + e.what());
    }
    try {
        std::vector<BaseHypothesis> base;
        for (const auto& jh : j.at("base")) base.push_back(hypothesis_from_json(jh));
        std::vector<NetworkLayer> layers;
        for (const auto& jl : j.at("layers")) {
            NetworkLayer layer;
            layer.sigmoid = Sigmoid::by_id(jl.at("sigmoid").get<std::string>());
            if (jl.contains("lipschitz")) layer.sigmoid.lipschitz = jl.at("lipschitz").get<double>();
            layer.b_floor = jl.value("b", 1.0);
            for (const auto& jn : jl.at("neurons")) {
                Neuron neuron;
                neuron.weights = jn.at("weights").get<std::vector<double>>();
                for (const auto& js : jn.at("sources"))
                    neuron.sources.push_back(
                        {js.at("layer").get<std::size_t>(), js.at("index").get<std::size_t>()});
                layer.neurons.push_back(std::move(neuron));
            }
            layers.push_back(std::move(layer));
        }
        return FeedforwardNet(std::move(base), std::move(layers));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad network JSON: ") + e.what());
    }
}

}  // namespace marginlab
