#include "marginlab/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "marginlab/errors.hpp"
#include "marginlab/rng.hpp"

namespace marginlab {

void IntervalsProblem::validate() const {
    if (!(noise >= 0.0) || noise >= 0.5) throw SchemaError("noise must lie in [0, 1/2)");
    double prev_end = -1.0;
    for (const auto& [lo, hi] : targets) {
        if (!(lo < hi)) throw SchemaError("target interval endpoints must satisfy lo < hi");
        if (lo < 0.0 || hi > 1.0) throw SchemaError("target intervals must lie within [0, 1]");
        if (lo <= prev_end) throw SchemaError("target intervals must be disjoint and sorted");
        prev_end = hi;
    }
}

int IntervalsProblem::clean_label(double x) const {
    for (const auto& [lo, hi] : targets)
        if (x >= lo && x <= hi) return 1;
    return -1;
}

Dataset sample_dataset(const IntervalsProblem& problem, int n, std::uint64_t seed) {
    problem.validate();
    if (n < 1) throw SchemaError("sample size must be >= 1");
    Rng rng = make_rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<LabeledSample> samples;
    samples.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = uni(rng);
        int label = problem.clean_label(x);
        if (problem.noise > 0.0 && uni(rng) < problem.noise) label = -label;
        samples.push_back({{x}, label});
    }
    return Dataset(std::move(samples), LabelKind::binary);
}

std::vector<double> classifier_breakpoints(const VotingClassifier& f,
                                           const IntervalsProblem& problem) {
    std::set<double> cuts = {0.0, 1.0};
    for (const auto& h : f.hypotheses()) {
        if (const Stump* s = h.as_stump()) {
            if (s->feature != 0) throw SchemaError("intervals oracle expects 1-D classifiers");
            cuts.insert(s->threshold);
        } else if (const IntervalHypothesis* iv = h.as_interval()) {
            if (iv->feature != 0) throw SchemaError("intervals oracle expects 1-D classifiers");
            cuts.insert(iv->lo);
            cuts.insert(iv->hi);
        } else {
            throw SchemaError("exact oracle supports stump/interval bases only");
        }
    }
    for (const auto& [lo, hi] : problem.targets) {
        cuts.insert(lo);
        cuts.insert(hi);
    }
    std::vector<double> out;
    for (double c : cuts)
        if (c >= 0.0 && c <= 1.0) out.push_back(c);
    return out;
}

namespace {

// Visits every cell of positive length with its clean label and f's value
// (f is constant on cell interiors; endpoint conventions carry no mass).
template <typename Visit>
void sweep_cells(const VotingClassifier& f, const IntervalsProblem& problem, Visit visit) {
    problem.validate();
    auto cuts = classifier_breakpoints(f, problem);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        double lo = cuts[c], hi = cuts[c + 1];
        double length = hi - lo;
        if (length <= 0.0) continue;
        double mid = 0.5 * (lo + hi);
        double features[1] = {mid};
        visit(length, problem.clean_label(mid), f.value(std::span<const double>(features, 1)));
    }
}

}  // namespace

double exact_generalization_error(const VotingClassifier& f, const IntervalsProblem& problem) {
    const double eta = problem.noise;
    double error = 0.0;
    sweep_cells(f, problem, [&](double length, int label, double value) {
        double clean_margin = static_cast<double>(label) * value;
        // observed label is clean w.p. 1-eta and flipped w.p. eta; a margin
        // of exactly 0 errs either way
        if (clean_margin <= 0.0) error += (1.0 - eta) * length;
        if (-clean_margin <= 0.0) error += eta * length;
    });
    return error;
}

MarginDistribution exact_margin_distribution(const VotingClassifier& f,
                                             const IntervalsProblem& problem) {
    const double eta = problem.noise;
    std::vector<MarginDistribution::Point> points;
    sweep_cells(f, problem, [&](double length, int label, double value) {
        double clean_margin = static_cast<double>(label) * value;
        points.push_back({clean_margin, (1.0 - eta) * length});
        if (eta > 0.0) points.push_back({-clean_margin, eta * length});
    });
    return MarginDistribution(std::move(points));
}

}  // namespace marginlab
