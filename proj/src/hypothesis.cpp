#include "marginlab/hypothesis.hpp"

#include <cmath>

#include "marginlab/errors.hpp"

namespace marginlab {

BaseHypothesis::BaseHypothesis(Tabulated t) : impl_(std::move(t)) {
    const auto& v = std::get<Tabulated>(impl_).values;
    if (v.empty()) throw SchemaError("tabulated hypothesis needs at least one value");
    for (double x : v)
        if (!(std::fabs(x) <= 1.0))
            throw SchemaError("tabulated hypothesis values must lie in [-1, 1]");
}

double BaseHypothesis::value(std::span<const double> features) const {
    if (const Stump* s = std::get_if<Stump>(&impl_)) {
        double x = features[s->feature];
        return x >= s->threshold ? s->orientation : -s->orientation;
    }
    if (const IntervalHypothesis* iv = std::get_if<IntervalHypothesis>(&impl_)) {
        double x = features[iv->feature];
        bool inside = x >= iv->lo && x <= iv->hi;
        return inside ? iv->orientation : -iv->orientation;
    }
    throw SchemaError("tabulated hypothesis cannot be evaluated at a fresh point");
}

double BaseHypothesis::value_at(const Dataset& data, std::size_t i) const {
    if (const Tabulated* t = std::get_if<Tabulated>(&impl_)) {
        if (i >= t->values.size())
            throw SchemaError("tabulated hypothesis has no value for sample index");
        return t->values[i];
    }
    return value(std::span<const double>(data.sample(i).features));
}

}  // namespace marginlab
