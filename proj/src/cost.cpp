#include "marginlab/cost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace marginlab {

CostFunction::CostFunction(std::vector<std::pair<double, double>> knots)
    : knots_(std::move(knots)) {
    if (knots_.size() < 2) throw std::invalid_argument("cost function needs >= 2 knots");
    for (std::size_t i = 1; i < knots_.size(); ++i) {
        if (!(knots_[i].first > knots_[i - 1].first))
            throw std::invalid_argument("cost knots must be strictly increasing in x");
        double slope = (knots_[i].second - knots_[i - 1].second) /
                       (knots_[i].first - knots_[i - 1].first);
        lipschitz_ = std::max(lipschitz_, std::fabs(slope));
    }
}

CostFunction CostFunction::upper_step() { return CostFunction({{0.0, 1.0}, {1.0, 0.0}}); }

CostFunction CostFunction::lower_step() { return CostFunction({{-1.0, 1.0}, {0.0, 0.0}}); }

CostFunction CostFunction::piecewise_linear(std::vector<std::pair<double, double>> knots) {
    return CostFunction(std::move(knots));
}

double CostFunction::operator()(double x) const {
    if (x <= knots_.front().first) return knots_.front().second;
    if (x >= knots_.back().first) return knots_.back().second;
    auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                               [](double lhs, const auto& k) { return lhs < k.first; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    double t = (x - lo.first) / (hi.first - lo.first);
    return lo.second + t * (hi.second - lo.second);
}

}  // namespace marginlab
