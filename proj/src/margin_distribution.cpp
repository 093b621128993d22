#include "marginlab/margin_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "marginlab/errors.hpp"

namespace marginlab {

namespace {

std::vector<MarginDistribution::Point> sort_and_merge(std::vector<MarginDistribution::Point> pts) {
    if (pts.empty()) throw SchemaError("margin distribution needs at least one point");
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.value < b.value; });
    std::vector<MarginDistribution::Point> merged;
    merged.reserve(pts.size());
    for (const auto& p : pts) {
        if (p.weight < 0.0) throw SchemaError("margin weights must be nonnegative");
        if (p.weight == 0.0) continue;
        if (!merged.empty() && merged.back().value == p.value)
            merged.back().weight += p.weight;
        else
            merged.push_back(p);
    }
    if (merged.empty()) throw SchemaError("margin distribution has zero total mass");
    double total = 0.0;
    for (const auto& p : merged) total += p.weight;
    if (std::fabs(total - 1.0) > 1e-12)
        throw SchemaError("margin weights must sum to 1 (got " + std::to_string(total) + ")");
    for (auto& p : merged) p.weight /= total;
    return merged;
}

}  // namespace

MarginDistribution::MarginDistribution(std::vector<Point> points)
    : points_(sort_and_merge(std::move(points))) {
    cumulative_.resize(points_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        acc += points_[i].weight;
        cumulative_[i] = acc;
    }
    cumulative_.back() = 1.0;
}

MarginDistribution MarginDistribution::from_values(const std::vector<double>& values) {
    if (values.empty()) throw SchemaError("margin distribution needs at least one value");
    std::vector<Point> pts;
    pts.reserve(values.size());
    const double w = 1.0 / static_cast<double>(values.size());
    for (double v : values) pts.push_back({v, w});
    return MarginDistribution(std::move(pts));
}

double MarginDistribution::cdf(double y) const {
    // first point with value > y
    auto it = std::upper_bound(points_.begin(), points_.end(), y,
                               [](double lhs, const Point& p) { return lhs < p.value; });
    if (it == points_.begin()) return 0.0;
    return cumulative_[static_cast<std::size_t>(it - points_.begin()) - 1];
}

double MarginDistribution::cdf_left(double y) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), y,
                               [](const Point& p, double rhs) { return p.value < rhs; });
    if (it == points_.begin()) return 0.0;
    return cumulative_[static_cast<std::size_t>(it - points_.begin()) - 1];
}

double MarginDistribution::mass_abs_leq(double delta) const {
    if (delta < 0.0) return 0.0;
    return cdf(delta) - cdf_left(-delta);
}

double MarginDistribution::mass_in(double lo, double hi) const {
    if (hi <= lo) return 0.0;
    return cdf(hi) - cdf(lo);
}

MarginDistribution MarginDistribution::truncated(double m) const {
    if (!(m > 0.0)) throw SchemaError("truncation level must be positive");
    std::vector<Point> pts;
    pts.reserve(points_.size());
    for (const auto& p : points_)
        pts.push_back({std::clamp(p.value, -m, m), p.weight});
    return MarginDistribution(std::move(pts));
}

std::string MarginDistribution::to_csv() const {
    std::string out;
    char buf[80];
    for (const auto& p : points_) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.value, p.weight);
        out += buf;
    }
    return out;
}

MarginDistribution MarginDistribution::from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Point> pts;
    std::vector<double> bare_values;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        const char* s = line.c_str();
        char* end = nullptr;
        double value = std::strtod(s, &end);
        if (end == s) throw ParseError("row " + std::to_string(row) + ": bad margin value");
        while (*end == ' ') ++end;
        if (*end == '\0' || *end == '\r') {
            bare_values.push_back(value);
            continue;
        }
        if (*end != ',') throw ParseError("row " + std::to_string(row) + ": expected ','");
        const char* ws = end + 1;
        double weight = std::strtod(ws, &end);
        if (end == ws) throw ParseError("row " + std::to_string(row) + ": bad weight");
        pts.push_back({value, weight});
    }
    if (!pts.empty() && !bare_values.empty())
        throw ParseError("cannot mix weighted and unweighted margin rows");
    if (!bare_values.empty()) return from_values(bare_values);
    return MarginDistribution(std::move(pts));
}

}  // namespace marginlab
