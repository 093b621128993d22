#ifndef MARGINLAB_MARGIN_DISTRIBUTION_HPP
#define MARGINLAB_MARGIN_DISTRIBUTION_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace marginlab {

// Discrete distribution of margin values: sorted (value, weight) points with
// duplicates merged and total weight 1.  cdf(y) is the right-continuous
// step function P{margin <= y}.
class MarginDistribution {
public:
    struct Point {
        double value;
        double weight;
    };

    // Points are sorted and merged; weights must be nonnegative and sum to 1
    // within 1e-12 (they are renormalized to remove accumulation error).
    explicit MarginDistribution(std::vector<Point> points);

    // Equal-weight distribution of raw margin values.
    static MarginDistribution from_values(const std::vector<double>& values);

    const std::vector<Point>& points() const { return points_; }

    // P{margin <= y}
    double cdf(double y) const;
    // P{margin < y}
    double cdf_left(double y) const;
    // P{|margin| <= delta}
    double mass_abs_leq(double delta) const;
    // P{lo < margin <= hi}
    double mass_in(double lo, double hi) const;

    double min_value() const { return points_.front().value; }
    double max_value() const { return points_.back().value; }

    // Values clamped into [-m, m], mass merged at the boundary.
    MarginDistribution truncated(double m) const;

    // Serialization as "value,weight" rows.
    std::string to_csv() const;
    static MarginDistribution from_csv(const std::string& text);

private:
    std::vector<Point> points_;
    std::vector<double> cumulative_;  // cumulative_[i] = sum of weights through point i
};

}  // namespace marginlab

#endif
