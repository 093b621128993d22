#ifndef MARGINLAB_COST_HPP
#define MARGINLAB_COST_HPP

#include <utility>
#include <vector>

namespace marginlab {

// Piecewise-linear margin cost function.  The canonical costs:
//   upper_step: 1 for x <= 0, 0 for x >= 1, linear between (dominates the
//               indicator of (-inf, 0]); Lipschitz constant 1.
//   lower_step: 1 for x <= -1, 0 for x >= 0, linear between (dominated by
//               the indicator); Lipschitz constant 1.
class CostFunction {
public:
    static CostFunction upper_step();
    static CostFunction lower_step();
    // Knots (x, y) sorted by x; constant extension outside.  Lipschitz
    // constant is the maximum absolute knot-to-knot slope.
    static CostFunction piecewise_linear(std::vector<std::pair<double, double>> knots);

    double operator()(double x) const;
    double lipschitz() const { return lipschitz_; }

private:
    explicit CostFunction(std::vector<std::pair<double, double>> knots);
    std::vector<std::pair<double, double>> knots_;
    double lipschitz_ = 0.0;
};

}  // namespace marginlab

#endif
