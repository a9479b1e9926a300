#include "tritree/tools/cost_model.hpp"

#include <algorithm>
#include <cmath>

namespace tritree::tools {

double binary_entropy(double x) {
    if (x <= 0 || x >= 1) return 0;
    return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

cost_model cost_model::standard() {
    cost_model m;
    m.gamma = std::exp2(0.75 * binary_entropy(1.0 / 3.0));
    m.rho = 1 / m.gamma;
    return m;
}

double cost_model::shape(int depth) const { return std::sqrt(static_cast<double>(depth)) * std::pow(gamma, depth); }

void cost_model::fit(std::vector<std::pair<int, double>> points) {
    samples = std::move(points);
    fitted_C = 0;
    for (auto [d, ops] : samples)
        if (d > 0) fitted_C = std::max(fitted_C, ops / shape(d));
}

double speedup(int depth, double count) { return std::pow(3.0, depth) / count; }

}  // namespace tritree::tools
