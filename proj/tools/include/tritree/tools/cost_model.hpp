#pragma once

#include <utility>
#include <vector>

namespace tritree::tools {

// Binary entropy in bits.
double binary_entropy(double x);

// T(D) <= C sqrt(D) gamma^D with gamma = 2^(3/4 H(1/3)).
struct cost_model {
    double gamma = 0;
    double rho = 0;
    double fitted_C = 0;
    std::vector<std::pair<int, double>> samples;  // (D, measured ops)

    static cost_model standard();

    double shape(int depth) const;  // sqrt(D) gamma^D
    double bound(int depth) const { return fitted_C * shape(depth); }

    // fitted_C = max over samples of measured / shape(D).
    void fit(std::vector<std::pair<int, double>> points);
};

// 3^D / count.
double speedup(int depth, double count);

}  // namespace tritree::tools
