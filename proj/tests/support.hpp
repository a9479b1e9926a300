#pragma once

#include <random>
#include <vector>

#include "tritree/lattice.hpp"

namespace tritree::test {

// Uniform random walk of the given depth.
inline position_seq random_path(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> step(-1, 1);
    step_seq s(depth);
    for (int& x : s) x = step(rng);
    return walk_to_path(s);
}

// Random path that never goes below 0 and ends at kstar >= 0.
inline position_seq random_nonnegative_path(std::mt19937_64& rng, int depth, int kstar) {
    position_seq p{0};
    for (int d = 1; d <= depth; ++d) {
        std::vector<int> options;
        for (int y = p.back() - 1; y <= p.back() + 1; ++y)
            if (y >= 0 && reachable(y, kstar, depth - d)) options.push_back(y);
        p.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
    }
    return p;
}

inline long long pow3(int d) {
    long long r = 1;
    while (d-- > 0) r *= 3;
    return r;
}

}  // namespace tritree::test
