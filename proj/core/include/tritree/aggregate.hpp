#pragma once

#include <cstdint>
#include <map>

#include "tritree/bigint.hpp"
#include "tritree/oracle.hpp"
#include "tritree/weights.hpp"

namespace tritree {

// Path-sum value (fixed point with `scale` fractional digits) -> number of paths.
struct value_distribution {
    int scale = 0;
    std::map<std::int64_t, big_int> entries;

    big_int total() const;
    big_int count_at(std::int64_t scaled_value) const;
    bool operator==(const value_distribution&) const = default;
};

// Forward DP over (depth, level) cells, each cell holding a value histogram.
// Throws out_of_range for |kstar| > D and missing_weight for a reachable level
// without a weight.
value_distribution path_sum_distribution(int depth, int kstar, const weight_table& w);

// Sum p N_p / Sum N_p. Throws empty_terminal when the distribution is empty.
double lebesgue_average(const value_distribution& dist);
double lebesgue_average(int depth, int kstar, const weight_table& w);

// One entry per class at weighted_sum(key), with the class multiplicity.
value_distribution class_aggregate(const class_table& classes, const weight_table& w);

// Direct per-path summation over the oracle stream.
value_distribution brute_force_distribution(int depth, int kstar, const weight_table& w,
                                            int cap = default_oracle_cap);

}  // namespace tritree
