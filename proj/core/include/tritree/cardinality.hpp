#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tritree/lattice.hpp"
#include "tritree/weights.hpp"

namespace tritree {

// Visit counts per level on the dense range [k_minus, k_minus + counts.size()).
// The default comparison is structural and exists only for ordered containers;
// use lex_compare_positive / lex_compare_mixed for the enumeration orders.
struct cardinality_tuple {
    int k_minus = 0;
    std::vector<int> counts;

    int k_plus() const { return k_minus + static_cast<int>(counts.size()) - 1; }
    int at(int level) const {
        int i = level - k_minus;
        return i < 0 || i >= static_cast<int>(counts.size()) ? 0 : counts[i];
    }
    int& operator[](int level) { return counts[level - k_minus]; }
    int total() const;
    bool has_negative_part() const;

    auto operator<=>(const cardinality_tuple&) const = default;
};

struct truncated_tuple {
    std::vector<int> counts;  // levels 0..k_plus
    auto operator<=>(const truncated_tuple&) const = default;
};

struct beta_tag {
    int beta = 2;
    bool operator==(const beta_tag&) const = default;
};

// 1 when D + kstar is odd, 2 otherwise.
beta_tag switching_term(int depth, int kstar);

// Histogram over the visited range [min, max].
cardinality_tuple histogram(const position_seq& seq);
// Histogram over a fixed range; throws out_of_range if a position falls outside it.
cardinality_tuple histogram(const position_seq& seq, bounds_t range);

// Same counts re-expressed on another range. Throws out_of_range if a nonzero
// entry would be dropped.
cardinality_tuple reframe(const cardinality_tuple& t, bounds_t range);

// Index mirror k -> -k.
cardinality_tuple mirror(const cardinality_tuple& t);

// Right-to-left comparison. Throws index_mismatch unless both tuples share a
// range and carry no mass below level 0.
std::strong_ordering lex_compare_positive(const cardinality_tuple& a, const cardinality_tuple& b);

// Negative levels first, -1 outward, where a smaller count ranks higher; then
// levels k_plus down to 0. Throws index_mismatch on differing ranges.
std::strong_ordering lex_compare_mixed(const cardinality_tuple& a, const cardinality_tuple& b);

// Starting tuple on [k_minus, k_plus] for 0 <= kstar <= D.
std::pair<cardinality_tuple, beta_tag> seed_tuple(int depth, int kstar);

// Fewest visits per level, on [low, high], for a path from 0 that touches low
// and high and ends at kstar. Requires low <= min(0, kstar), high >= max(0, kstar).
std::vector<int> minimum_profile(int low, int high, int kstar);

// True iff some path of depth D ending at kstar has exactly this histogram.
bool validate_tuple(const cardinality_tuple& t, int depth, int kstar);

// Sum of c_k * w_k. Throws missing_weight for an occupied level without weight.
double weighted_sum(const cardinality_tuple& t, const weight_table& w);
std::int64_t weighted_sum_scaled(const cardinality_tuple& t, const weight_table& w);

// Throws nonzero_negative_part.
truncated_tuple truncate(const cardinality_tuple& t);
cardinality_tuple untruncate(const truncated_tuple& tt, int k_minus);

// `k_minus:c_kminus,...,c_kplus`
std::string encode(const cardinality_tuple& t);
// Throws parse_error.
cardinality_tuple decode(std::string_view text);

struct cardinality_tuple_hash {
    std::size_t operator()(const cardinality_tuple& t) const;
};

}  // namespace tritree
