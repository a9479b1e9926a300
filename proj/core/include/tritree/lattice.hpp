#pragma once

#include <cstdint>
#include <vector>

namespace tritree {

// Enumeration beyond this depth is hopeless; counting ignores it.
inline constexpr int default_depth_cap = 64;

struct vertex {
    int k = 0;
    int d = 0;
};

// A step is one of -1, 0, +1.
using step_seq = std::vector<int>;

// Positions visited at depths 0..D. Index d holds the level at depth d.
using position_seq = std::vector<int>;

struct step_counts_t {
    int j_plus = 0;
    int j_minus = 0;
    int j_zero = 0;
    bool operator==(const step_counts_t&) const = default;
};

struct bounds_t {
    int k_minus = 0;
    int k_plus = 0;
    int width() const { return k_plus - k_minus + 1; }
    bool operator==(const bounds_t&) const = default;
};

// Throws invalid_path when a step is outside {-1,0,1}.
position_seq walk_to_path(const step_seq& steps);

// Throws invalid_path on a bad increment or a nonzero root.
step_seq path_to_walk(const position_seq& seq);

// Range of levels a path of depth D ending at kstar can occupy.
// Throws out_of_range if |kstar| > D.
bounds_t position_bounds(int depth, int kstar);

step_counts_t step_counts(const position_seq& seq);

position_seq reflect(const position_seq& seq);

bool validate_path(const std::vector<int>& seq);

// validate_path plus length D+1 and terminal kstar.
bool validate_path(const std::vector<int>& seq, int depth, int kstar);

inline int terminal(const position_seq& seq) { return seq.back(); }
inline int depth_of(const position_seq& seq) { return static_cast<int>(seq.size()) - 1; }

// Smallest number of steps between two levels; used for reachability tests.
inline bool reachable(int from, int to, int steps) {
    int gap = from > to ? from - to : to - from;
    return gap <= steps;
}

}  // namespace tritree
