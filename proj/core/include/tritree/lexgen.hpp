#pragma once

#include <optional>
#include <vector>

#include "tritree/lattice.hpp"

namespace tritree {

// Maximal positive run (l, r): positions[l] == 0, positions[d] > 0 for l < d < r,
// and positions[r] == 0 unless r == D + 1.
struct excursion {
    int l = 0;
    int r = 0;
    bool operator==(const excursion&) const = default;
};

struct excursion_decomposition {
    std::vector<excursion> excursions;
    int lock_flag = 0;  // 1 when the last run is still open at depth D

    int flippable() const { return static_cast<int>(excursions.size()) - lock_flag; }
};

// Lexicographically largest nonnegative path of depth D ending at kstar.
// Throws out_of_range unless 0 <= kstar <= D.
position_seq max_seed_path(int depth, int kstar);

// Immediate lexicographic predecessor among the nonnegative paths with the
// same length and terminal, or nullopt at the minimum (0,...,0,1,...,kstar).
// Throws invalid_path if current is not a valid nonnegative path.
std::optional<position_seq> next_path(const position_seq& current);

// Throws negative_input.
excursion_decomposition decompose_excursions(const position_seq& seq);

// All sign flips of the unlocked excursions of a nonnegative path. Subsets
// are visited in lexicographic order of their sorted index lists, starting
// with the empty set.
class flip_family {
public:
    explicit flip_family(position_seq seq);

    std::optional<position_seq> next();

    const excursion_decomposition& decomposition() const { return dec_; }
    // 2^(M - lock_flag)
    unsigned long long size() const { return 1ull << dec_.flippable(); }

private:
    position_seq base_;
    excursion_decomposition dec_;
    std::vector<int> subset_;  // 1-based excursion indices, increasing
    bool started_ = false;
    bool done_ = false;
};

std::vector<position_seq> collect_flips(const position_seq& seq);

// Every path of depth D ending at kstar, exactly once. Negative terminals run
// the positive pipeline on -kstar and reflect each output.
class all_paths {
public:
    all_paths(int depth, int kstar, int cap = default_depth_cap);

    std::optional<position_seq> next();

    // Nonnegative representatives consumed so far.
    long long representatives() const { return reps_; }

private:
    bool negate_;
    std::optional<position_seq> rep_;
    std::optional<flip_family> flips_;
    long long reps_ = 0;
};

std::vector<position_seq> enumerate_all(int depth, int kstar, int cap = default_depth_cap);

}  // namespace tritree
