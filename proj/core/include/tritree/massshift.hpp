#pragma once

#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "tritree/bigint.hpp"
#include "tritree/cardinality.hpp"
#include "tritree/lattice.hpp"

namespace tritree {

// C(mass + slots - 1, slots - 1). Throws out_of_range for mass < 0 or slots < 1.
big_int weak_composition_count(int mass, int slots);

// Walks the weak compositions of `mass` over `slots` positions in a mixed
// lexicographic order. `priority` lists the positions from most to least
// significant; an ascending position starts at 0 and grows, a descending one
// starts with all remaining mass and shrinks. No recursion, O(slots) per step.
class composition_cursor {
public:
    enum class direction { ascending, descending };

    composition_cursor(int mass, int slots, std::vector<std::pair<int, direction>> priority);

    const std::vector<int>& current() const { return values_; }
    bool valid() const { return !done_; }
    // Moves to the next composition; false once exhausted.
    bool advance();

private:
    void fill_from(std::size_t j, int remaining);

    std::vector<std::pair<int, direction>> priority_;
    std::vector<int> values_;
    int mass_;
    bool done_ = false;
};

// Rightmost-mass-first sweep: (0,..,0,i), (0,..,1,i-1), ... , (i,0,..,0).
class weak_compositions {
public:
    weak_compositions(int mass, int slots);
    std::optional<std::vector<int>> next();

private:
    composition_cursor cursor_;
    bool first_ = true;
};

std::vector<std::vector<int>> enumerate_weak_compositions(int mass, int slots);

enum class count_engine { table, closed };

// Row schedule for the positive-side composition table. ceil_rows uses
// ell - ceil((i+1)/2) slots at mass i > 0, floor_rows uses ell - floor((i+1)/2).
enum class row_schedule { ceil_rows, floor_rows };

int table_slots(int mass, int ell, row_schedule rows);
big_int table_row(int mass, int ell, row_schedule rows);
// Closed-form summand with the global (beta - 1) toggle.
big_int closed_row(int mass, int ell, beta_tag beta);

// Cursor of the stage-wise enumerator. The seed lives on the active window
// [-M, k_plus - M]; levels refer to the reflected problem when kstar < 0.
struct stage_state {
    int depth = 0;
    int kstar = 0;      // as requested, may be negative
    int k_abs = 0;      // |kstar|, the terminal the positive pipeline works on
    int M = 0;
    int window_left = 0;
    int window_right = 0;
    cardinality_tuple seed;
    int m = 0;
    int kstar_geo = 0;  // k_abs + M, terminal index inside the window
    int k_eff = 0;      // k_abs + 2M, sets the remaining mass horizon
    beta_tag beta;
    int ell = 0;        // k_plus + 1
    int T = 0;          // last stage index
    row_schedule rows = row_schedule::ceil_rows;

    int m_max() const { return depth - k_eff; }
    bounds_t bounds() const { return position_bounds(depth, k_abs); }
    // Seed on the full [k_minus, k_plus] range.
    cardinality_tuple full_seed() const { return reframe(seed, bounds()); }
};

// Stage 0 for (D, kstar). Throws out_of_range if |kstar| > D.
stage_state initial_stage(int depth, int kstar);

// Largest tuple of stage M under the mixed order, built directly from the
// minimum profile. Used to cross-check shift_reseed.
cardinality_tuple stage_max_tuple(int depth, int k_abs, int M);

// Consumes the right-edge mass of the seed, opens one more negative level and
// returns the next stage; nullopt once M == T.
std::optional<stage_state> shift_reseed(const stage_state& state);

// Sum of the composition rows i = 0..min(m_max, horizon).
big_int stage_count(const stage_state& state, count_engine engine = count_engine::table,
                    std::optional<int> horizon = std::nullopt);

struct discrepancy {
    int depth = 0;
    int kstar = 0;
    int M = 0;
    int i = 0;
    big_int table;
    big_int closed;
};

struct count_report {
    int depth = 0;
    int kstar = 0;
    count_engine engine = count_engine::table;
    std::vector<std::pair<int, big_int>> per_stage;
    big_int total;
    bool oracle_checked = false;
    bool oracle_match = false;
    std::vector<discrepancy> discrepancies;
};

// Throws out_of_range.
count_report count_total(int depth, int kstar, count_engine engine = count_engine::table);

// count_total plus a comparison with the oracle class count when D <= cap.
count_report count_total_checked(int depth, int kstar, count_engine engine = count_engine::table,
                                 int oracle_cap = 14);

struct unique_record {
    cardinality_tuple tuple;  // full [k_minus, k_plus] support
    int stage = 0;
    int m = 0;
};

// Every cardinality tuple of (D, kstar) exactly once. Stages run in increasing
// M; inside a stage the tuples come out in strictly decreasing mixed order
// (for kstar < 0, the mirror of that order).
class unique_tuples {
public:
    unique_tuples(int depth, int kstar, int cap = default_depth_cap);

    std::optional<unique_record> next();

    // State of the stage that produced the last record.
    const stage_state& state() const { return state_; }
    // Tuples dropped by the validity safety net. Expected to stay at zero.
    long long rejects() const { return rejects_; }
    // Largest number of live blocks seen, for memory estimates.
    std::size_t peak_blocks() const { return peak_blocks_; }

private:
    struct block {
        std::vector<int> base;  // local window counts
        composition_cursor cursor;
        int m;
        std::vector<int> current_local() const;
    };
    struct heap_item {
        cardinality_tuple tuple;
        std::size_t block;
    };
    struct heap_less {
        bool operator()(const heap_item& a, const heap_item& b) const;
    };

    void open_stage();
    cardinality_tuple to_full(const std::vector<int>& local) const;

    stage_state state_;
    bool done_ = false;
    std::vector<block> blocks_;
    std::priority_queue<heap_item, std::vector<heap_item>, heap_less> heap_;
    long long rejects_ = 0;
    std::size_t peak_blocks_ = 0;
};

std::vector<unique_record> enumerate_unique(int depth, int kstar, int cap = default_depth_cap);

}  // namespace tritree
