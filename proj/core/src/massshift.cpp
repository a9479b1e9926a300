#include "tritree/massshift.hpp"

#include <algorithm>
#include <cstdlib>

#include "tritree/errors.hpp"
#include "tritree/oracle.hpp"

namespace tritree {

big_int binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    big_int r = 1;
    for (long long j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

big_int weak_composition_count(int mass, int slots) {
    if (mass < 0 || slots < 1) throw out_of_range("weak compositions need mass >= 0 and slots >= 1");
    return binomial(static_cast<long long>(mass) + slots - 1, slots - 1);
}

// composition_cursor ---------------------------------------------------------

composition_cursor::composition_cursor(int mass, int slots, std::vector<std::pair<int, direction>> priority)
    : priority_(std::move(priority)), values_(slots, 0), mass_(mass) {
    if (mass < 0 || slots < 0) throw out_of_range("composition cursor needs mass >= 0");
    if (priority_.empty()) {
        done_ = mass != 0;
        return;
    }
    fill_from(0, mass);
}

void composition_cursor::fill_from(std::size_t j, int remaining) {
    for (; j + 1 < priority_.size(); ++j) {
        auto [pos, dir] = priority_[j];
        values_[pos] = dir == direction::ascending ? 0 : remaining;
        remaining -= values_[pos];
    }
    values_[priority_.back().first] = remaining;
}

bool composition_cursor::advance() {
    if (done_) return false;
    if (priority_.empty()) {
        done_ = true;
        return false;
    }
    int used = 0;
    for (std::size_t j = 0; j + 1 < priority_.size(); ++j) used += values_[priority_[j].first];
    // Scan from the least significant free position towards the front.
    for (std::size_t jj = priority_.size() - 1; jj-- > 0;) {
        auto [pos, dir] = priority_[jj];
        used -= values_[pos];
        int after = mass_ - used - values_[pos];
        if (dir == direction::ascending && after >= 1) {
            ++values_[pos];
            fill_from(jj + 1, after - 1);
            return true;
        }
        if (dir == direction::descending && values_[pos] >= 1) {
            --values_[pos];
            fill_from(jj + 1, after + 1);
            return true;
        }
    }
    done_ = true;
    return false;
}

namespace {

std::vector<std::pair<int, composition_cursor::direction>> right_to_left(int slots) {
    std::vector<std::pair<int, composition_cursor::direction>> p;
    for (int s = slots - 1; s >= 0; --s) p.emplace_back(s, composition_cursor::direction::descending);
    return p;
}

}  // namespace

weak_compositions::weak_compositions(int mass, int slots) : cursor_(mass, slots, right_to_left(slots)) {
    if (mass < 0 || slots < 1) throw out_of_range("weak compositions need mass >= 0 and slots >= 1");
}

std::optional<std::vector<int>> weak_compositions::next() {
    if (first_) {
        first_ = false;
    } else if (!cursor_.advance()) {
        return std::nullopt;
    }
    if (!cursor_.valid()) return std::nullopt;
    return cursor_.current();
}

std::vector<std::vector<int>> enumerate_weak_compositions(int mass, int slots) {
    std::vector<std::vector<int>> out;
    weak_compositions w(mass, slots);
    while (auto c = w.next()) out.push_back(std::move(*c));
    return out;
}

// counting -------------------------------------------------------------------

int table_slots(int mass, int ell, row_schedule rows) {
    if (mass == 0) return ell;
    int half = rows == row_schedule::ceil_rows ? (mass + 2) / 2 : (mass + 1) / 2;
    return ell - half;
}

big_int table_row(int mass, int ell, row_schedule rows) {
    if (mass == 0) return 1;
    int s = table_slots(mass, ell, rows);
    if (s < 1) return 0;
    return weak_composition_count(mass, s);
}

big_int closed_row(int mass, int ell, beta_tag beta) {
    long long c = (mass + 2) / 2;
    long long n = mass + ell - c - 1;
    big_int r = binomial(n, ell - c - 1);
    if (beta.beta == 2) r += binomial(n, ell - c);
    return r;
}

stage_state initial_stage(int depth, int kstar) {
    if (depth < 0 || std::abs(kstar) > depth) throw out_of_range("terminal unreachable at this depth");
    stage_state s;
    s.depth = depth;
    s.kstar = kstar;
    s.k_abs = std::abs(kstar);
    bounds_t b = position_bounds(depth, s.k_abs);
    s.ell = b.k_plus + 1;
    s.T = std::min(b.k_plus - s.k_abs, -b.k_minus);
    auto [seed, beta] = seed_tuple(depth, s.k_abs);
    s.beta = beta;
    s.rows = seed.at(b.k_plus) == 1 ? row_schedule::ceil_rows : row_schedule::floor_rows;
    s.seed = reframe(seed, {0, b.k_plus});
    s.window_left = 0;
    s.window_right = b.k_plus;
    s.kstar_geo = s.k_abs;
    s.k_eff = s.k_abs;
    return s;
}

cardinality_tuple stage_max_tuple(int depth, int k_abs, int M) {
    bounds_t b = position_bounds(depth, k_abs);
    int best_h = -1, surplus = 0;
    for (int h = k_abs; h <= b.k_plus; ++h) {
        auto need = minimum_profile(-M, h, k_abs);
        int left = depth + 1;
        for (int v : need) left -= v;
        if (left < 0) break;
        best_h = h;
        surplus = left;
    }
    if (best_h < 0) throw out_of_range("stage index beyond the last stage");
    cardinality_tuple t{-M, std::vector<int>(b.k_plus + 1, 0)};
    auto need = minimum_profile(-M, best_h, k_abs);
    for (int x = -M; x <= best_h; ++x) t[x] = need[x + M];
    t[best_h] += surplus;
    return t;
}

std::optional<stage_state> shift_reseed(const stage_state& state) {
    if (state.M >= state.T) return std::nullopt;
    stage_state next = state;
    const std::vector<int>& c = state.seed.counts;
    const int L = static_cast<int>(c.size());
    int beta = c[L - 1];
    int residual = 0;
    std::vector<int> v(L, 0);
    if (beta == 0) {
        for (int j = 1; j < L; ++j) v[j] = c[j - 1];
    } else {
        if (beta == 3 && state.k_abs == 0) {
            beta = 2;
            residual = 1;
        }
        v[0] = 1;
        for (int j = 1; j < L; ++j) v[j] = c[j - 1];
        if (beta == 1) {
            // Lower the new top. Picking the rightmost 2 instead breaks
            // when the terminal is 0: the top then carries 3.
            int top = L - 1;
            while (top > 0 && v[top] == 0) --top;
            --v[top];
        }
        if (L > 1) ++v[1];
        v[L - 1] += residual;
    }
    next.M = state.M + 1;
    next.window_left = state.window_left - 1;
    next.window_right = state.window_right - 1;
    next.seed = {-next.M, std::move(v)};
    next.kstar_geo = state.kstar_geo + 1;
    next.k_eff = state.k_eff + 2;
    next.m = 0;
    return next;
}

big_int stage_count(const stage_state& state, count_engine engine, std::optional<int> horizon) {
    int top = state.m_max();
    if (horizon) top = std::min(top, *horizon);
    big_int sum = 0;
    for (int i = 0; i <= top; ++i)
        sum += engine == count_engine::table ? table_row(i, state.ell, state.rows) : closed_row(i, state.ell, state.beta);
    return sum;
}

count_report count_total(int depth, int kstar, count_engine engine) {
    count_report r;
    r.depth = depth;
    r.kstar = kstar;
    r.engine = engine;
    std::optional<stage_state> s = initial_stage(depth, kstar);
    while (s) {
        big_int c = stage_count(*s, engine);
        r.per_stage.emplace_back(s->M, c);
        r.total += c;
        for (int i = 0; i <= s->m_max(); ++i) {
            big_int t = table_row(i, s->ell, s->rows), f = closed_row(i, s->ell, s->beta);
            if (t != f) r.discrepancies.push_back({depth, kstar, s->M, i, t, f});
        }
        s = shift_reseed(*s);
    }
    return r;
}

count_report count_total_checked(int depth, int kstar, count_engine engine, int oracle_cap) {
    count_report r = count_total(depth, kstar, engine);
    if (depth <= oracle_cap) {
        r.oracle_checked = true;
        r.oracle_match = big_int(oracle_classes(depth, kstar, oracle_cap).size()) == r.total;
    }
    return r;
}

// unique enumeration ---------------------------------------------------------

std::vector<int> unique_tuples::block::current_local() const {
    std::vector<int> out = base;
    const auto& add = cursor.current();
    for (std::size_t j = 0; j < add.size(); ++j) out[j] += add[j];
    return out;
}

bool unique_tuples::heap_less::operator()(const heap_item& a, const heap_item& b) const {
    return lex_compare_mixed(a.tuple, b.tuple) < 0;
}

unique_tuples::unique_tuples(int depth, int kstar, int cap) {
    if (depth > cap)
        throw depth_cap("depth " + std::to_string(depth) + " exceeds cap " + std::to_string(cap));
    state_ = initial_stage(depth, kstar);
    open_stage();
}

cardinality_tuple unique_tuples::to_full(const std::vector<int>& local) const {
    bounds_t b = state_.bounds();
    cardinality_tuple t{b.k_minus, std::vector<int>(b.width(), 0)};
    for (std::size_t j = 0; j < local.size(); ++j) {
        int level = static_cast<int>(j) - state_.M;
        if (local[j] != 0) t[level] = local[j];
    }
    return t;
}

void unique_tuples::open_stage() {
    using dir = composition_cursor::direction;
    blocks_.clear();
    heap_ = {};
    const int M = state_.M;
    std::vector<int> base = state_.seed.counts;
    int t = static_cast<int>(base.size()) - 1;
    while (t > 0 && base[t] == 0) --t;

    for (int i = 0; i <= state_.m_max(); ++i) {
        if (i > 0) {
            --base[t];
            while (t > 0 && base[t] == 0) --t;
        }
        // The top slot may take more mass only while it sits above its own
        // minimum as a top level.
        int level = t - M;
        int top_min = (level <= 0) + (-M < level);
        int slots = t + (base[t] > top_min ? 1 : 0);
        if (i > 0 && slots == 0) continue;
        std::vector<std::pair<int, dir>> priority;
        for (int neg = M - 1; neg >= 0 && neg < slots; --neg) priority.emplace_back(neg, dir::ascending);
        for (int pos = slots - 1; pos >= M; --pos) priority.emplace_back(pos, dir::descending);
        blocks_.push_back({base, composition_cursor(i, static_cast<int>(base.size()), priority), i});
    }
    peak_blocks_ = std::max(peak_blocks_, blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        if (blocks_[b].cursor.valid()) heap_.push({to_full(blocks_[b].current_local()), b});
}

std::optional<unique_record> unique_tuples::next() {
    while (!done_) {
        if (heap_.empty()) {
            auto s = shift_reseed(state_);
            if (!s) {
                done_ = true;
                break;
            }
            state_ = *s;
            open_stage();
            continue;
        }
        heap_item top = heap_.top();
        heap_.pop();
        block& blk = blocks_[top.block];
        state_.m = blk.m;
        if (blk.cursor.advance()) heap_.push({to_full(blk.current_local()), top.block});
        if (!validate_tuple(top.tuple, state_.depth, state_.k_abs)) {
            ++rejects_;
            continue;
        }
        unique_record rec{std::move(top.tuple), state_.M, blk.m};
        if (state_.kstar < 0) rec.tuple = mirror(rec.tuple);
        return rec;
    }
    return std::nullopt;
}

std::vector<unique_record> enumerate_unique(int depth, int kstar, int cap) {
    std::vector<unique_record> out;
    unique_tuples gen(depth, kstar, cap);
    while (auto r = gen.next()) out.push_back(std::move(*r));
    return out;
}

}  // namespace tritree
