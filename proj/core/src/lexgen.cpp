#include "tritree/lexgen.hpp"

#include <cstdlib>
#include <string>

#include "tritree/errors.hpp"

namespace tritree {

position_seq max_seed_path(int depth, int kstar) {
    if (kstar < 0 || kstar > depth) throw out_of_range("max seed path needs 0 <= kstar <= D");
    int peak = (depth + kstar) / 2;
    position_seq out;
    out.reserve(depth + 1);
    for (int k = 0; k <= peak; ++k) out.push_back(k);
    if ((depth - kstar) % 2 == 1) out.push_back(peak);
    for (int k = peak - 1; k >= kstar; --k) out.push_back(k);
    return out;
}

std::optional<position_seq> next_path(const position_seq& current) {
    if (!validate_path(current)) throw invalid_path("next_path: malformed path");
    for (int k : current)
        if (k < 0) throw invalid_path("next_path: path visits a negative level");
    const int depth = depth_of(current);
    const int kstar = current.back();

    // Tick down: rightmost slot that can be lowered by one and still finish.
    int j = depth;
    for (; j >= 1; --j) {
        int v = current[j] - 1;
        if (v >= 0 && std::abs(v - current[j - 1]) <= 1 && reachable(v, kstar, depth - j)) break;
    }
    if (j < 1) return std::nullopt;

    position_seq out = current;
    --out[j];
    // Sweep across: take the highest value that can still reach kstar.
    for (int d = j + 1; d <= depth; ++d) {
        for (int y = out[d - 1] + 1; y >= out[d - 1] - 1; --y) {
            if (y >= 0 && reachable(y, kstar, depth - d)) {
                out[d] = y;
                break;
            }
        }
    }
    return out;
}

excursion_decomposition decompose_excursions(const position_seq& seq) {
    excursion_decomposition dec;
    const int n = static_cast<int>(seq.size());
    for (int d = 0; d < n; ++d) {
        if (seq[d] < 0) throw negative_input("excursions need a nonnegative path");
        if (seq[d] > 0 && d > 0 && seq[d - 1] == 0) dec.excursions.push_back({d - 1, n});
        if (seq[d] == 0 && d > 0 && seq[d - 1] > 0) dec.excursions.back().r = d;
    }
    dec.lock_flag = !dec.excursions.empty() && dec.excursions.back().r == n ? 1 : 0;
    return dec;
}

flip_family::flip_family(position_seq seq) : base_(std::move(seq)), dec_(decompose_excursions(base_)) {}

std::optional<position_seq> flip_family::next() {
    if (done_) return std::nullopt;
    const int n = dec_.flippable();
    if (!started_) {
        started_ = true;
    } else if (subset_.empty()) {
        if (n == 0) {
            done_ = true;
            return std::nullopt;
        }
        subset_.push_back(1);
    } else if (subset_.back() < n) {
        subset_.push_back(subset_.back() + 1);
    } else {
        subset_.pop_back();
        if (subset_.empty()) {
            done_ = true;
            return std::nullopt;
        }
        ++subset_.back();
    }
    position_seq out = base_;
    for (int idx : subset_) {
        const excursion& e = dec_.excursions[idx - 1];
        for (int d = e.l + 1; d < e.r; ++d) out[d] = -out[d];
    }
    return out;
}

std::vector<position_seq> collect_flips(const position_seq& seq) {
    std::vector<position_seq> out;
    flip_family f(seq);
    while (auto p = f.next()) out.push_back(std::move(*p));
    return out;
}

all_paths::all_paths(int depth, int kstar, int cap) : negate_(kstar < 0) {
    if (depth > cap)
        throw depth_cap("depth " + std::to_string(depth) + " exceeds cap " + std::to_string(cap));
    if (depth < 0 || std::abs(kstar) > depth) throw out_of_range("terminal unreachable at this depth");
    rep_ = max_seed_path(depth, std::abs(kstar));
    flips_.emplace(*rep_);
    reps_ = 1;
}

std::optional<position_seq> all_paths::next() {
    while (rep_) {
        if (auto p = flips_->next()) return negate_ ? reflect(*p) : *p;
        rep_ = next_path(*rep_);
        if (rep_) {
            flips_.emplace(*rep_);
            ++reps_;
        }
    }
    return std::nullopt;
}

std::vector<position_seq> enumerate_all(int depth, int kstar, int cap) {
    std::vector<position_seq> out;
    all_paths gen(depth, kstar, cap);
    while (auto p = gen.next()) out.push_back(std::move(*p));
    return out;
}

}  // namespace tritree
