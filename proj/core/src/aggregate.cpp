#include "tritree/aggregate.hpp"

#include <cstdlib>
#include <vector>

#include "tritree/errors.hpp"

namespace tritree {

big_int value_distribution::total() const {
    big_int t = 0;
    for (const auto& [v, n] : entries) t += n;
    return t;
}

big_int value_distribution::count_at(std::int64_t scaled_value) const {
    auto it = entries.find(scaled_value);
    return it == entries.end() ? big_int(0) : it->second;
}

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw out_of_range("path sum overflows fixed point");
    return r;
}

}  // namespace

value_distribution path_sum_distribution(int depth, int kstar, const weight_table& w) {
    if (depth < 0 || std::abs(kstar) > depth) throw out_of_range("terminal unreachable at this depth");
    using cell = std::map<std::int64_t, big_int>;
    const int width = 2 * depth + 1;
    std::vector<cell> layer(width), next(width);
    layer[depth][w.scaled(0)] = 1;
    for (int d = 1; d <= depth; ++d) {
        for (auto& c : next) c.clear();
        const int remaining = depth - d;
        for (int idx = 0; idx < width; ++idx) {
            if (layer[idx].empty()) continue;
            int level = idx - depth;
            for (int s = -1; s <= 1; ++s) {
                int to = level + s;
                if (!reachable(to, kstar, remaining)) continue;
                std::int64_t wt = w.scaled(to);
                cell& dst = next[to + depth];
                for (const auto& [v, n] : layer[idx]) dst[add_checked(v, wt)] += n;
            }
        }
        std::swap(layer, next);
    }
    value_distribution out;
    out.scale = w.scale();
    out.entries = std::move(layer[kstar + depth]);
    return out;
}

double lebesgue_average(const value_distribution& dist) {
    big_int num = 0, den = 0;
    for (const auto& [v, n] : dist.entries) {
        num += big_int(v) * n;
        den += n;
    }
    if (den == 0) throw empty_terminal("no path reaches the terminal");
    big_int scale = 1;
    for (int i = 0; i < dist.scale; ++i) scale *= 10;
    boost::multiprecision::cpp_rational q(num, den * scale);
    return q.convert_to<double>();
}

double lebesgue_average(int depth, int kstar, const weight_table& w) {
    return lebesgue_average(path_sum_distribution(depth, kstar, w));
}

value_distribution class_aggregate(const class_table& classes, const weight_table& w) {
    value_distribution out;
    out.scale = w.scale();
    for (const auto& [key, mult] : classes) out.entries[weighted_sum_scaled(key, w)] += mult;
    return out;
}

value_distribution brute_force_distribution(int depth, int kstar, const weight_table& w, int cap) {
    value_distribution out;
    out.scale = w.scale();
    dfs_enumerate(
        depth, kstar,
        [&](const position_seq& p) {
            std::int64_t sum = 0;
            for (int k : p) sum = add_checked(sum, w.scaled(k));
            out.entries[sum] += 1;
        },
        cap);
    return out;
}

}  // namespace tritree
