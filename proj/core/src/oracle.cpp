#include "tritree/oracle.hpp"

#include <cstdlib>
#include <string>
#include <unordered_map>

#include "tritree/errors.hpp"

namespace tritree {

namespace {

void check_args(int depth, int kstar, int cap) {
    if (depth < 0) throw out_of_range("depth must be non-negative");
    if (depth > cap)
        throw depth_cap("depth " + std::to_string(depth) + " exceeds oracle cap " + std::to_string(cap));
    if (std::abs(kstar) > depth) throw out_of_range("terminal unreachable at this depth");
}

void dfs(position_seq& path, int depth, int kstar, const path_sink& sink) {
    if (static_cast<int>(path.size()) == depth + 1) {
        if (path.back() == kstar) sink(path);
        return;
    }
    for (int s = -1; s <= 1; ++s) {
        path.push_back(path.back() + s);
        dfs(path, depth, kstar, sink);
        path.pop_back();
    }
}

struct memo_dfs {
    int depth;
    int kstar;
    const path_sink& sink;
    std::unordered_map<std::int64_t, bool> feasible;

    bool can_finish(int level, int remaining) {
        std::int64_t key = (static_cast<std::int64_t>(level) << 32) | static_cast<std::uint32_t>(remaining);
        auto it = feasible.find(key);
        if (it != feasible.end()) return it->second;
        bool ok = std::abs(level - kstar) <= remaining;
        feasible.emplace(key, ok);
        return ok;
    }

    void run(position_seq& path) {
        int remaining = depth + 1 - static_cast<int>(path.size());
        if (remaining == 0) {
            sink(path);
            return;
        }
        for (int s = -1; s <= 1; ++s) {
            int next = path.back() + s;
            if (!can_finish(next, remaining - 1)) continue;
            path.push_back(next);
            run(path);
            path.pop_back();
        }
    }
};

}  // namespace

void dfs_enumerate(int depth, int kstar, const path_sink& sink, int cap) {
    check_args(depth, kstar, cap);
    position_seq path{0};
    path.reserve(depth + 1);
    dfs(path, depth, kstar, sink);
}

void dfs_enumerate_memo(int depth, int kstar, const path_sink& sink, int cap) {
    check_args(depth, kstar, cap);
    position_seq path{0};
    path.reserve(depth + 1);
    memo_dfs m{depth, kstar, sink, {}};
    if (m.can_finish(0, depth)) m.run(path);
}

std::vector<position_seq> dfs_collect(int depth, int kstar, int cap) {
    std::vector<position_seq> out;
    dfs_enumerate(depth, kstar, [&](const position_seq& p) { out.push_back(p); }, cap);
    return out;
}

class_table oracle_classes(int depth, int kstar, int cap) {
    check_args(depth, kstar, cap);
    bounds_t range = position_bounds(depth, kstar);
    class_table out;
    dfs_enumerate(depth, kstar, [&](const position_seq& p) { ++out[histogram(p, range)]; }, cap);
    return out;
}

}  // namespace tritree
