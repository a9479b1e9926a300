#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "tritree/cardinality.hpp"
#include "tritree/lattice.hpp"

namespace tritree {

inline constexpr int default_oracle_cap = 14;

using path_sink = std::function<void(const position_seq&)>;

// Plain recursive DFS over all 3^D walks, children visited in the order
// -1, 0, +1; paths that end at kstar are handed to the sink as they are found.
// Throws depth_cap above cap and out_of_range for |kstar| > D.
void dfs_enumerate(int depth, int kstar, const path_sink& sink, int cap = default_oracle_cap);

// Same output multiset; a hash table keyed by (level, remaining) remembers
// whether kstar is still reachable so dead subtrees are skipped.
void dfs_enumerate_memo(int depth, int kstar, const path_sink& sink, int cap = default_oracle_cap);

std::vector<position_seq> dfs_collect(int depth, int kstar, int cap = default_oracle_cap);

// Histogram key (on the full [k_minus, k_plus] range) -> number of paths.
using class_table = std::map<cardinality_tuple, std::uint64_t>;

class_table oracle_classes(int depth, int kstar, int cap = default_oracle_cap);

}  // namespace tritree
