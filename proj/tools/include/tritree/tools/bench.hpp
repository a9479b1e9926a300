#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "tritree/bigint.hpp"
#include "tritree/oracle.hpp"
#include "tritree/tools/cost_model.hpp"

namespace tritree::tools {

enum class bench_engine { dfs, lexgen, unique, count };
enum class kstar_policy { worst, sweep };

std::string to_string(bench_engine e);
// Throws std::invalid_argument.
bench_engine parse_bench_engine(const std::string& name);

struct bench_record {
    int depth = 0;
    int kstar = 0;
    bench_engine engine = bench_engine::count;
    double wall_ms = 0;
    big_int op_count;  // items emitted, or the computed total for `count`
    std::size_t peak_memory_estimate = 0;
};

struct bench_options {
    int depth_min = 4;
    int depth_max = 12;
    kstar_policy policy = kstar_policy::worst;
    std::vector<bench_engine> engines{bench_engine::dfs, bench_engine::lexgen, bench_engine::unique,
                                      bench_engine::count};
    int oracle_cap = default_oracle_cap;
    int enumeration_cap = 20;  // lexgen and unique
    bool timing = true;
};

struct bench_result {
    std::vector<bench_record> records;
    // Fitted on the per-depth maximum of the unique count (count engine if
    // present, otherwise the unique enumerator).
    cost_model model;
    std::vector<std::pair<int, double>> speedups;
};

// Throws engine_unavailable when an enumerating engine is asked for a depth
// beyond its reach.
bench_result run_bench(const bench_options& opt);

void write_bench_csv(std::ostream& out, const bench_result& r, bool timing);

}  // namespace tritree::tools
