#include "tritree/tools/bench.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <stdexcept>

#include "tritree/errors.hpp"
#include "tritree/lexgen.hpp"
#include "tritree/massshift.hpp"

namespace tritree::tools {

std::string to_string(bench_engine e) {
    switch (e) {
        case bench_engine::dfs: return "dfs";
        case bench_engine::lexgen: return "lexgen";
        case bench_engine::unique: return "unique";
        case bench_engine::count: return "count";
    }
    return "?";
}

bench_engine parse_bench_engine(const std::string& name) {
    if (name == "dfs") return bench_engine::dfs;
    if (name == "lexgen") return bench_engine::lexgen;
    if (name == "unique") return bench_engine::unique;
    if (name == "count") return bench_engine::count;
    throw std::invalid_argument("unknown bench engine '" + name + "'");
}

namespace {

bench_record measure(bench_engine engine, int depth, int kstar) {
    using clock = std::chrono::steady_clock;
    bench_record rec;
    rec.depth = depth;
    rec.kstar = kstar;
    rec.engine = engine;
    auto t0 = clock::now();
    switch (engine) {
        case bench_engine::dfs: {
            unsigned long long n = 0;
            dfs_enumerate(depth, kstar, [&](const position_seq&) { ++n; });
            rec.op_count = n;
            // one frame and one path slot per level of recursion
            rec.peak_memory_estimate = static_cast<std::size_t>(depth + 1) * (sizeof(int) + 64);
            break;
        }
        case bench_engine::lexgen: {
            unsigned long long n = 0;
            all_paths gen(depth, kstar);
            while (gen.next()) ++n;
            rec.op_count = n;
            rec.peak_memory_estimate = static_cast<std::size_t>(depth + 1) * sizeof(int) * 4;
            break;
        }
        case bench_engine::unique: {
            unsigned long long n = 0;
            unique_tuples gen(depth, kstar);
            while (gen.next()) ++n;
            rec.op_count = n;
            std::size_t width = position_bounds(depth, kstar).width();
            rec.peak_memory_estimate = gen.peak_blocks() * width * sizeof(int) * 3;
            break;
        }
        case bench_engine::count: {
            count_report r = count_total(depth, kstar);
            rec.op_count = r.total;
            rec.peak_memory_estimate = r.per_stage.size() * (position_bounds(depth, kstar).width() * sizeof(int) + 32);
            break;
        }
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return rec;
}

}  // namespace

bench_result run_bench(const bench_options& opt) {
    if (opt.depth_min < 0 || opt.depth_max < opt.depth_min) throw out_of_range("empty depth range");
    for (bench_engine e : opt.engines) {
        int reach = e == bench_engine::dfs ? opt.oracle_cap
                    : e == bench_engine::count ? opt.depth_max
                                               : opt.enumeration_cap;
        if (opt.depth_max > reach)
            throw engine_unavailable("engine " + to_string(e) + " cannot enumerate depth " +
                                     std::to_string(opt.depth_max) + " (reach " + std::to_string(reach) + ")");
    }
    bench_result res;
    std::map<int, double> unique_peak, count_peak;
    for (int d = opt.depth_min; d <= opt.depth_max; ++d) {
        int lo = opt.policy == kstar_policy::worst ? 0 : -d;
        int hi = opt.policy == kstar_policy::worst ? 0 : d;
        for (int k = lo; k <= hi; ++k) {
            for (bench_engine e : opt.engines) {
                bench_record rec = measure(e, d, k);
                if (!opt.timing) rec.wall_ms = 0;
                double ops = rec.op_count.convert_to<double>();
                if (e == bench_engine::unique) unique_peak[d] = std::max(unique_peak[d], ops);
                if (e == bench_engine::count) count_peak[d] = std::max(count_peak[d], ops);
                res.records.push_back(std::move(rec));
            }
        }
    }
    const auto& peaks = count_peak.empty() ? unique_peak : count_peak;
    res.model = cost_model::standard();
    res.model.fit({peaks.begin(), peaks.end()});
    for (auto [d, n] : peaks) res.speedups.emplace_back(d, speedup(d, n));
    return res;
}

void write_bench_csv(std::ostream& out, const bench_result& r, bool timing) {
    out << "D,kstar,engine,wall_time_ms,op_count,peak_memory_estimate\n";
    for (const auto& rec : r.records) {
        out << rec.depth << ',' << rec.kstar << ',' << to_string(rec.engine) << ',';
        if (timing) out << rec.wall_ms;
        out << ',' << to_decimal(rec.op_count) << ',' << rec.peak_memory_estimate << '\n';
    }
}

}  // namespace tritree::tools
