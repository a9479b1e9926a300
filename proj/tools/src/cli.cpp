#include "tritree/tools/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tritree/aggregate.hpp"
#include "tritree/errors.hpp"
#include "tritree/lexgen.hpp"
#include "tritree/massshift.hpp"
#include "tritree/oracle.hpp"
#include "tritree/tools/bench.hpp"
#include "tritree/tools/selfcheck.hpp"

namespace tritree::tools {

namespace {

using json = nlohmann::json;

constexpr std::size_t distinct_value_warning = 1'000'000;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct common_opts {
    int depth = 0;
    int terminal = 0;
    std::string engine;
    std::string format;
    std::string out_path;
    bool seed_order = false;
    bool no_timing = false;
    int cap = default_depth_cap;
    int oracle_cap = default_oracle_cap;
};

json count_json(const big_int& v) {
    if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return to_decimal(v);
}

json tuple_record(const unique_record& r) {
    return {{"k_minus", r.tuple.k_minus}, {"counts", r.tuple.counts}, {"stage", r.stage}, {"m", r.m}};
}

std::string engine_name(count_engine e) { return e == count_engine::table ? "table" : "closed"; }

json count_record(const count_report& r) {
    json per_stage = json::array();
    for (const auto& [M, c] : r.per_stage) per_stage.push_back({M, to_decimal(c)});
    json disc = json::array();
    for (const auto& d : r.discrepancies)
        disc.push_back({{"M", d.M}, {"i", d.i}, {"table", to_decimal(d.table)}, {"closed", to_decimal(d.closed)}});
    json j = {{"D", r.depth},         {"kstar", r.kstar},           {"per_stage", per_stage},
              {"total", to_decimal(r.total)}, {"engine", engine_name(r.engine)}, {"discrepancies", disc},
              {"oracle_checked", r.oracle_checked}};
    if (r.oracle_checked) j["oracle_match"] = r.oracle_match;
    return j;
}

void csv_path(std::ostream& out, const position_seq& p) {
    for (std::size_t d = 0; d < p.size(); ++d) out << (d ? "," : "") << p[d];
    out << '\n';
}

class subcommand_runner {
public:
    subcommand_runner(std::ostream& out, std::ostream& err) : stdout_(out), err_(err) {}

    std::ostream& sink(const common_opts& o) {
        if (o.out_path.empty()) return stdout_;
        file_ = std::make_unique<std::ofstream>(o.out_path);
        if (!*file_) throw tritree::error("cannot open output file '" + o.out_path + "'");
        return *file_;
    }

    std::ostream& err() { return err_; }

private:
    std::ostream& stdout_;
    std::ostream& err_;
    std::unique_ptr<std::ofstream> file_;
};

void check_terminal(const common_opts& o) {
    if (o.depth < 0) throw usage_error("--depth must be non-negative");
    if (std::abs(o.terminal) > o.depth) throw usage_error("|--terminal| must not exceed --depth");
}

// enumerate ------------------------------------------------------------------

void run_enumerate(const common_opts& o, subcommand_runner& io) {
    check_terminal(o);
    std::string engine = o.engine.empty() ? "unique" : o.engine;
    std::string format = o.format.empty() ? "jsonl" : o.format;
    std::ostream& out = io.sink(o);

    if (engine == "unique") {
        unique_tuples gen(o.depth, o.terminal, o.cap);
        json all = json::array();
        if (format == "csv") {
            bounds_t b = position_bounds(o.depth, o.terminal);
            out << "stage,m,k_minus";
            for (int k = b.k_minus; k <= b.k_plus; ++k) out << ",c_" << k;
            out << '\n';
        }
        int last_stage = -1;
        while (auto r = gen.next()) {
            if (o.seed_order && r->stage != last_stage) {
                const stage_state& s = gen.state();
                io.err() << "stage " << s.M << " seed " << encode(s.full_seed()) << " window [" << s.window_left
                         << "," << s.window_right << "] kstar_geo " << s.kstar_geo << " k_eff " << s.k_eff
                         << " m_max " << s.m_max() << '\n';
                last_stage = r->stage;
            }
            if (format == "jsonl") {
                out << tuple_record(*r).dump() << '\n';
            } else if (format == "json") {
                all.push_back(tuple_record(*r));
            } else {
                out << r->stage << ',' << r->m << ',' << r->tuple.k_minus;
                for (int c : r->tuple.counts) out << ',' << c;
                out << '\n';
            }
        }
        if (gen.rejects() != 0) throw tritree::error("unique enumeration rejected " + std::to_string(gen.rejects()) + " tuples");
        if (format == "json")
            out << json{{"D", o.depth}, {"kstar", o.terminal}, {"engine", engine}, {"tuples", all}}.dump() << '\n';
        return;
    }

    json all = json::array();
    if (format == "csv") {
        for (int d = 0; d <= o.depth; ++d) out << (d ? "," : "") << "d" << d;
        out << '\n';
    }
    auto emit = [&](const position_seq& p) {
        if (format == "jsonl")
            out << json{{"positions", p}}.dump() << '\n';
        else if (format == "json")
            all.push_back(p);
        else
            csv_path(out, p);
    };
    if (engine == "dfs") {
        dfs_enumerate(o.depth, o.terminal, emit, o.oracle_cap);
    } else if (engine == "memo") {
        dfs_enumerate_memo(o.depth, o.terminal, emit, o.oracle_cap);
    } else {
        all_paths gen(o.depth, o.terminal, o.cap);
        while (auto p = gen.next()) emit(*p);
    }
    if (format == "json")
        out << json{{"D", o.depth}, {"kstar", o.terminal}, {"engine", engine}, {"paths", all}}.dump() << '\n';
}

// count ----------------------------------------------------------------------

void run_count(const common_opts& o, bool verify, subcommand_runner& io) {
    check_terminal(o);
    count_engine engine = o.engine == "closed" ? count_engine::closed : count_engine::table;
    auto t0 = std::chrono::steady_clock::now();
    count_report r = verify ? count_total_checked(o.depth, o.terminal, engine, o.oracle_cap)
                            : count_total(o.depth, o.terminal, engine);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::ostream& out = io.sink(o);
    if (o.format == "csv") {
        out << "M,count\n";
        for (const auto& [M, c] : r.per_stage) out << M << ',' << to_decimal(c) << '\n';
        return;
    }
    json j = count_record(r);
    if (!o.no_timing) j["elapsed_ms"] = ms;
    out << j.dump() << '\n';
    if (verify && r.oracle_checked && !r.oracle_match) throw tritree::error("count disagrees with the oracle");
}

// aggregate ------------------------------------------------------------------

void run_aggregate(const common_opts& o, const std::string& weights_path, const std::optional<std::string>& base,
                   const std::optional<std::string>& step, subcommand_runner& io) {
    check_terminal(o);
    weight_table w;
    if (!weights_path.empty()) {
        if (base || step) throw usage_error("use either --weights or --weight-base/--weight-step");
        w = weight_table::from_csv_file(weights_path);
    } else {
        if (!base || !step) throw usage_error("aggregate needs --weights or both --weight-base and --weight-step");
        w = weight_table::affine(*base, *step, o.depth);
    }
    std::string engine = o.engine.empty() ? "dp" : o.engine;
    auto t0 = std::chrono::steady_clock::now();
    value_distribution dist;
    if (engine == "dp") {
        dist = path_sum_distribution(o.depth, o.terminal, w);
    } else if (engine == "unique") {
        dist = class_aggregate(oracle_classes(o.depth, o.terminal, o.oracle_cap), w);
    } else if (engine == "dfs") {
        dist = brute_force_distribution(o.depth, o.terminal, w, o.oracle_cap);
    } else {
        dist.scale = w.scale();
        auto add = [&](const position_seq& p) {
            std::int64_t s = 0;
            for (int k : p) s += w.scaled(k);
            dist.entries[s] += 1;
        };
        if (engine == "memo") {
            dfs_enumerate_memo(o.depth, o.terminal, add, o.oracle_cap);
        } else {
            all_paths gen(o.depth, o.terminal, o.cap);
            while (auto p = gen.next()) add(*p);
        }
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (dist.entries.size() > distinct_value_warning)
        io.err() << "warning: " << dist.entries.size() << " distinct path-sum values\n";
    std::ostream& out = io.sink(o);
    if (o.format == "csv") {
        out << "value,count\n";
        for (const auto& [v, n] : dist.entries) out << w.format(v) << ',' << to_decimal(n) << '\n';
        return;
    }
    json d = json::object();
    for (const auto& [v, n] : dist.entries) d[w.format(v)] = count_json(n);
    json j = {{"D", o.depth},
              {"kstar", o.terminal},
              {"engine", engine},
              {"paths", count_json(dist.total())},
              {"average", lebesgue_average(dist)},
              {"distribution", d}};
    if (!o.no_timing) j["elapsed_ms"] = ms;
    out << j.dump() << '\n';
}

// bench ----------------------------------------------------------------------

void run_bench_cmd(const common_opts& o, bench_options bo, const std::string& engines, const std::string& policy,
                   subcommand_runner& io) {
    bo.policy = policy == "sweep" ? kstar_policy::sweep : kstar_policy::worst;
    bo.timing = !o.no_timing;
    bo.oracle_cap = o.oracle_cap;
    if (!engines.empty()) {
        bo.engines.clear();
        std::stringstream ss(engines);
        std::string item;
        try {
            while (std::getline(ss, item, ',')) bo.engines.push_back(parse_bench_engine(item));
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }
    }
    bench_result r = run_bench(bo);
    std::ostream& out = io.sink(o);
    json model = {{"gamma", r.model.gamma}, {"rho", r.model.rho}, {"fitted_C", r.model.fitted_C},
                  {"samples", r.model.samples}, {"speedup", r.speedups}};
    if (o.format == "json") {
        json recs = json::array();
        for (const auto& rec : r.records) {
            json x = {{"D", rec.depth},
                      {"kstar", rec.kstar},
                      {"engine", to_string(rec.engine)},
                      {"op_count", to_decimal(rec.op_count)},
                      {"peak_memory_estimate", rec.peak_memory_estimate}};
            if (bo.timing) x["wall_time_ms"] = rec.wall_ms;
            recs.push_back(x);
        }
        out << json{{"records", recs}, {"cost_model", model}}.dump() << '\n';
    } else {
        write_bench_csv(out, r, bo.timing);
        io.err() << "cost_model " << model.dump() << '\n';
    }
}

// selfcheck ------------------------------------------------------------------

bool run_selfcheck(const common_opts& o, int max_depth, subcommand_runner& io) {
    selfcheck_report r = selfcheck(max_depth, o.oracle_cap);
    std::ostream& out = io.sink(o);
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& row : r.rows)
            rows.push_back({{"D", row.depth},
                            {"memo_vs_dfs", row.memo_vs_dfs},
                            {"lexgen_vs_dfs", row.lexgen_vs_dfs},
                            {"unique_vs_oracle", row.unique_vs_oracle},
                            {"table_vs_oracle", row.table_vs_oracle},
                            {"aggregate_engines", row.aggregate_engines},
                            {"symmetry", row.symmetry},
                            {"closed_mismatches", row.closed_mismatches}});
        json ledger = json::array();
        for (const auto& d : r.ledger)
            ledger.push_back({{"D", d.depth}, {"kstar", d.kstar}, {"M", d.M}, {"i", d.i},
                              {"table", to_decimal(d.table)}, {"closed", to_decimal(d.closed)}});
        out << json{{"pass", r.pass()}, {"rows", rows}, {"closed_form_ledger", ledger}}.dump() << '\n';
    } else {
        write_selfcheck_text(out, r);
    }
    return r.pass();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Path enumeration, counting and aggregation on recombining trinomial trees", "tritree"};
    app.require_subcommand(1);

    common_opts o;
    auto add_common = [&](CLI::App* sub, bool needs_terminal) {
        if (needs_terminal) {
            sub->add_option("--depth", o.depth, "Tree depth D")->required();
            sub->add_option("--terminal", o.terminal, "Terminal level k*")->required();
        }
        sub->add_option("--out", o.out_path, "Write output to this file");
        sub->add_flag("--no-timing", o.no_timing, "Omit timing fields");
        sub->add_option("--oracle-cap", o.oracle_cap, "Depth cap for the exhaustive oracle")->check(CLI::NonNegativeNumber);
    };

    auto* en = app.add_subcommand("enumerate", "Stream paths or unique cardinality tuples");
    add_common(en, true);
    en->add_option("--engine", o.engine, "dfs | memo | lexgen | unique")
        ->check(CLI::IsMember({"dfs", "memo", "lexgen", "unique"}));
    en->add_option("--format", o.format, "jsonl | json | csv")->check(CLI::IsMember({"jsonl", "json", "csv"}));
    en->add_flag("--seed-order", o.seed_order, "Print stage seeds and indices to stderr");
    en->add_option("--cap", o.cap, "Depth cap for enumeration")->check(CLI::NonNegativeNumber);

    bool verify = false;
    auto* co = app.add_subcommand("count", "Count unique cardinality tuples");
    add_common(co, true);
    co->add_option("--engine", o.engine, "table | closed")->check(CLI::IsMember({"table", "closed"}));
    co->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    co->add_flag("--verify", verify, "Cross-check against the oracle when D is within its cap");

    std::string weights_path;
    std::optional<std::string> base, step;
    auto* ag = app.add_subcommand("aggregate", "Value distribution and average of weighted path sums");
    add_common(ag, true);
    ag->add_option("--engine", o.engine, "dp (default) | dfs | memo | lexgen | unique")
        ->check(CLI::IsMember({"dp", "dfs", "memo", "lexgen", "unique"}));
    ag->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    ag->add_option("--weights", weights_path, "CSV file with header level,weight");
    ag->add_option("--weight-base", base, "Affine weight base");
    ag->add_option("--weight-step", step, "Affine weight step per level");

    bench_options bo;
    std::string bench_engines, policy = "worst";
    auto* be = app.add_subcommand("bench", "Benchmark engines and fit the cost model");
    add_common(be, false);
    be->add_option("--depth-min", bo.depth_min, "Smallest depth")->check(CLI::NonNegativeNumber);
    be->add_option("--depth-max", bo.depth_max, "Largest depth")->check(CLI::NonNegativeNumber);
    be->add_option("--engine,--engines", bench_engines, "Comma list of dfs,lexgen,unique,count");
    be->add_option("--policy", policy, "worst | sweep")->check(CLI::IsMember({"worst", "sweep"}));
    be->add_option("--enumeration-cap", bo.enumeration_cap, "Depth reach of lexgen and unique");
    be->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    int max_depth = 8;
    auto* sc = app.add_subcommand("selfcheck", "Run the cross-engine equivalence matrix");
    add_common(sc, false);
    sc->add_option("--max-depth,--depth", max_depth, "Largest depth checked")->check(CLI::NonNegativeNumber);
    sc->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    subcommand_runner io(out, err);
    try {
        if (*en) {
            run_enumerate(o, io);
        } else if (*co) {
            run_count(o, verify, io);
        } else if (*ag) {
            run_aggregate(o, weights_path, base, step, io);
        } else if (*be) {
            run_bench_cmd(o, bo, bench_engines, policy, io);
        } else if (*sc) {
            if (!run_selfcheck(o, max_depth, io)) return 1;
        }
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    return run_cli(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace tritree::tools
