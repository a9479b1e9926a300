#include "tritree/tools/selfcheck.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <set>

#include "tritree/aggregate.hpp"
#include "tritree/errors.hpp"
#include "tritree/lexgen.hpp"
#include "tritree/oracle.hpp"

namespace tritree::tools {

bool selfcheck_report::pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const selfcheck_row& r) { return r.pass(); });
}

namespace {

std::vector<position_seq> sorted(std::vector<position_seq> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

selfcheck_report selfcheck(int max_depth, int oracle_cap) {
    if (max_depth > oracle_cap)
        throw depth_cap("selfcheck depth " + std::to_string(max_depth) + " exceeds oracle cap");
    selfcheck_report rep;
    for (int d = 0; d <= max_depth; ++d) {
        selfcheck_row row;
        row.depth = d;
        weight_table w = weight_table::affine("20", "2", d);
        std::vector<big_int> totals;
        for (int k = -d; k <= d; ++k) {
            auto dfs = sorted(dfs_collect(d, k, oracle_cap));
            std::vector<position_seq> memo;
            dfs_enumerate_memo(d, k, [&](const position_seq& p) { memo.push_back(p); }, oracle_cap);
            row.memo_vs_dfs = row.memo_vs_dfs && sorted(memo) == dfs;
            row.lexgen_vs_dfs = row.lexgen_vs_dfs && sorted(enumerate_all(d, k)) == dfs;

            class_table classes = oracle_classes(d, k, oracle_cap);
            std::set<cardinality_tuple> keys, seen;
            for (const auto& [t, n] : classes) keys.insert(t);
            unique_tuples gen(d, k);
            bool dup = false;
            while (auto r = gen.next()) dup = !seen.insert(r->tuple).second || dup;
            row.unique_vs_oracle = row.unique_vs_oracle && !dup && seen == keys && gen.rejects() == 0;

            count_report c = count_total(d, k);
            row.table_vs_oracle = row.table_vs_oracle && c.total == classes.size();
            row.closed_mismatches += static_cast<int>(c.discrepancies.size());
            rep.ledger.insert(rep.ledger.end(), c.discrepancies.begin(), c.discrepancies.end());
            totals.push_back(c.total);

            value_distribution dp = path_sum_distribution(d, k, w);
            row.aggregate_engines = row.aggregate_engines && dp == class_aggregate(classes, w) &&
                                    dp == brute_force_distribution(d, k, w, oracle_cap);
        }
        // totals[i] holds kstar = i - d
        for (int i = 0; i <= 2 * d; ++i) row.symmetry = row.symmetry && totals[i] == totals[2 * d - i];
        // kstar = 0 can be a local minimum; each half is unimodal on its own
        std::size_t mid = static_cast<std::size_t>(d);
        std::size_t peak = std::max_element(totals.begin() + mid, totals.end()) - totals.begin();
        for (std::size_t i = mid + 1; i < totals.size(); ++i)
            row.symmetry = row.symmetry && (i <= peak ? totals[i - 1] <= totals[i] : totals[i - 1] >= totals[i]);
        row.symmetry = row.symmetry && totals.front() == 1 && totals.back() == 1;
        rep.rows.push_back(row);
    }
    return rep;
}

void write_selfcheck_text(std::ostream& out, const selfcheck_report& r) {
    auto cell = [](bool ok) { return ok ? "pass" : "FAIL"; };
    out << std::left << std::setw(4) << "D" << std::setw(12) << "memo=dfs" << std::setw(12) << "lexgen=dfs"
        << std::setw(15) << "unique=oracle" << std::setw(14) << "table=oracle" << std::setw(11) << "aggregate"
        << std::setw(10) << "symmetry" << "closed!=table\n";
    for (const auto& row : r.rows) {
        out << std::setw(4) << row.depth << std::setw(12) << cell(row.memo_vs_dfs) << std::setw(12)
            << cell(row.lexgen_vs_dfs) << std::setw(15) << cell(row.unique_vs_oracle) << std::setw(14)
            << cell(row.table_vs_oracle) << std::setw(11) << cell(row.aggregate_engines) << std::setw(10)
            << cell(row.symmetry) << row.closed_mismatches << '\n';
    }
    out << "closed-form ledger: " << r.ledger.size() << " cells\n";
    for (const auto& x : r.ledger)
        out << "  D=" << x.depth << " kstar=" << x.kstar << " M=" << x.M << " i=" << x.i
            << " table=" << to_decimal(x.table) << " closed=" << to_decimal(x.closed) << '\n';
    out << (r.pass() ? "selfcheck: pass\n" : "selfcheck: FAIL\n");
}

}  // namespace tritree::tools
