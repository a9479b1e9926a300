#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tritree/massshift.hpp"

namespace tritree::tools {

struct selfcheck_row {
    int depth = 0;
    bool memo_vs_dfs = true;
    bool lexgen_vs_dfs = true;
    bool unique_vs_oracle = true;
    bool table_vs_oracle = true;
    bool aggregate_engines = true;
    bool symmetry = true;
    int closed_mismatches = 0;  // (kstar, M, i) cells where the closed form differs

    bool pass() const {
        return memo_vs_dfs && lexgen_vs_dfs && unique_vs_oracle && table_vs_oracle && aggregate_engines && symmetry;
    }
};

struct selfcheck_report {
    std::vector<selfcheck_row> rows;
    std::vector<discrepancy> ledger;  // closed form vs table
    bool pass() const;
};

// Throws depth_cap when max_depth exceeds the oracle cap.
selfcheck_report selfcheck(int max_depth, int oracle_cap = 14);

void write_selfcheck_text(std::ostream& out, const selfcheck_report& r);

}  // namespace tritree::tools
