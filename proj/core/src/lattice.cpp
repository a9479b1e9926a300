#include "tritree/lattice.hpp"

#include <cstdlib>
#include <string>

#include "tritree/errors.hpp"

namespace tritree {

position_seq walk_to_path(const step_seq& steps) {
    position_seq out;
    out.reserve(steps.size() + 1);
    out.push_back(0);
    for (int s : steps) {
        if (s < -1 || s > 1) throw invalid_path("step " + std::to_string(s) + " is not in {-1,0,1}");
        out.push_back(out.back() + s);
    }
    return out;
}

step_seq path_to_walk(const position_seq& seq) {
    if (seq.empty() || seq[0] != 0) throw invalid_path("path must start at level 0");
    step_seq out;
    out.reserve(seq.size() - 1);
    for (std::size_t d = 1; d < seq.size(); ++d) {
        int s = seq[d] - seq[d - 1];
        if (s < -1 || s > 1)
            throw invalid_path("increment " + std::to_string(s) + " at depth " + std::to_string(d));
        out.push_back(s);
    }
    return out;
}

bounds_t position_bounds(int depth, int kstar) {
    if (depth < 0 || std::abs(kstar) > depth)
        throw out_of_range("terminal " + std::to_string(kstar) + " unreachable at depth " +
                           std::to_string(depth));
    if ((depth - kstar) % 2 == 0) return {(kstar - depth) / 2, (depth + kstar) / 2};
    return {(kstar - depth + 1) / 2, (depth + kstar - 1) / 2};
}

step_counts_t step_counts(const position_seq& seq) {
    step_counts_t c;
    for (std::size_t d = 1; d < seq.size(); ++d) {
        int s = seq[d] - seq[d - 1];
        if (s > 0)
            ++c.j_plus;
        else if (s < 0)
            ++c.j_minus;
        else
            ++c.j_zero;
    }
    return c;
}

position_seq reflect(const position_seq& seq) {
    position_seq out(seq.size());
    for (std::size_t d = 0; d < seq.size(); ++d) out[d] = -seq[d];
    return out;
}

bool validate_path(const std::vector<int>& seq) {
    if (seq.empty() || seq[0] != 0) return false;
    for (std::size_t d = 1; d < seq.size(); ++d) {
        if (std::abs(seq[d] - seq[d - 1]) > 1) return false;
        if (std::abs(seq[d]) > static_cast<int>(d)) return false;
    }
    return true;
}

bool validate_path(const std::vector<int>& seq, int depth, int kstar) {
    return static_cast<int>(seq.size()) == depth + 1 && validate_path(seq) && seq.back() == kstar;
}

}  // namespace tritree
