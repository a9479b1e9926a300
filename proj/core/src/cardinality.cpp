#include "tritree/cardinality.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "tritree/errors.hpp"

namespace tritree {

int cardinality_tuple::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

bool cardinality_tuple::has_negative_part() const {
    for (int k = k_minus; k < 0 && k <= k_plus(); ++k)
        if (at(k) != 0) return true;
    return false;
}

beta_tag switching_term(int depth, int kstar) {
    return {((depth + kstar) % 2 + 2) % 2 == 1 ? 1 : 2};
}

cardinality_tuple histogram(const position_seq& seq) {
    if (seq.empty()) return {};
    auto [lo, hi] = std::minmax_element(seq.begin(), seq.end());
    return histogram(seq, {*lo, *hi});
}

cardinality_tuple histogram(const position_seq& seq, bounds_t range) {
    cardinality_tuple t{range.k_minus, std::vector<int>(range.width(), 0)};
    for (int k : seq) {
        if (k < range.k_minus || k > range.k_plus)
            throw out_of_range("level " + std::to_string(k) + " outside histogram range");
        ++t[k];
    }
    return t;
}

cardinality_tuple reframe(const cardinality_tuple& t, bounds_t range) {
    cardinality_tuple out{range.k_minus, std::vector<int>(range.width(), 0)};
    for (int k = t.k_minus; k <= t.k_plus(); ++k) {
        if (t.at(k) == 0) continue;
        if (k < range.k_minus || k > range.k_plus)
            throw out_of_range("level " + std::to_string(k) + " is occupied outside the new range");
        out[k] = t.at(k);
    }
    return out;
}

cardinality_tuple mirror(const cardinality_tuple& t) {
    cardinality_tuple out{-t.k_plus(), t.counts};
    std::reverse(out.counts.begin(), out.counts.end());
    return out;
}

namespace {

void require_same_range(const cardinality_tuple& a, const cardinality_tuple& b) {
    if (a.k_minus != b.k_minus || a.counts.size() != b.counts.size())
        throw index_mismatch("tuples are supported on different ranges: " + encode(a) + " vs " + encode(b));
}

}  // namespace

std::strong_ordering lex_compare_positive(const cardinality_tuple& a, const cardinality_tuple& b) {
    require_same_range(a, b);
    if (a.has_negative_part() || b.has_negative_part())
        throw index_mismatch("positive order needs zero negative part");
    for (int k = a.k_plus(); k >= a.k_minus; --k)
        if (auto c = a.at(k) <=> b.at(k); c != 0) return c;
    return std::strong_ordering::equal;
}

std::strong_ordering lex_compare_mixed(const cardinality_tuple& a, const cardinality_tuple& b) {
    require_same_range(a, b);
    for (int k = -1; k >= a.k_minus; --k)
        if (auto c = b.at(k) <=> a.at(k); c != 0) return c;
    for (int k = a.k_plus(); k >= 0; --k)
        if (auto c = a.at(k) <=> b.at(k); c != 0) return c;
    return std::strong_ordering::equal;
}

std::pair<cardinality_tuple, beta_tag> seed_tuple(int depth, int kstar) {
    if (kstar < 0 || kstar > depth) throw out_of_range("seed tuple needs 0 <= kstar <= D");
    bounds_t b = position_bounds(depth, kstar);
    cardinality_tuple t{b.k_minus, std::vector<int>(b.width(), 0)};
    for (int k = 0; k < kstar; ++k) t[k] = 1;
    for (int k = kstar; k < b.k_plus; ++k) t[k] = 2;
    t[b.k_plus] = (depth - kstar) % 2 == 0 ? 1 : 2;
    return {t, switching_term(depth, kstar)};
}

std::vector<int> minimum_profile(int low, int high, int kstar) {
    // Visits of the route 0 -> low -> high -> kstar, which is the cheapest way
    // to touch both extremes.
    std::vector<int> out;
    out.reserve(high - low + 1);
    if (kstar >= 0) {
        for (int x = low; x <= high; ++x)
            out.push_back((low <= x && x <= 0) + (low < x && x <= high) + (kstar <= x && x < high));
    } else {
        for (int x = low; x <= high; ++x) {
            int y = -x;  // mirrored level
            out.push_back((-high <= y && y <= 0) + (-high < y && y <= -low) + (-kstar <= y && y < -low));
        }
    }
    return out;
}

bool validate_tuple(const cardinality_tuple& t, int depth, int kstar) {
    if (depth < 0 || std::abs(kstar) > depth) return false;
    if (t.total() != depth + 1) return false;
    int low = t.k_plus() + 1, high = t.k_minus - 1;
    for (int k = t.k_minus; k <= t.k_plus(); ++k) {
        if (t.at(k) < 0) return false;
        if (t.at(k) > 0) {
            low = std::min(low, k);
            high = std::max(high, k);
        }
    }
    if (low > std::min(0, kstar) || high < std::max(0, kstar)) return false;
    std::vector<int> need = minimum_profile(low, high, kstar);
    for (int k = low; k <= high; ++k)
        if (t.at(k) < need[k - low]) return false;
    // Any surplus can be absorbed by back-and-forth steps on an adjacent pair,
    // so the pointwise bound plus the mass identity is sufficient.
    return true;
}

std::int64_t weighted_sum_scaled(const cardinality_tuple& t, const weight_table& w) {
    std::int64_t sum = 0;
    for (int k = t.k_minus; k <= t.k_plus(); ++k) {
        int c = t.at(k);
        if (c == 0) continue;
        std::int64_t term;
        if (__builtin_mul_overflow(w.scaled(k), static_cast<std::int64_t>(c), &term) ||
            __builtin_add_overflow(sum, term, &sum))
            throw out_of_range("weighted sum overflows fixed point");
    }
    return sum;
}

double weighted_sum(const cardinality_tuple& t, const weight_table& w) {
    return w.to_double(weighted_sum_scaled(t, w));
}

truncated_tuple truncate(const cardinality_tuple& t) {
    if (t.has_negative_part()) throw nonzero_negative_part("tuple " + encode(t) + " visits negative levels");
    truncated_tuple out;
    for (int k = 0; k <= t.k_plus(); ++k) out.counts.push_back(t.at(k));
    return out;
}

cardinality_tuple untruncate(const truncated_tuple& tt, int k_minus) {
    if (k_minus > 0) throw out_of_range("k_minus must be <= 0");
    cardinality_tuple out{k_minus, std::vector<int>(-k_minus, 0)};
    out.counts.insert(out.counts.end(), tt.counts.begin(), tt.counts.end());
    return out;
}

std::string encode(const cardinality_tuple& t) {
    std::string out = std::to_string(t.k_minus) + ":";
    for (std::size_t i = 0; i < t.counts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t.counts[i]);
    }
    return out;
}

cardinality_tuple decode(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw parse_error("tuple encoding needs 'k_minus:counts'");
    auto read_int = [&](std::string_view s) {
        int v = 0;
        auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
            throw parse_error("bad integer '" + std::string(s) + "' in tuple encoding");
        return v;
    };
    cardinality_tuple t{read_int(text.substr(0, colon)), {}};
    std::string_view rest = text.substr(colon + 1);
    while (true) {
        auto comma = rest.find(',');
        t.counts.push_back(read_int(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return t;
}

std::size_t cardinality_tuple_hash::operator()(const cardinality_tuple& t) const {
    std::size_t h = std::hash<int>{}(t.k_minus);
    for (int c : t.counts) h = h * 1000003u ^ std::hash<int>{}(c);
    return h;
}

}  // namespace tritree
