#include "tritree/weights.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "tritree/errors.hpp"

namespace tritree {

namespace {

std::int64_t pow10(int n) {
    std::int64_t p = 1;
    while (n-- > 0) p *= 10;
    return p;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw out_of_range("weight magnitude overflows fixed point");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw out_of_range("weight magnitude overflows fixed point");
    return r;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string shortest(double v) {
    if (!std::isfinite(v)) throw parse_error("weight must be finite");
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

}  // namespace

weight_table::decimal weight_table::parse(std::string_view raw) {
    std::string text = trim(raw);
    if (text.empty()) throw parse_error("empty weight");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
    std::string digits;
    int frac = 0;
    bool seen_point = false, seen_digit = false;
    for (; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
            seen_digit = true;
            if (seen_point) ++frac;
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw parse_error("malformed weight '" + text + "'");
    int exponent = 0;
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E') throw parse_error("malformed weight '" + text + "'");
        ++pos;
        auto res = std::from_chars(text.data() + pos, text.data() + text.size(), exponent);
        if (res.ec != std::errc() || res.ptr != text.data() + text.size())
            throw parse_error("malformed weight '" + text + "'");
    }
    // value = digits * 10^(exponent - frac)
    int shift = exponent - frac;
    while (shift > 0) {
        digits.push_back('0');
        --shift;
    }
    int scale = -shift;
    bool round_up = false;
    if (scale > max_scale) {
        int drop = scale - max_scale;
        if (drop > static_cast<int>(digits.size())) {
            digits = "0";
        } else {
            round_up = digits[digits.size() - drop] >= '5';
            digits.erase(digits.size() - static_cast<std::size_t>(drop));
            if (digits.empty()) digits = "0";
        }
        scale = max_scale;
    }
    std::size_t first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    if (digits.size() > 18) throw out_of_range("weight '" + text + "' has too many digits");
    std::int64_t m = std::stoll(digits) + (round_up ? 1 : 0);
    if (negative) m = -m;
    while (scale > 0 && m % 10 == 0) {
        m /= 10;
        --scale;
    }
    return {m, scale};
}

weight_table weight_table::affine(std::string_view base, std::string_view step, int depth) {
    if (depth < 0) throw out_of_range("depth must be non-negative");
    decimal b = parse(base), s = parse(step);
    int scale = std::max(b.digits, s.digits);
    std::int64_t bm = checked_mul(b.mantissa, pow10(scale - b.digits));
    std::int64_t sm = checked_mul(s.mantissa, pow10(scale - s.digits));
    weight_table w;
    for (int k = -depth; k <= depth; ++k) {
        decimal d{checked_add(bm, checked_mul(sm, k)), scale};
        while (d.digits > 0 && d.mantissa % 10 == 0) {
            d.mantissa /= 10;
            --d.digits;
        }
        w.entries_[k] = d;
        w.scale_ = std::max(w.scale_, d.digits);
    }
    return w;
}

weight_table weight_table::affine(double base, double step, int depth) {
    return affine(shortest(base), shortest(step), depth);
}

weight_table weight_table::from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error("weights file is empty");
    std::string header = trim(line);
    if (header != "level,weight") throw parse_error("weights header must be 'level,weight'");
    weight_table w;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw parse_error("line " + std::to_string(lineno) + ": expected 'level,weight'");
        std::string lv = trim(std::string_view(line).substr(0, comma));
        int level = 0;
        auto res = std::from_chars(lv.data(), lv.data() + lv.size(), level);
        if (res.ec != std::errc() || res.ptr != lv.data() + lv.size())
            throw parse_error("line " + std::to_string(lineno) + ": bad level '" + lv + "'");
        if (w.contains(level))
            throw parse_error("line " + std::to_string(lineno) + ": duplicate level " + lv);
        w.set(level, std::string_view(line).substr(comma + 1));
    }
    return w;
}

weight_table weight_table::from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open weights file '" + path + "'");
    return from_csv(in);
}

weight_table weight_table::from_map(const std::map<int, double>& w) {
    weight_table out;
    for (auto [k, v] : w) out.set(k, v);
    return out;
}

void weight_table::set(int level, std::string_view text) {
    decimal d = parse(text);
    entries_[level] = d;
    scale_ = std::max(scale_, d.digits);
}

void weight_table::set(int level, double value) { set(level, shortest(value)); }

double weight_table::weight(int level) const { return to_double(scaled(level)); }

std::int64_t weight_table::scaled(int level) const {
    auto it = entries_.find(level);
    if (it == entries_.end()) throw missing_weight("no weight for level " + std::to_string(level));
    return checked_mul(it->second.mantissa, pow10(scale_ - it->second.digits));
}

std::string weight_table::format(std::int64_t v) const {
    if (scale_ == 0) return std::to_string(v);
    bool negative = v < 0;
    std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    std::string digits = std::to_string(mag);
    while (static_cast<int>(digits.size()) <= scale_) digits.insert(digits.begin(), '0');
    std::string whole = digits.substr(0, digits.size() - scale_);
    std::string frac = digits.substr(digits.size() - scale_);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string out = negative ? "-" : "";
    out += whole;
    if (!frac.empty()) out += "." + frac;
    return out;
}

double weight_table::to_double(std::int64_t v) const {
    return static_cast<double>(v) / static_cast<double>(pow10(scale_));
}

}  // namespace tritree
