#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

namespace tritree {

// Level weights held as exact decimal fixed point so that path sums can be
// used as map keys. Inputs with more than max_scale fractional digits are
// rounded half away from zero.
class weight_table {
public:
    static constexpr int max_scale = 9;

    weight_table() = default;

    // w_k = base + step * k for k in [-depth, depth].
    static weight_table affine(std::string_view base, std::string_view step, int depth);
    static weight_table affine(double base, double step, int depth);

    // CSV with a `level,weight` header.
    static weight_table from_csv(std::istream& in);
    static weight_table from_csv_file(const std::string& path);

    static weight_table from_map(const std::map<int, double>& w);

    void set(int level, std::string_view decimal);
    void set(int level, double value);

    bool contains(int level) const { return entries_.count(level) != 0; }
    std::size_t size() const { return entries_.size(); }

    // Throws missing_weight.
    double weight(int level) const;

    // weight(level) * 10^scale(), exact.
    std::int64_t scaled(int level) const;

    int scale() const { return scale_; }

    // Render a scaled value as a plain decimal string.
    std::string format(std::int64_t scaled_value) const;
    double to_double(std::int64_t scaled_value) const;

private:
    struct decimal {
        std::int64_t mantissa = 0;
        int digits = 0;
    };
    static decimal parse(std::string_view text);

    std::map<int, decimal> entries_;
    int scale_ = 0;
};

}  // namespace tritree
