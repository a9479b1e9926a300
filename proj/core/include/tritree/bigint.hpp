#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tritree {

using big_int = boost::multiprecision::cpp_int;

inline std::string to_decimal(const big_int& v) { return v.str(); }

// C(n, k), zero when k < 0, n < 0 or k > n.
big_int binomial(long long n, long long k);

}  // namespace tritree
