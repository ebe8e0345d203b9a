#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace klrw {

// Exact coordinates. Denominators grow without bound under repeated
// fresh-gap subdivision, so fixed-width rationals are not an option.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline BigInt rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline std::string rat_str(const Rat& x) {
    if (rat_den(x) == 1) return rat_num(x).str();
    return rat_num(x).str() + "/" + rat_den(x).str();
}

inline double rat_approx(const Rat& x) { return static_cast<double>(x); }

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long long floor_mod(long long a, long long b) { return a - floor_div(a, b) * b; }

// canonical representative in {0,...,m-1}
inline int mod_res(long long a, int m) { return static_cast<int>(floor_mod(a, m)); }

} // namespace klrw
