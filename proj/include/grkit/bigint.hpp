#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace grkit {

// Exact arithmetic only: formula values reach 17^20 and beyond.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Library-wide contract violation (bad arguments, malformed input, ...).
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Int ipow(int base, int exp) {
    if (exp < 0) throw error("ipow: negative exponent");
    Int r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// base^exp as an exact rational; exp may be negative.
inline Rat rpow(int base, int exp) {
    if (exp >= 0) return Rat(ipow(base, exp));
    return Rat(1, ipow(base, -exp));
}

inline Int floor_rat(const Rat& q) {
    Int n = boost::multiprecision::numerator(q);
    Int d = boost::multiprecision::denominator(q);  // > 0, normalized
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

}  // namespace grkit
