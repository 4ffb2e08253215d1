#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace halg {

// Exact rational numbers. Arbitrary precision: elimination and gcd chains can
// grow intermediate values far past 64 bits even when inputs are tiny.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

} // namespace halg
