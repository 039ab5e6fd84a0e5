#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sbnet {

// Exact arithmetic throughout: every step function, norm, and discrepancy
// value is an integer or rational; doubles appear only at the output surface.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& z) { return z.convert_to<double>(); }

}  // namespace sbnet
