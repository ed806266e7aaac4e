#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gbl {

/// Arbitrary-precision signed integer used for every matrix entry and coefficient.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace gbl
