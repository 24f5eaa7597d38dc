#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncorder {

/// Arbitrary precision signed integer used for every exact coefficient.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Parses a decimal integer (optional leading '-'). Throws std::invalid_argument.
BigInt parse_bigint(const std::string& text);

}  // namespace ncorder
