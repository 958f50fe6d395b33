#pragma once

/// @file bigint.hpp
/// @brief Arbitrary precision integer type used for all multiplicities.

#include <boost/multiprecision/cpp_int.hpp>

namespace snakechar {

using Int = boost::multiprecision::cpp_int;

}  // namespace snakechar
