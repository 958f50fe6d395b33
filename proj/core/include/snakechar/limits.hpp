#pragma once

/// @file limits.hpp
/// @brief Resource caps shared by all enumeration and verification routines.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace snakechar {

/// Thrown when an enumeration would exceed the configured tuple cap.
/// Nothing is truncated silently; the caller either raises the cap or
/// shrinks the problem.
class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Knobs plumbed through every potentially expensive operation.
/// threads == 0 selects the hardware concurrency.
struct Limits {
    std::uint64_t max_tuples = 10'000'000;
    int threads = 0;
};

/// Limits with max_tuples overridden by the SNAKECHAR_MAX_TUPLES
/// environment variable when it is set to a positive integer.
Limits limits_from_env();

}  // namespace snakechar
