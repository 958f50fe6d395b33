#pragma once

// Shared fixture builders for the unit suites.

#include <cstdint>
#include <utility>
#include <vector>

#include "snakechar/lattice.hpp"
#include "snakechar/paths.hpp"

namespace test_helpers {

/// Branch of a type B path: interior levels followed by the tip (a, b).
inline std::vector<snakechar::EpsInt> branch(const std::vector<int>& interior,
                                             int tip_a, int tip_b) {
    std::vector<snakechar::EpsInt> out;
    out.reserve(interior.size() + 1);
    for (int v : interior) out.push_back({v, 0});
    out.push_back({tip_a, tip_b});
    return out;
}

inline snakechar::PathB make_path_b(int n, int i, int k,
                                    const std::vector<int>& ys_interior,
                                    int ytip_a, int ytip_b,
                                    const std::vector<int>& zs_interior,
                                    int ztip_a, int ztip_b) {
    return snakechar::PathB{n, i, k, branch(ys_interior, ytip_a, ytip_b),
                            branch(zs_interior, ztip_a, ztip_b)};
}

inline snakechar::Weight make_weight(snakechar::Family f,
                                     std::vector<std::int64_t> coeffs) {
    return snakechar::Weight(f, std::move(coeffs));
}

/// Character with unit multiplicities from a list of coefficient vectors.
inline snakechar::Character make_character(
    snakechar::Family f, int rank,
    const std::vector<std::vector<std::int64_t>>& weights) {
    snakechar::Character c(f, rank);
    for (const auto& coeffs : weights) c.add(snakechar::Weight(f, coeffs), 1);
    return c;
}

inline long long binomial(int m, int i) {
    if (i < 0 || i > m) return 0;
    long long r = 1;
    for (int t = 1; t <= i; ++t) r = r * (m - i + t) / t;
    return r;
}

}  // namespace test_helpers
