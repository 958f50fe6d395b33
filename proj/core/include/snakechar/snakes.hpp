#pragma once

/// @file snakes.hpp
/// @brief Snake positions, non-overlapping path tuples, and the q- and
///        usual characters they generate.

#include <cstddef>
#include <utility>
#include <vector>

#include "snakechar/lattice.hpp"
#include "snakechar/limits.hpp"
#include "snakechar/monomial.hpp"
#include "snakechar/paths.hpp"

namespace snakechar {

/// Snake in type A on columns 0..m: points (i_t, k_t) with
/// k_t - k_{t-1} >= |i_t - i_{t-1}| + 2, all in one parity class
/// k_t - i_t = const (mod 2), and 0 <= i_t <= m.
struct SnakeA {
    int m = 0;
    std::vector<std::pair<int, int>> points;

    friend auto operator<=>(const SnakeA&, const SnakeA&) = default;
};

/// Snake in type B_n: points (i_t, k_t) with 1 <= i_t <= n,
/// k_t = 2n+2i_t+2 (mod 4) and k_t - k_{t-1} >= 2|i_t - i_{t-1}| + 4.
struct SnakeB {
    int n = 0;
    std::vector<std::pair<int, int>> points;

    friend auto operator<=>(const SnakeB&, const SnakeB&) = default;
};

/// Throws std::invalid_argument naming the offending point when the
/// snake conditions fail.
void validate_snake(const SnakeA& s);
void validate_snake(const SnakeB& s);

/// Highest monomial of a snake. Type A: product of Y_{i_t,q^{k_t}},
/// where boundary indices i_t in {0, m} contribute the trivial factor.
/// Type B: Y_{i_t,q^{k_t}} for i_t < n and Y_{n,q^{k_t-1}} Y_{n,q^{k_t+1}}
/// for i_t = n.
YMonomial snake_to_monomial(const SnakeA& s);
YMonomial snake_to_monomial(const SnakeB& s);

/// All index tuples (c_1,..,c_T) such that sets[0][c_1] is strictly above
/// sets[1][c_2] and so on, in lexicographic order. Backtracking prunes on
/// the consecutive pair test, which suffices by transitivity. Throws
/// ResourceLimitError beyond limits.max_tuples and std::invalid_argument
/// on an empty path list.
std::vector<std::vector<std::size_t>> enum_nop_tuples(
    const std::vector<std::vector<PathA>>& sets, const Limits& limits = {});
std::vector<std::vector<std::size_t>> enum_nop_tuples(
    const std::vector<std::vector<PathB>>& sets, const Limits& limits = {});

/// q-character of the snake module: the multiset of products of path
/// monomials over all non-overlapping tuples.
YQChar qchar_snake(const SnakeA& s, const Limits& limits = {});
YQChar qchar_snake(const SnakeB& s, const Limits& limits = {});

/// Usual character: each tuple contributes the sum of its path weights.
/// Results are memoized per translation class of the snake (shifting all
/// k_t by a constant does not change the character).
Character char_snake(const SnakeA& s, const Limits& limits = {});
Character char_snake(const SnakeB& s, const Limits& limits = {});

/// Same as char_snake but bypassing the memo cache; used by regression
/// checks that must recompute both sides of a shift identity.
Character char_snake_fresh(const SnakeA& s, const Limits& limits = {});
Character char_snake_fresh(const SnakeB& s, const Limits& limits = {});

/// Folds a type A monomial of rank 2n-1 into the twisted alphabet:
/// indices i <= n keep their spectral sign, indices i > n map to
/// 2n-i with the sign flipped, and index-n keys are normalized to
/// positive sign.
ZMonomial fold_monomial(int n, const YMonomial& m);

/// Termwise fold of qchar_snake for a type A snake on columns 0..2n with
/// all indices at most n. Throws when some index exceeds n.
ZQChar twisted_qchar_snake(const SnakeA& s, const Limits& limits = {});

}  // namespace snakechar
