#pragma once

/// @file segments.hpp
/// @brief Multisegment calculus in type A: segment characters W(l,r), the
///        determinant expansion, the two-sided summation identity, and the
///        endpoint-window path sets with their statistics.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "snakechar/lattice.hpp"
#include "snakechar/limits.hpp"
#include "snakechar/paths.hpp"
#include "snakechar/snakes.hpp"

namespace snakechar {

/// Segment [l, r]; the attached module is nontrivial only when
/// 0 <= r-l <= n.
struct Segment {
    int l = 0;
    int r = 0;

    friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// Family of segments over type A rank parameter n (paths run on columns
/// 0..n). Snake validity means l and r strictly increasing with
/// 0 <= r_t - l_t <= n for every t.
struct MultiSegment {
    int n = 0;
    std::vector<Segment> segs;

    friend auto operator<=>(const MultiSegment&, const MultiSegment&) = default;
};

/// True iff ms satisfies the snake conditions above.
bool is_snake_multisegment(const MultiSegment& ms);

/// Throws std::invalid_argument naming the offending segment when ms is
/// not a snake.
void validate_multisegment(const MultiSegment& ms);

/// The snake with points (r_t - l_t, r_t + l_t) on columns 0..n; defined
/// for snake multisegments.
SnakeA multisegment_snake(const MultiSegment& ms);

/// Character W(l, r) of the segment module: the single-segment path
/// character when 0 <= r-l <= n, the zero character otherwise. Boundary
/// widths r-l in {0, n} give the trivial character via the forced
/// monotone path.
Character seg_char(int n, int l, int r, const Limits& limits = {});

/// Recomputes W(l, r) and W(l+m, r+m) without the memo cache and reports
/// whether they agree.
bool seg_char_shift_check(int n, int l, int r, int m, const Limits& limits = {});

/// Leibniz expansion: sum over permutations s of sign(s) times the
/// product of W(l_t, r_{s(t)}). Any multisegment with at least one
/// segment is accepted; the result may be signed.
Character det_char(const MultiSegment& ms, const Limits& limits = {});

/// Both sides of the fixed-M summation identity for a snake
/// multisegment. The left side sums the path characters of [l', r] over
/// l <= l' with l'_t < l_{t+1} and total increase M; the right side sums
/// [l, r'] over r_{t-1} < r'_t <= r_t with total decrease M. Summands
/// that fail the snake width bounds are skipped.
std::pair<Character, Character> identity_sides(const MultiSegment& ms, int M,
                                               const Limits& limits = {});

/// Endpoint anchors for a window-constrained tuple set: column-0 anchors
/// x0 and column-n anchors xn, both strictly increasing, with
/// -n <= xn[t]-x0[t] <= n and x0[t] = xn[t] + n (mod 2).
struct NopSetSpec {
    int n = 0;
    std::vector<int> x0;
    std::vector<int> xn;
    int M = 0;

    friend auto operator<=>(const NopSetSpec&, const NopSetSpec&) = default;
};

/// Which endpoint floats inside its window.
enum class NopSide { SetA, SetB };

void validate_spec(const NopSetSpec& spec);

/// All non-overlapping tuples for the spec. SetA: the t-th left endpoint
/// ranges over ]x0[t-1], x0[t]] with right endpoints pinned at xn and
/// total left deficit 2M. SetB: left endpoints pinned at x0 and the t-th
/// right endpoint ranges over [xn[t], xn[t+1][ with total surplus 2M.
/// The outermost windows are unbounded.
std::vector<std::vector<PathA>> build_nop_set(const NopSetSpec& spec, NopSide side,
                                              const Limits& limits = {});

/// Tuple statistics: total weight (Family::A, rank n-1) and the summed
/// half-character of the last column.
std::pair<Weight, int> tuple_statistics(const std::vector<PathA>& tuple);

/// True iff the multiset of (weight, half-character) statistics over the
/// SetA tuples equals the one over the SetB tuples.
bool ab_statistics_equal(const NopSetSpec& spec, const Limits& limits = {});

/// Random valid spec drawn from snake-shaped anchors; used by the seeded
/// property suites.
NopSetSpec random_nop_spec(std::mt19937_64& rng, int max_T, int max_n, int max_M);

}  // namespace snakechar
