#pragma once

/// @file duality.hpp
/// @brief The duality machinery between type A and type B: the path maps
///        F, L, R and G, the gap statistic, the branching rule, and the
///        dominance checks for snake and generalized KR characters.

#include <utility>
#include <vector>

#include "snakechar/lattice.hpp"
#include "snakechar/limits.hpp"
#include "snakechar/monomial.hpp"
#include "snakechar/paths.hpp"
#include "snakechar/snakes.hpp"

namespace snakechar {

/// Point map X^A -> X^B on column indices 0..2n: j < n keeps its index at
/// doubled level, j = n lands on the middle column at 2*level-1, and
/// j > n reflects to 2n-j at 2*level-2.
std::pair<int, int> map_f(int n, int j, int level);

/// Doubling map on paths: p on columns 0..2n with index i <= n goes to a
/// type B_n path with anchor (i, 2k). The branch tips receive the
/// +-(1+eps) adjustment that records the step direction at the middle
/// column. Throws when i > n or the column count is odd.
PathB map_F(const PathA& p);

/// Corner set of map_F(p) predicted from the corners of p: off-middle
/// corners push through map_f, a middle upper corner doubles into levels
/// 2l-1 and 2l+1, a middle lower corner into 2l-1 and 2l-3, and a
/// descending pass-through contributes the pair (2l+1 upper, 2l-3 lower).
Corners transport_corners(const PathA& p);

/// Half the floor distance between the two branch tips; a nonnegative
/// integer, zero exactly on the image of map_F.
int gap(const PathB& p);

/// Sum of per-path gaps.
int gap_tuple(const std::vector<PathB>& tuple);

/// Inverse of map_F on gap-0 paths: halved branch levels with the floor
/// correction at the middle column. Throws when gap(p) != 0.
PathA map_F_inv(const PathB& p);

/// Left-branch reading of a type B path as a type A path on columns
/// 0..n, ending at floor((ys[n]+1)/2).
PathA map_L(const PathB& p);

/// Right-branch reading on columns n..2n, stored with columns relabeled
/// to 0..n: starts at floor((zs[n]+3)/2) and continues through
/// (zs[n-1]+2)/2 down to (zs[0]+2)/2.
PathA map_R(const PathB& p);

/// The snake on columns 0..2n with points (i_t, k_t/2); this is where
/// the dual module of a type B snake lives.
SnakeA halved_snake(const SnakeB& s);

/// Highest monomial of the dual module: product of Z_{i_t, q^{k_t/2}}.
ZMonomial dual_monomial(const SnakeB& s);

/// Two sides of a dominance comparison in a common lattice: folded is the
/// side built from the type B snake character, twisted the side built
/// from the twisted dual module, and slack the dominating side minus the
/// dominated one, nonnegative exactly when dominates is true. Each
/// verifier documents which side must dominate.
struct DominanceReport {
    bool dominates = false;
    Character folded;
    Character twisted;
    Character slack;
};

/// Checks that the twisted character of the dual snake module is
/// dominated by the duality image of the type B snake character.
DominanceReport verify_dominance(const SnakeB& s, const Limits& limits = {});

/// Shift tuples (s_1,..,s_T) of the branching rule: 0 <= s_t bounded by
/// i_t + 1 and by the quarter of the coordinate advance from the previous
/// point; the first window is bounded by i_1 + 1 alone. Lexicographic
/// order.
std::vector<std::vector<int>> branch_tuples(const SnakeB& s);

/// Monomial of each shift tuple: product of Z_{i_t - s_t, q^{k_t/2 - s_t}}
/// where factors with index 0 are read as 1. Aligned with branch_tuples.
std::vector<ZMonomial> branch_monomials(const SnakeB& s);

/// Equality report for the branching rule, with the duality image of the
/// type B character on the left and the sum of the dual summand
/// characters on the right.
struct BranchReport {
    bool equal = false;
    Character lhs;
    Character rhs;
};

BranchReport verify_branching(const SnakeB& s, const Limits& limits = {});

/// Twisted q-character assembled from the gap-0 tuples of the type B
/// snake: each tuple is pulled back through map_F_inv and its monomial
/// product folded. Must agree with twisted_qchar_snake(halved_snake(s)).
ZQChar gap0_twisted_qchar(const SnakeB& s, const Limits& limits = {});

/// Splitting map on single type B paths: the left output follows the y
/// branch and the right output the z branch until the crossover column
/// j0 = max{j <= n : ys[j-1] <= zs[j-1] + 2}, after which each output
/// continues on the other branch. The outputs are type A paths on
/// columns 0..2n with indices i and 2n-i.
std::pair<PathA, PathA> map_G(const PathB& p);

/// True iff the weight of p equals the image of the summed weights of
/// map_G(p) under folding followed by the total duality map.
bool verify_G_weight(const PathB& p);

/// q-character of the generalized KR module: the fold of the product of
/// the two type A KR snake q-characters with anchors (i, k) and
/// (2n-i, k), both of length T in steps of two. Throws when i is out of
/// range or T < 1.
ZQChar gkr_qchar(int n, int i, int T, int k, const Limits& limits = {});

/// Checks that the type B KR snake character with points (i, 2k+4t) is
/// dominated by the total duality image of the generalized KR character.
/// Requires k = n+i+1 (mod 2) so that the type B snake exists.
DominanceReport verify_gkr_dominance(int n, int i, int T, int k,
                                     const Limits& limits = {});

}  // namespace snakechar
