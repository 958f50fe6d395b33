#pragma once

/// @file paths.hpp
/// @brief Lattice paths of types A and B, their corners, monomials and
///        weights, and the strictly-above relation.
///
/// Type A paths live on columns 0..m with unit steps. Type B paths
/// consist of two branches meeting at x = 2n-1, where the end levels
/// carry a symbolic infinitesimal so that the two branch tips never
/// collide; EpsInt keeps that arithmetic exact.

#include <compare>
#include <utility>
#include <vector>

#include "snakechar/lattice.hpp"
#include "snakechar/monomial.hpp"

namespace snakechar {

/// Value a + b*eps with b in {-1,0,+1} and eps any fixed real in
/// (0, 1/2). The lexicographic order on (a, b) is the true numeric order
/// for every such eps.
struct EpsInt {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const EpsInt&, const EpsInt&) = default;
};

/// floor((v + c) / 2) computed exactly from the sign of the eps part.
int floor_half(EpsInt v, int c);

/// Type A path on columns 0..m: points (r, ys[r]) with |ys[r+1]-ys[r]| = 1,
/// ys[0] = i+k and ys[m] = m-i+k. The boundary indices i = 0 and i = m are
/// allowed; each carries exactly one monotone path.
struct PathA {
    int m = 0;
    int i = 0;
    int k = 0;
    std::vector<int> ys;

    friend auto operator<=>(const PathA&, const PathA&) = default;
};

/// Type B_n path stored as two branches of length n+1 each. ys[j] sits at
/// x = 2j for j < n and ys[n] at x = 2n-1; zs[j] sits at x = 4n-2-2j for
/// j < n and zs[n] at x = 2n-1. Entries below index n are even integers
/// with steps of two, the final step of each branch has size 1+eps, and
/// ys[n] > zs[n].
struct PathB {
    int n = 0;
    int i = 0;
    int k = 0;
    std::vector<EpsInt> ys;
    std::vector<EpsInt> zs;

    friend auto operator<=>(const PathB&, const PathB&) = default;
};

/// Throws std::invalid_argument when any structural invariant fails.
void validate_path(const PathA& p);
void validate_path(const PathB& p);

/// Corner position: column index j together with the level.
struct Corner {
    int j = 0;
    int level = 0;

    friend auto operator<=>(const Corner&, const Corner&) = default;
};

/// Upper corners (plus) and lower corners (minus), each sorted by
/// (j, level).
struct Corners {
    std::vector<Corner> plus;
    std::vector<Corner> minus;

    friend bool operator==(const Corners&, const Corners&) = default;
};

/// All type A paths for the given column count and anchor, in
/// lexicographic order of ys. Throws when i is out of range.
std::vector<PathA> enum_paths_A(int m, int i, int k);

/// All type B_n paths with anchor (i, k), in lexicographic order of
/// (ys, zs). Throws when i is out of range or k violates the parity
/// k = 2n+2i+2 (mod 4).
std::vector<PathB> enum_paths_B(int n, int i, int k);

/// Point map from (j, level) pairs, j in 0..n, to figure coordinates
/// (x, y): j < n goes to x = 2j or x = 4n-2-2j depending on the level
/// mod 4, and j = n to x = 2n-1. Throws on parity violations.
std::pair<int, int> tau(int n, int j, int level);

/// Inverse of tau; throws when (x, y) is not in the image.
std::pair<int, int> tau_inv(int n, int x, int y);

/// Type A corners: an interior vertex with both neighbors one step above
/// is an upper corner, one with both neighbors below is a lower corner.
Corners corners_A(const PathA& p);

/// Type B corners: strict interior extrema of both branches pulled back
/// through tau_inv, plus the index-n rule that reads off which of the two
/// levels level+-eps lie on the path at x = 2n-1.
Corners corners_B(const PathB& p);

/// Product of Y_{j,q^level} over upper corners and Y_{j,q^level}^{-1}
/// over lower corners.
YMonomial monomial_of_path(const PathA& p);
YMonomial monomial_of_path(const PathB& p);

/// Sum of +w_j over upper corners and -w_j over lower corners; type A
/// paths give Family::A weights of rank m-1, type B paths Family::B
/// weights of rank n.
Weight weight_of_path(const PathA& p);
Weight weight_of_path(const PathB& p);

/// +1 when the path ends with a downward step into its last column,
/// -1 when it ends with an upward step.
int half_char_at_n(const PathA& p);

/// True iff p lies strictly above q: at every shared x-coordinate every
/// level of p is smaller than every level of q. Throws when the shapes
/// are incompatible.
bool strictly_above(const PathA& p, const PathA& q);
bool strictly_above(const PathB& p, const PathB& q);

}  // namespace snakechar
