#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "snakechar/paths.hpp"

using namespace snakechar;
using test_helpers::binomial;
using test_helpers::make_path_b;
using test_helpers::make_weight;

namespace {

/// floor((a + b*eps + c) / 2) with eps = num/den, exact integer arithmetic.
int floor_half_rational(int a, int b, int c, int num, int den) {
    const int numerator = den * (a + c) + b * num;
    const int divisor = 2 * den;
    int q = numerator / divisor;
    if (numerator % divisor != 0 && (numerator < 0) != (divisor < 0)) --q;
    return q;
}

/// Independent enumeration of type B paths from raw sign vectors.
std::vector<PathB> brute_paths_b(int n, int i, int k) {
    auto branch_from_mask = [n](int start, unsigned mask) {
        std::vector<EpsInt> br(static_cast<std::size_t>(n) + 1);
        br[0] = {start, 0};
        for (int j = 1; j < n; ++j) {
            const int s = (mask >> (j - 1)) & 1U ? +2 : -2;
            br[static_cast<std::size_t>(j)] = {br[static_cast<std::size_t>(j - 1)].a + s, 0};
        }
        const int tip = (mask >> (n - 1)) & 1U ? +1 : -1;
        br[static_cast<std::size_t>(n)] = {br[static_cast<std::size_t>(n - 1)].a + tip, tip};
        return br;
    };
    std::vector<PathB> out;
    for (unsigned my = 0; my < (1U << n); ++my) {
        for (unsigned mz = 0; mz < (1U << n); ++mz) {
            PathB p{n, i, k, branch_from_mask(2 * i + k, my),
                    branch_from_mask(4 * n - 2 * i + k - 2, mz)};
            if (p.zs.back() < p.ys.back()) out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("paths") {

TEST_CASE("eps values order lexicographically") {
    CHECK(EpsInt{3, -1} < EpsInt{3, 0});
    CHECK(EpsInt{3, 0} < EpsInt{3, 1});
    CHECK(EpsInt{3, 1} < EpsInt{4, -1});
    CHECK(EpsInt{-2, 1} < EpsInt{-1, -1});
    CHECK(EpsInt{5, 0} == EpsInt{5, 0});
}

TEST_CASE("floor_half agrees with rational arithmetic for every eps") {
    for (int a = -21; a <= 21; ++a) {
        for (int b : {-1, 0, 1}) {
            for (int c : {0, 1, 3}) {
                const int got = floor_half(EpsInt{a, b}, c);
                CHECK(got == floor_half_rational(a, b, c, 1, 4));
                CHECK(got == floor_half_rational(a, b, c, 1, 3));
                CHECK(got == floor_half_rational(a, b, c, 49, 100));
            }
        }
    }
}

TEST_CASE("type A path sets have binomial size") {
    for (int m = 1; m <= 6; ++m) {
        for (int i = 0; i <= m; ++i) {
            for (int k : {-3, 0, 2}) {
                const auto paths = enum_paths_A(m, i, k);
                CHECK(paths.size() == static_cast<std::size_t>(binomial(m, i)));
                for (const PathA& p : paths) {
                    CHECK_NOTHROW(validate_path(p));
                    CHECK(p.ys.front() == i + k);
                    CHECK(p.ys.back() == m - i + k);
                }
                CHECK(std::is_sorted(paths.begin(), paths.end()));
                // All paths are distinct.
                std::set<std::vector<int>> seen;
                for (const PathA& p : paths) seen.insert(p.ys);
                CHECK(seen.size() == paths.size());
            }
        }
    }
    CHECK_THROWS_AS(enum_paths_A(4, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(enum_paths_A(4, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(enum_paths_A(0, 0, 0), std::invalid_argument);
}

TEST_CASE("boundary indices carry one monotone path with no corners") {
    for (int m : {2, 5}) {
        for (int i : {0, m}) {
            const auto paths = enum_paths_A(m, i, 3);
            REQUIRE(paths.size() == 1);
            const Corners c = corners_A(paths.front());
            CHECK(c.plus.empty());
            CHECK(c.minus.empty());
            CHECK(monomial_of_path(paths.front()).empty());
            CHECK(weight_of_path(paths.front()).is_zero());
        }
    }
}

TEST_CASE("two-column enumeration is lexicographic") {
    const auto paths = enum_paths_A(2, 1, 0);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].ys == std::vector<int>{1, 0, 1});
    CHECK(paths[1].ys == std::vector<int>{1, 2, 1});
}

TEST_CASE("type A validation rejects malformed paths") {
    PathA p{2, 1, 0, {1, 0, 1}};
    CHECK_NOTHROW(validate_path(p));
    p.ys = {1, 3, 1};
    CHECK_THROWS_WITH_AS(validate_path(p),
                         "validate_path: step at column 0 is not +-1",
                         std::invalid_argument);
    p.ys = {0, 1, 2};
    CHECK_THROWS_AS(validate_path(p), std::invalid_argument);
    p.ys = {1, 0};
    CHECK_THROWS_AS(validate_path(p), std::invalid_argument);
}

TEST_CASE("type B enumeration matches an independent generator") {
    for (int n : {2, 3}) {
        for (int i = 1; i <= n; ++i) {
            const int k = ((2 * n + 2 * i + 2) % 4 + 4) % 4;
            auto got = enum_paths_B(n, i, k);
            std::sort(got.begin(), got.end());
            CHECK(got == brute_paths_b(n, i, k));
            for (const PathB& p : got) CHECK_NOTHROW(validate_path(p));
        }
    }
}

TEST_CASE("type B enumeration rejects bad anchors") {
    CHECK_THROWS_AS(enum_paths_B(2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(enum_paths_B(2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(enum_paths_B(1, 1, 0), std::invalid_argument);
    // (i,k) = (1,2) violates k = 2n+2i+2 (mod 4) for n = 2.
    CHECK_THROWS_AS(enum_paths_B(2, 1, 2), std::invalid_argument);
    CHECK_NOTHROW(enum_paths_B(2, 1, -4));
}

TEST_CASE("hand-checked rank-4 paths are valid and enumerated") {
    // Two paths with anchor (2, 2) for n = 4 whose z-branches differ in the
    // final two steps.
    const PathB p1 = make_path_b(4, 2, 2, {6, 8, 6, 8}, 9, 1, {12, 10, 8, 10}, 9, -1);
    const PathB p2 = make_path_b(4, 2, 2, {6, 8, 6, 8}, 9, 1, {12, 10, 8, 6}, 7, 1);
    CHECK_NOTHROW(validate_path(p1));
    CHECK_NOTHROW(validate_path(p2));
    const auto all = enum_paths_B(4, 2, 2);
    CHECK(std::find(all.begin(), all.end(), p1) != all.end());
    CHECK(std::find(all.begin(), all.end(), p2) != all.end());
}

TEST_CASE("type B validation pinpoints the broken invariant") {
    PathB good = make_path_b(2, 1, 0, {2, 0}, 1, 1, {4, 2}, 1, -1);
    CHECK_NOTHROW(validate_path(good));

    PathB tips = good;
    std::swap(tips.ys, tips.zs);
    CHECK_THROWS_AS(validate_path(tips), std::invalid_argument);

    PathB step = good;
    step.ys[1] = {4, 0};
    CHECK_THROWS_AS(validate_path(step), std::invalid_argument);

    PathB tip = good;
    tip.ys[2] = {2, 1};
    CHECK_THROWS_AS(validate_path(tip), std::invalid_argument);

    PathB parity = good;
    parity.k = 2;
    CHECK_THROWS_AS(validate_path(parity), std::invalid_argument);
}

TEST_CASE("point map to figure coordinates round trips") {
    const int n = 3;
    int checked = 0;
    for (int j = 0; j <= n; ++j) {
        for (int level = -12; level <= 12; ++level) {
            std::pair<int, int> xy;
            try {
                xy = tau(n, j, level);
            } catch (const std::invalid_argument&) {
                continue;
            }
            CHECK(tau_inv(n, xy.first, xy.second) == std::make_pair(j, level));
            ++checked;
        }
    }
    CHECK(checked > 20);
    // Middle column at x = 2n-1 carries odd levels only.
    CHECK(tau(n, n, 5) == std::make_pair(5, 5));
    CHECK_THROWS_AS(tau(n, n, 4), std::invalid_argument);
    CHECK_THROWS_AS(tau_inv(n, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(tau_inv(n, 20, 0), std::invalid_argument);
}

TEST_CASE("type A corners sit at strict extrema") {
    // Eight-column path descending into the middle and back out.
    const PathA p{8, 2, 1, {3, 4, 5, 6, 5, 4, 5, 6, 7}};
    const Corners c = corners_A(p);
    REQUIRE(c.plus.size() == 1);
    REQUIRE(c.minus.size() == 1);
    CHECK(c.plus[0] == Corner{5, 4});
    CHECK(c.minus[0] == Corner{3, 6});
    CHECK(weight_of_path(p) == make_weight(Family::A, {0, 0, -1, 0, 1, 0, 0}));
    const YMonomial m = monomial_of_path(p);
    CHECK(m.exponent(MonKey{5, 1, 4}) == 1);
    CHECK(m.exponent(MonKey{3, 1, 6}) == -1);
    CHECK(m.exponents().size() == 2);
}

TEST_CASE("rank-2 corner census matches the five-path worked example") {
    // The five paths with anchor (1, 4) for n = 2 and their corner data.
    struct Expected {
        PathB p;
        std::vector<std::int64_t> weight;
    };
    const std::vector<Expected> table = {
        {make_path_b(2, 1, 4, {6, 4}, 5, 1, {8, 6}, 5, -1), {1, 0}},
        {make_path_b(2, 1, 4, {6, 8}, 7, -1, {8, 6}, 5, -1), {-1, 2}},
        {make_path_b(2, 1, 4, {6, 8}, 9, 1, {8, 6}, 5, -1), {0, 0}},
        {make_path_b(2, 1, 4, {6, 8}, 9, 1, {8, 6}, 7, 1), {1, -2}},
        {make_path_b(2, 1, 4, {6, 8}, 9, 1, {8, 10}, 9, -1), {-1, 0}},
    };
    auto all = enum_paths_B(2, 1, 4);
    CHECK(all.size() == table.size());
    for (const auto& row : table) {
        CHECK(std::find(all.begin(), all.end(), row.p) != all.end());
        CHECK(weight_of_path(row.p) == make_weight(Family::B, row.weight));
    }
    // Corner positions of the second path: lower at (1,8), upper at the
    // middle column levels 7 and 5.
    const Corners c = corners_B(table[1].p);
    CHECK(c.minus == std::vector<Corner>{{1, 8}});
    CHECK(c.plus == std::vector<Corner>{{2, 5}, {2, 7}});
    const YMonomial m = monomial_of_path(table[1].p);
    CHECK(m.exponent(MonKey{1, 1, 8}) == -1);
    CHECK(m.exponent(MonKey{2, 1, 5}) == 1);
    CHECK(m.exponent(MonKey{2, 1, 7}) == 1);
}

TEST_CASE("half character reads the final step direction") {
    CHECK(half_char_at_n(PathA{2, 1, 0, {1, 2, 1}}) == +1);
    CHECK(half_char_at_n(PathA{2, 1, 0, {1, 0, 1}}) == -1);
}

TEST_CASE("strictly_above compares every shared column") {
    const PathA top{2, 1, -2, {-1, 0, -1}};
    const PathA bot{2, 1, 2, {3, 2, 3}};
    CHECK(strictly_above(top, bot));
    CHECK_FALSE(strictly_above(bot, top));
    CHECK_FALSE(strictly_above(top, top));
    // Touching at one column is not strict.
    const PathA mid{2, 1, 0, {1, 0, 1}};
    CHECK_FALSE(strictly_above(PathA{2, 1, -1, {0, 1, 0}}, mid));
    CHECK_THROWS_AS(strictly_above(top, PathA{3, 1, 0, {1, 0, 1, 2}}),
                    std::invalid_argument);
}

TEST_CASE("strictly_above on branch pairs compares the tips") {
    const PathB plain = make_path_b(2, 1, 0, {2, 0}, 1, 1, {4, 2}, 1, -1);
    const PathB below = make_path_b(2, 1, 8, {10, 8}, 9, 1, {12, 10}, 9, -1);
    CHECK(strictly_above(plain, below));
    CHECK_FALSE(strictly_above(below, plain));
    CHECK_FALSE(strictly_above(plain, plain));

    // A pair whose interior columns are separated but whose extreme tips
    // land on the same level: only the eps parts decide, and they fail.
    const PathB top = make_path_b(2, 1, 0, {2, 4}, 5, 1, {4, 2}, 1, -1);
    const PathB tipfail = make_path_b(2, 1, 4, {6, 8}, 9, 1, {8, 6}, 5, -1);
    CHECK(top.ys.back() == EpsInt{5, 1});
    CHECK(tipfail.zs.back() == EpsInt{5, -1});
    CHECK_FALSE(strictly_above(top, tipfail));
    // Raising that tip by one step restores the separation.
    const PathB tippass = make_path_b(2, 1, 4, {6, 8}, 9, 1, {8, 6}, 7, 1);
    CHECK(strictly_above(top, tippass));

    const PathB other = make_path_b(3, 1, -2, {0, -2, 0}, 1, 1, {6, 4, 2}, 1, -1);
    CHECK_NOTHROW(validate_path(other));
    CHECK_THROWS_AS(strictly_above(plain, other), std::invalid_argument);
}

}  // TEST_SUITE
