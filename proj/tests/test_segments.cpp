#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "snakechar/segments.hpp"

using namespace snakechar;
using test_helpers::make_character;
using test_helpers::make_weight;

TEST_SUITE("segments") {

TEST_CASE("multisegment validation") {
    const MultiSegment good{3, {{0, 1}, {2, 3}}};
    CHECK(is_snake_multisegment(good));
    CHECK_NOTHROW(validate_multisegment(good));

    CHECK_FALSE(is_snake_multisegment(MultiSegment{2, {{0, 3}}}));
    CHECK_THROWS_AS(validate_multisegment(MultiSegment{2, {{0, 3}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_multisegment(MultiSegment{3, {{2, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_multisegment(MultiSegment{3, {{0, 2}, {0, 3}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_multisegment(MultiSegment{3, {{0, 2}, {1, 2}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_multisegment(MultiSegment{0, {{0, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_multisegment(MultiSegment{3, {}}), std::invalid_argument);
}

TEST_CASE("segments translate to snake points") {
    const SnakeA s = multisegment_snake(MultiSegment{3, {{0, 1}, {2, 3}}});
    CHECK(s.m == 3);
    CHECK(s.points == std::vector<std::pair<int, int>>{{1, 1}, {1, 5}});
    CHECK_NOTHROW(validate_snake(s));
}

TEST_CASE("segment characters") {
    CHECK(seg_char(2, 0, 1) == make_character(Family::A, 1, {{1}, {-1}}));
    // Zero-width and full-width segments carry the trivial module.
    CHECK(seg_char(3, 2, 2) == make_character(Family::A, 2, {{0, 0}}));
    CHECK(seg_char(3, 0, 3) == make_character(Family::A, 2, {{0, 0}}));
    // Out-of-window widths give the zero character.
    CHECK(seg_char(3, 0, 4).empty());
    CHECK(seg_char(3, 2, 1).empty());
    CHECK(seg_char(3, 0, 4).rank() == 2);
    CHECK_THROWS_AS(seg_char(0, 0, 0), std::invalid_argument);
}

TEST_CASE("segment characters are shift invariant") {
    CHECK(seg_char_shift_check(3, 0, 1, 5));
    CHECK(seg_char_shift_check(3, -2, 1, 1));
    CHECK(seg_char_shift_check(3, 0, 9, 2));
}

TEST_CASE("determinant of one segment is its character") {
    CHECK(det_char(MultiSegment{2, {{0, 1}}}) == seg_char(2, 0, 1));
}

TEST_CASE("two-by-two determinant matches the hand expansion") {
    const MultiSegment ms{2, {{0, 1}, {1, 2}}};
    const Character direct =
        char_sub(char_mul(seg_char(2, 0, 1), seg_char(2, 1, 2)),
                 char_mul(seg_char(2, 0, 2), seg_char(2, 1, 1)));
    CHECK(det_char(ms) == direct);
    CHECK(det_char(ms) == make_character(Family::A, 1, {{2}, {0}, {-2}}));
    CHECK(det_char(ms) == char_snake(multisegment_snake(ms)));
}

TEST_CASE("determinant with a repeated row vanishes") {
    CHECK(det_char(MultiSegment{2, {{0, 1}, {0, 1}}}).empty());
    CHECK_THROWS_AS(det_char(MultiSegment{2, {}}), std::invalid_argument);
    CHECK_THROWS_AS(det_char(MultiSegment{0, {{0, 0}}}), std::invalid_argument);
}

TEST_CASE("summation identity at M = 0 reduces to the snake character") {
    const MultiSegment ms{3, {{0, 1}, {2, 3}}};
    const auto [lhs, rhs] = identity_sides(ms, 0);
    const Character base = char_snake(multisegment_snake(ms));
    CHECK(lhs == base);
    CHECK(rhs == base);
}

TEST_CASE("summation identity sides agree on a hand-expanded case") {
    const MultiSegment ms{3, {{0, 1}, {2, 3}}};
    const auto [lhs, rhs] = identity_sides(ms, 1);
    const Character expected = make_character(
        Family::A, 2, {{1, 0}, {1, 0}, {-1, 1}, {-1, 1}, {0, -1}, {0, -1}});
    CHECK(lhs == expected);
    CHECK(rhs == expected);
    CHECK_THROWS_AS(identity_sides(ms, -1), std::invalid_argument);
}

TEST_CASE("summands that break the width bounds are dropped") {
    const MultiSegment ms{2, {{0, 0}}};
    const auto [lhs, rhs] = identity_sides(ms, 1);
    CHECK(lhs.empty());
    CHECK(rhs.empty());
}

TEST_CASE("endpoint spec validation") {
    const NopSetSpec good{5, {0, 4, 8}, {1, 3, 5}, 1};
    CHECK_NOTHROW(validate_spec(good));
    CHECK_THROWS_AS(validate_spec(NopSetSpec{1, {0}, {1}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_spec(NopSetSpec{5, {0}, {1}, -1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_spec(NopSetSpec{5, {}, {}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_spec(NopSetSpec{5, {0, 2}, {1}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_spec(NopSetSpec{2, {0}, {3}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_spec(NopSetSpec{2, {0}, {1}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_spec(NopSetSpec{5, {0, 0}, {1, 3}, 0}), std::invalid_argument);
}

TEST_CASE("window tuple sets respect their constraints") {
    const NopSetSpec spec{5, {0, 4, 8}, {1, 3, 5}, 1};
    const auto seta = build_nop_set(spec, NopSide::SetA);
    const auto setb = build_nop_set(spec, NopSide::SetB);
    CHECK_FALSE(seta.empty());
    CHECK(seta.size() == setb.size());

    for (const auto& tuple : seta) {
        REQUIRE(tuple.size() == 3);
        int deficit = 0;
        for (std::size_t t = 0; t < 3; ++t) {
            CHECK_NOTHROW(validate_path(tuple[t]));
            CHECK(tuple[t].ys.back() == spec.xn[t]);
            CHECK(tuple[t].ys.front() <= spec.x0[t]);
            if (t > 0) {
                CHECK(tuple[t].ys.front() > spec.x0[t - 1]);
                CHECK(strictly_above(tuple[t - 1], tuple[t]));
            }
            deficit += spec.x0[t] - tuple[t].ys.front();
        }
        CHECK(deficit == 2 * spec.M);
    }
    for (const auto& tuple : setb) {
        int surplus = 0;
        for (std::size_t t = 0; t < 3; ++t) {
            CHECK(tuple[t].ys.front() == spec.x0[t]);
            CHECK(tuple[t].ys.back() >= spec.xn[t]);
            if (t + 1 < 3) CHECK(tuple[t].ys.back() < spec.xn[t + 1]);
            surplus += tuple[t].ys.back() - spec.xn[t];
        }
        CHECK(surplus == 2 * spec.M);
    }

    // Two worked members, one per side.
    const std::vector<PathA> a_member = {
        PathA{5, 1, -3, {-2, -3, -2, -1, 0, 1}},
        PathA{5, 3, 1, {4, 3, 2, 1, 2, 3}},
        PathA{5, 4, 4, {8, 7, 6, 5, 4, 5}},
    };
    const std::vector<PathA> b_member = {
        PathA{5, 2, -2, {0, -1, 0, -1, 0, 1}},
        PathA{5, 3, 1, {4, 3, 2, 3, 2, 3}},
        PathA{5, 3, 5, {8, 7, 6, 5, 6, 7}},
    };
    CHECK(std::find(seta.begin(), seta.end(), a_member) != seta.end());
    CHECK(std::find(setb.begin(), setb.end(), b_member) != setb.end());
}

TEST_CASE("pinned windows coincide when nothing floats") {
    const NopSetSpec spec{5, {0, 4, 8}, {1, 3, 5}, 0};
    CHECK(build_nop_set(spec, NopSide::SetA) == build_nop_set(spec, NopSide::SetB));
}

TEST_CASE("tuple statistics sum weights and half characters") {
    const PathA up{2, 1, 0, {1, 0, 1}};
    const PathA down{2, 1, 0, {1, 2, 1}};
    const PathA far{2, 1, 4, {5, 4, 5}};

    auto [w1, h1] = tuple_statistics({up});
    CHECK(w1 == make_weight(Family::A, {1}));
    CHECK(h1 == -1);

    auto [w2, h2] = tuple_statistics({down, far});
    CHECK(w2 == make_weight(Family::A, {0}));
    CHECK(h2 == 0);

    CHECK_THROWS_AS(tuple_statistics({}), std::invalid_argument);
}

TEST_CASE("window statistics agree on hand specs") {
    CHECK(ab_statistics_equal(NopSetSpec{5, {0, 4, 8}, {1, 3, 5}, 1}));
    CHECK(ab_statistics_equal(NopSetSpec{2, {1}, {1}, 1}));
    CHECK(ab_statistics_equal(NopSetSpec{3, {0, 4}, {1, 5}, 2}));
}

TEST_CASE("random specs are valid, bounded and reproducible") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 100; ++trial) {
        const NopSetSpec spec = random_nop_spec(rng, 3, 4, 2);
        CHECK_NOTHROW(validate_spec(spec));
        CHECK(spec.n <= 4);
        CHECK(static_cast<int>(spec.x0.size()) <= 3);
        CHECK(spec.M <= 2);
    }

    std::mt19937_64 r1(7), r2(7);
    for (int trial = 0; trial < 20; ++trial) {
        CHECK(random_nop_spec(r1, 3, 4, 2) == random_nop_spec(r2, 3, 4, 2));
    }
    CHECK_THROWS_AS(random_nop_spec(rng, 0, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(random_nop_spec(rng, 3, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(random_nop_spec(rng, 3, 4, -1), std::invalid_argument);
}

}  // TEST_SUITE
