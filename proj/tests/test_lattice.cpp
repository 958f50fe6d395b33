#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "snakechar/lattice.hpp"

using namespace snakechar;
using test_helpers::make_character;
using test_helpers::make_weight;

TEST_SUITE("lattice") {

TEST_CASE("family names round trip") {
    for (Family f : {Family::A, Family::B, Family::Twisted}) {
        CHECK(family_from_name(family_name(f)) == f);
    }
    CHECK(std::string(family_name(Family::Twisted)) == "TW");
    CHECK_THROWS_AS(family_from_name("C"), std::invalid_argument);
}

TEST_CASE("weight arithmetic is componentwise") {
    const Weight a = make_weight(Family::A, {1, -2, 3});
    const Weight b = make_weight(Family::A, {0, 5, -1});
    CHECK((a + b) == make_weight(Family::A, {1, 3, 2}));
    CHECK((a - b) == make_weight(Family::A, {1, -7, 4}));
    CHECK((-a) == make_weight(Family::A, {-1, 2, -3}));
    CHECK(Weight(Family::B, 4).is_zero());
    CHECK_FALSE(a.is_zero());
}

TEST_CASE("weight arithmetic rejects mixed lattices") {
    const Weight a = make_weight(Family::A, {1, 0});
    const Weight b = make_weight(Family::B, {1, 0});
    const Weight c = make_weight(Family::A, {1, 0, 0});
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a - c, std::invalid_argument);
}

TEST_CASE("characters drop cancelled terms") {
    Character c(Family::A, 2);
    const Weight w = make_weight(Family::A, {1, 1});
    c.add(w, 3);
    CHECK(c.size() == 1);
    CHECK(c.multiplicity(w) == 3);
    c.add(w, -3);
    CHECK(c.empty());
    CHECK(c.multiplicity(w) == 0);
    c.add(w, 0);
    CHECK(c.empty());
}

TEST_CASE("character add rejects foreign weights") {
    Character c(Family::A, 2);
    CHECK_THROWS_AS(c.add(make_weight(Family::B, {1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(c.add(make_weight(Family::A, {1})), std::invalid_argument);
}

TEST_CASE("mass sums all multiplicities") {
    Character c(Family::B, 1);
    c.add(make_weight(Family::B, {0}), 2);
    c.add(make_weight(Family::B, {1}), -5);
    CHECK(c.mass() == -3);
}

TEST_CASE("char_add and char_sub are exact multiset operations") {
    const Character a = make_character(Family::A, 1, {{0}, {2}});
    const Character b = make_character(Family::A, 1, {{2}, {4}});
    Character sum = char_add(a, b);
    CHECK(sum.multiplicity(make_weight(Family::A, {2})) == 2);
    CHECK(sum.mass() == 4);
    Character diff = char_sub(a, b);
    CHECK(diff.multiplicity(make_weight(Family::A, {2})) == 0);
    CHECK(diff.multiplicity(make_weight(Family::A, {4})) == -1);
    CHECK(char_sub(a, a).empty());
}

TEST_CASE("char_mul convolves weights") {
    // (x + x^{-1})^2 = x^2 + 2 + x^{-2} in the rank-1 lattice.
    const Character a = make_character(Family::A, 1, {{1}, {-1}});
    const Character sq = char_mul(a, a);
    CHECK(sq.size() == 3);
    CHECK(sq.multiplicity(make_weight(Family::A, {2})) == 1);
    CHECK(sq.multiplicity(make_weight(Family::A, {0})) == 2);
    CHECK(sq.multiplicity(make_weight(Family::A, {-2})) == 1);
    CHECK(sq.mass() == a.mass() * a.mass());
    CHECK(char_mul(a, Character(Family::A, 1)).empty());
}

TEST_CASE("map_char accumulates coinciding images") {
    const Character c = make_character(Family::A, 2, {{1, 0}, {0, 1}, {1, 1}});
    const Character image =
        map_char(c, Family::A, 1, [](const Weight& w) {
            return make_weight(Family::A, {w.coeffs[0] + w.coeffs[1]});
        });
    CHECK(image.size() == 2);
    CHECK(image.multiplicity(make_weight(Family::A, {1})) == 2);
    CHECK(image.multiplicity(make_weight(Family::A, {2})) == 1);
}

TEST_CASE("fold_weight adds mirror coefficients") {
    // Rank 3 folds to rank 2: (a, b, c) -> (a + c, b).
    CHECK(fold_weight(make_weight(Family::A, {1, 0, 0})) ==
          make_weight(Family::Twisted, {1, 0}));
    CHECK(fold_weight(make_weight(Family::A, {0, 0, 1})) ==
          make_weight(Family::Twisted, {1, 0}));
    CHECK(fold_weight(make_weight(Family::A, {2, -1, 3})) ==
          make_weight(Family::Twisted, {5, -1}));
    // Rank 5 folds to rank 3: (a,b,c,d,e) -> (a+e, b+d, c).
    CHECK(fold_weight(make_weight(Family::A, {1, 2, 3, 4, 5})) ==
          make_weight(Family::Twisted, {6, 6, 3}));
    CHECK_THROWS_AS(fold_weight(make_weight(Family::A, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(fold_weight(make_weight(Family::B, {1, 0, 0})), std::invalid_argument);
}

TEST_CASE("fold_char merges mirror weights") {
    const Character c = make_character(Family::A, 3, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    const Character folded = fold_char(c);
    CHECK(folded.family() == Family::Twisted);
    CHECK(folded.rank() == 2);
    CHECK(folded.multiplicity(make_weight(Family::Twisted, {1, 0})) == 2);
    CHECK(folded.multiplicity(make_weight(Family::Twisted, {0, 1})) == 1);
    CHECK(folded.mass() == c.mass());
    CHECK_THROWS_AS(fold_char(Character(Family::A, 2)), std::invalid_argument);
}

TEST_CASE("pi_weight halves the short-node coefficient") {
    CHECK(pi_weight(make_weight(Family::B, {3, 4})) ==
          make_weight(Family::Twisted, {3, 2}));
    CHECK(pi_weight(make_weight(Family::B, {0, -6})) ==
          make_weight(Family::Twisted, {0, -3}));
    CHECK_THROWS_AS(pi_weight(make_weight(Family::B, {3, 1})), std::invalid_argument);
    CHECK_THROWS_AS(pi_weight(make_weight(Family::A, {3, 2})), std::invalid_argument);
}

TEST_CASE("lpi_weight halves long nodes and collapses odd terms") {
    CHECK(lpi_weight(make_weight(Family::Twisted, {2, -4, 5})) ==
          make_weight(Family::B, {1, -2, 5}));
    // Any odd long-node coefficient sends the weight to zero.
    CHECK(lpi_weight(make_weight(Family::Twisted, {1, 2, 3})) ==
          Weight(Family::B, 3));
    CHECK(lpi_weight(make_weight(Family::Twisted, {2, 3, 1})) ==
          Weight(Family::B, 3));
    // The short node passes through unchanged, odd or not.
    CHECK(lpi_weight(make_weight(Family::Twisted, {0, 0, 7})) ==
          make_weight(Family::B, {0, 0, 7}));
    CHECK_THROWS_AS(lpi_weight(make_weight(Family::B, {2, 2})), std::invalid_argument);
}

TEST_CASE("lpi_char pools the collapsed terms in the zero bucket") {
    const Character c = make_character(
        Family::Twisted, 2, {{2, 1}, {1, 1}, {3, 5}, {0, 0}});
    const Character image = lpi_char(c);
    CHECK(image.multiplicity(make_weight(Family::B, {1, 1})) == 1);
    CHECK(image.multiplicity(Weight(Family::B, 2)) == 3);
    CHECK(image.mass() == c.mass());
}

TEST_CASE("folding and duality maps are additive") {
    std::mt19937_64 rng(7);
    auto draw = [&rng](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::int64_t> a(5), b(5);
        for (auto& v : a) v = draw(-6, 6);
        for (auto& v : b) v = draw(-6, 6);
        const Weight wa = make_weight(Family::A, a);
        const Weight wb = make_weight(Family::A, b);
        CHECK(fold_weight(wa + wb) == fold_weight(wa) + fold_weight(wb));

        std::vector<std::int64_t> ta(3), tb(3);
        for (auto& v : ta) v = 2 * draw(-3, 3);
        for (auto& v : tb) v = 2 * draw(-3, 3);
        ta[2] = draw(-6, 6);
        tb[2] = draw(-6, 6);
        const Weight ua = make_weight(Family::Twisted, ta);
        const Weight ub = make_weight(Family::Twisted, tb);
        CHECK(lpi_weight(ua + ub) == lpi_weight(ua) + lpi_weight(ub));

        std::vector<std::int64_t> pa(3), pb(3);
        for (auto& v : pa) v = draw(-6, 6);
        for (auto& v : pb) v = draw(-6, 6);
        pa[2] *= 2;
        pb[2] *= 2;
        const Weight va = make_weight(Family::B, pa);
        const Weight vb = make_weight(Family::B, pb);
        CHECK(pi_weight(va + vb) == pi_weight(va) + pi_weight(vb));
    }
}

TEST_CASE("char_dominates compares termwise") {
    const Character big = make_character(Family::B, 1, {{0}, {0}, {2}});
    const Character small = make_character(Family::B, 1, {{0}});
    CHECK(char_dominates(big, small));
    CHECK(char_dominates(big, big));
    CHECK_FALSE(char_dominates(small, big));
    // A term present only on the small side breaks dominance.
    const Character stray = make_character(Family::B, 1, {{4}});
    CHECK_FALSE(char_dominates(big, stray));
    CHECK(char_dominates(big, Character(Family::B, 1)));
    CHECK_THROWS_AS(char_dominates(big, Character(Family::B, 2)), std::invalid_argument);
}

TEST_CASE("char_diff lists signed discrepancies in key order") {
    const Character a = make_character(Family::A, 1, {{0}, {0}, {2}});
    const Character b = make_character(Family::A, 1, {{0}, {4}});
    const auto diff = char_diff(a, b);
    REQUIRE(diff.size() == 3);
    CHECK(diff[0].first == make_weight(Family::A, {0}));
    CHECK(diff[0].second == 1);
    CHECK(diff[1].first == make_weight(Family::A, {2}));
    CHECK(diff[1].second == 1);
    CHECK(diff[2].first == make_weight(Family::A, {4}));
    CHECK(diff[2].second == -1);
    CHECK(char_diff(a, a).empty());
}

}  // TEST_SUITE
