#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ars/combinatorics.hpp"
#include "oracles.hpp"

using ars::binomial;
using ars::Combination;
using ars::enumerate_class;
using ars::Int;
using ars::rank;
using ars::SemanticError;
using ars::SemanticErrorKind;
using ars::Universe;
using ars::unrank;

TEST_CASE("binomial basics") {
    CHECK(binomial(6, 4) == 15);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(1, 1) == 1);
}

TEST_CASE("binomial agrees with Pascal's triangle up to n = 24") {
    const auto triangle = oracles::pascal_triangle(24);
    for (int n = 0; n <= 24; ++n) {
        for (int m = 0; m <= n; ++m) {
            CHECK(binomial(n, m) ==
                  static_cast<Int>(triangle[static_cast<std::size_t>(n)]
                                           [static_cast<std::size_t>(m)]));
        }
    }
    CHECK(binomial(12, 6) == 924);
}

TEST_CASE("binomial rejects bad input") {
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(binomial(3, -2), std::invalid_argument);
    CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
    // Largest central coefficient that fits in 64 bits is at n = 66.
    CHECK(binomial(66, 33) == 7219428434016265740LL);
    CHECK_THROWS_AS(binomial(68, 34), std::overflow_error);
}

TEST_CASE("universe validation") {
    CHECK(Universe::of_size(4).labels() == std::vector<Int>{1, 2, 3, 4});
    CHECK(Universe({3, 6, 7, 9}).k() == 4);
    CHECK_THROWS_AS(Universe(std::vector<Int>{}), std::invalid_argument);
    CHECK_THROWS_AS(Universe({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Universe({3, 3, 6}), std::invalid_argument);
    CHECK_THROWS_AS(Universe({6, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Universe::of_size(0), std::invalid_argument);
}

TEST_CASE("combination validation") {
    CHECK(Combination().exponent() == 0);
    CHECK(Combination({3, 6, 9}).exponent() == 3);
    CHECK_THROWS_AS(Combination({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Combination({9, 6}), std::invalid_argument);
    CHECK_THROWS_AS(Combination({0}), std::invalid_argument);
}

TEST_CASE("second class over 3.6.7.9 comes out in Leibniz's order") {
    const Universe u({3, 6, 7, 9});
    const auto combos = enumerate_class(u, 2);
    const std::vector<Combination> expected = {
        Combination({3, 6}), Combination({3, 7}), Combination({3, 9}),
        Combination({6, 7}), Combination({6, 9}), Combination({7, 9})};
    CHECK(combos == expected);
}

TEST_CASE("class enumeration endpoints") {
    const Universe u = Universe::of_size(6);
    const auto combos = enumerate_class(u, 4);
    REQUIRE(combos.size() == 15);
    CHECK(combos.front() == Combination({1, 2, 3, 4}));
    CHECK(combos.back() == Combination({3, 4, 5, 6}));

    const auto empty_class = enumerate_class(u, 0);
    REQUIRE(empty_class.size() == 1);
    CHECK(empty_class.front() == Combination());

    const auto full_class = enumerate_class(u, 6);
    REQUIRE(full_class.size() == 1);
    CHECK(full_class.front() == Combination({1, 2, 3, 4, 5, 6}));
}

TEST_CASE("class out of range") {
    const Universe u = Universe::of_size(3);
    CHECK_THROWS_AS(enumerate_class(u, 4), SemanticError);
    CHECK_THROWS_AS(enumerate_class(u, -1), SemanticError);
    try {
        enumerate_class(u, 4);
    } catch (const SemanticError& e) {
        CHECK(e.kind() == SemanticErrorKind::ClassOutOfRange);
    }
}

TEST_CASE("rank examples") {
    CHECK(rank(Combination({6, 9}), Universe({3, 6, 7, 9})) == 5);
    CHECK(rank(Combination({1, 4, 5, 6}), Universe::of_size(6)) == 10);
    CHECK(rank(Combination({1, 2, 3}), Universe::of_size(7)) == 1);
    CHECK(rank(Combination(), Universe::of_size(5)) == 1);
}

TEST_CASE("rank rejects non-subsets") {
    try {
        rank(Combination({3, 5}), Universe({3, 6, 7, 9}));
        FAIL("expected SemanticError");
    } catch (const SemanticError& e) {
        CHECK(e.kind() == SemanticErrorKind::LabelNotInUniverse);
    }
}

TEST_CASE("unrank examples") {
    CHECK(unrank(2, 1, Universe({3, 6, 7, 9})) == Combination({3, 6}));
    CHECK(unrank(4, 15, Universe::of_size(6)) == Combination({3, 4, 5, 6}));
    CHECK(unrank(5, 1, Universe::of_size(5)) == Combination({1, 2, 3, 4, 5}));
    CHECK(unrank(0, 1, Universe::of_size(4)) == Combination());
}

TEST_CASE("unrank range errors") {
    const Universe u = Universe::of_size(4);
    try {
        unrank(2, 7, u);
        FAIL("expected SemanticError");
    } catch (const SemanticError& e) {
        CHECK(e.kind() == SemanticErrorKind::PlaceOutOfRange);
    }
    try {
        unrank(5, 1, u);
        FAIL("expected SemanticError");
    } catch (const SemanticError& e) {
        CHECK(e.kind() == SemanticErrorKind::ClassOutOfRange);
    }
    CHECK_THROWS_AS(unrank(2, 0, u), SemanticError);
}

TEST_CASE("enumeration, rank and unrank form a bijection for every k <= 12") {
    for (Int k = 1; k <= 12; ++k) {
        const Universe u = Universe::of_size(k);
        for (Int c = 0; c <= k; ++c) {
            const auto combos = enumerate_class(u, c);
            REQUIRE(static_cast<Int>(combos.size()) == binomial(k, c));
            for (std::size_t i = 0; i < combos.size(); ++i) {
                const Int place = static_cast<Int>(i) + 1;
                CHECK(rank(combos[i], u) == place);
                CHECK(unrank(c, place, u) == combos[i]);
            }
        }
    }
}

TEST_CASE("enumeration matches the selection-mask oracle for every k <= 10") {
    for (Int k = 1; k <= 10; ++k) {
        const Universe u = Universe::of_size(k);
        for (Int c = 0; c <= k; ++c) {
            const auto expected = oracles::lex_combinations(u.labels(), static_cast<int>(c));
            const auto actual = enumerate_class(u, c);
            REQUIRE(actual.size() == expected.size());
            for (std::size_t i = 0; i < actual.size(); ++i) {
                CHECK(actual[i].members() == expected[i]);
            }
        }
    }
}

TEST_CASE("ranks depend on positions, not label values") {
    const Universe plain = Universe::of_size(4);
    const Universe relabeled({3, 6, 7, 9});
    for (Int c = 0; c <= 4; ++c) {
        const auto plain_class = enumerate_class(plain, c);
        for (const auto& s : plain_class) {
            std::vector<Int> mapped;
            for (Int member : s.members()) {
                mapped.push_back(relabeled.labels()[static_cast<std::size_t>(
                    plain.index_of(member))]);
            }
            CHECK(rank(s, plain) == rank(Combination(mapped), relabeled));
        }
    }
}
