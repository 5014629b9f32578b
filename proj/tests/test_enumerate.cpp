#include "doctest.h"
#include "oracles.hpp"

#include <set>

#include "ddc/enumerate.hpp"

using namespace ddc;

TEST_CASE("sphere and ball sizes") {
    CHECK(sphere_size(GroupCtx(2), 0) == 1);
    CHECK(sphere_size(GroupCtx(2), 2) == 12);
    CHECK(sphere_size(GroupCtx(3), 3) == 150);
    CHECK(ball_size(GroupCtx(2), 0) == 1);
    CHECK(ball_size(GroupCtx(2), 1) == 5);
    CHECK(ball_size(GroupCtx(2), 2) == 17);
    CHECK(ball_size(GroupCtx(2), 4) == 161);
    CHECK(sphere_size(GroupCtx(1), 5) == 2);
}

TEST_CASE("S_1 for rank 2 in canonical order") {
    const auto words = sphere_words(GroupCtx(2), 1);
    REQUIRE(words.size() == 4);
    CHECK(to_string(words[0]) == "-2");
    CHECK(to_string(words[1]) == "-1");
    CHECK(to_string(words[2]) == "1");
    CHECK(to_string(words[3]) == "2");
}

TEST_CASE("enumeration equals brute force for small spheres") {
    for (int n : {1, 2, 3}) {
        for (std::size_t r = 0; r <= 5; ++r) {
            const auto brute = oracle::brute_sphere(n, r);
            std::vector<oracle::Raw> got;
            for_each_sphere_word(GroupCtx(n), r, [&](std::span<const Letter> l) { got.emplace_back(l.begin(), l.end()); });
            // Brute force also runs lexicographically over the same alphabet order.
            CHECK(got == brute);
            CHECK(BigInt(got.size()) == sphere_size(GroupCtx(n), r));
        }
    }
}

TEST_CASE("sphere words are reduced, of the right length, strictly increasing") {
    const GroupCtx ctx(2);
    for (std::size_t r : {2u, 3u}) {
        const auto words = sphere_words(ctx, r);
        CHECK(BigInt(words.size()) == sphere_size(ctx, r));
        for (std::size_t i = 0; i < words.size(); ++i) {
            CHECK(words[i].length() == r);
            CHECK(is_reduced(words[i].letters()));
            if (i > 0) CHECK(words[i - 1] < words[i]);
        }
    }
    CHECK(sphere_words(ctx, 3).size() == 36);
}

TEST_CASE("ball is the disjoint union of its spheres") {
    const GroupCtx ctx(3);
    const auto ball = ball_words(ctx, 3);
    CHECK(BigInt(ball.size()) == ball_size(ctx, 3));
    std::set<Word> unique(ball.begin(), ball.end());
    CHECK(unique.size() == ball.size());
    CHECK(std::is_sorted(ball.begin(), ball.end()));
}

TEST_CASE("first-letter partition covers the sphere exactly once") {
    const GroupCtx ctx(3);
    std::vector<Word> joined;
    for (Letter first : sphere_partition(ctx)) {
        for (SphereIter it(ctx, 4, first); !it.done(); it.advance()) joined.push_back(it.word());
    }
    CHECK(joined == sphere_words(ctx, 4));
    CHECK_THROWS_AS(SphereIter(ctx, 0, 1), Error);
}

TEST_CASE("materialization honours the element guard") {
    Guards g;
    g.max_elements = 10;
    CHECK_THROWS_AS(sphere_words(GroupCtx(2), 3, g), Error);
    CHECK_THROWS_AS(ball_words(GroupCtx(2), 2, g), Error);
    g.max_elements = 12;
    CHECK(sphere_words(GroupCtx(2), 2, g).size() == 12);
}
