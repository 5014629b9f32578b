#include "doctest.h"
#include "oracles.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ddc/quotient.hpp"

using namespace ddc;

namespace {

// S_3 as permutations of {0,1,2}; element ids follow std::next_permutation.
struct S3 {
    std::vector<std::array<int, 3>> perms;
    std::vector<ElementId> table;

    S3() {
        std::array<int, 3> p{0, 1, 2};
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        for (const auto& a : perms) {
            for (const auto& b : perms) {
                const std::array<int, 3> ab{a[b[0]], a[b[1]], a[b[2]]};
                table.push_back(id(ab));
            }
        }
    }
    ElementId id(const std::array<int, 3>& p) const {
        return static_cast<ElementId>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    }
    std::string text(std::vector<ElementId> gens) const {
        std::ostringstream out;
        out << "table 6 n=" << gens.size() << "\n0\n";
        for (auto g : gens) out << g << ' ';
        out << '\n';
        for (std::size_t r = 0; r < 6; ++r) {
            for (std::size_t c = 0; c < 6; ++c) out << table[r * 6 + c] << (c == 5 ? '\n' : ' ');
        }
        return out.str();
    }
};

const char* const kLoop =
    "# order-5 Latin square with identity 0, not associative\n"
    "table 5 n=2\n"
    "0\n"
    "1 2\n"
    "0 1 2 3 4\n"
    "1 0 3 4 2\n"
    "2 4 0 1 3\n"
    "3 2 4 0 1\n"
    "4 3 1 2 0\n";

}  // namespace

TEST_CASE("modular groups") {
    const GroupOracle z7 = load_group("zmod 7 gens=1");
    CHECK(z7.order() == 7);
    CHECK(z7.identity() == 0);
    CHECK(z7.generators() == std::vector<ElementId>{1});
    CHECK(z7.mul(5, 4) == 2);
    CHECK(z7.inverse(3) == 4);
    CHECK(z7.letter_image(-1) == 6);
    CHECK(z7.ctx().rank() == 1);

    const GroupOracle z12 = load_group("zmod 12 gens=4,3");
    CHECK(z12.ctx().rank() == 2);
    CHECK(z12.evaluate(GroupCtx(2).word({1, 2, 2})) == 10);

    CHECK_THROWS_AS(load_group("zmod 6 gens=2"), Error);  // only even residues reachable
    CHECK_THROWS_AS(parse_zmod("zmod 0 gens=1"), Error);
    CHECK_THROWS_AS(parse_zmod("zmod 7"), Error);
    CHECK_THROWS_AS(parse_zmod("zmod 7 gens=9"), Error);
}

TEST_CASE("S_3 from a table") {
    const S3 s3;
    const ElementId swap01 = s3.id({1, 0, 2});
    const ElementId cycle = s3.id({1, 2, 0});
    std::istringstream in(s3.text({swap01, cycle}));
    const GroupOracle g = parse_group_table(in);
    CHECK_NOTHROW(g.validate());
    CHECK(g.order() == 6);
    CHECK(g.inverse(cycle) == s3.id({2, 0, 1}));
    CHECK(g.mul(swap01, swap01) == 0);

    const auto words = bfs_words(g);
    CHECK(words[0].is_identity());
    for (ElementId h = 0; h < 6; ++h) CHECK(g.evaluate(words[h]) == h);
    std::size_t longest = 0;
    for (const auto& w : words) longest = std::max(longest, w.length());
    CHECK(longest == 2);

    const auto path = std::filesystem::temp_directory_path() / "ddc_s3_table.txt";
    std::ofstream(path) << s3.text({swap01, cycle});
    CHECK(load_group(path.string()).order() == 6);
    std::filesystem::remove(path);
}

TEST_CASE("malformed and non-associative tables are rejected") {
    auto code_of = [](const std::string& text) {
        try {
            std::istringstream in(text);
            parse_group_table(in).validate();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::ParseError;  // sentinel: nothing thrown
    };
    CHECK(code_of(kLoop) == ErrorCode::NonAssociative);
    CHECK(code_of("table 2 n=1\n0\n1\n0 1\n1\n") == ErrorCode::MalformedTable);
    CHECK(code_of("table 2 n=1\n0\n1\n0 1\n1 2\n") == ErrorCode::MalformedTable);
    CHECK(code_of("table 2 n=1\n0\n1\n1 0\n0 1\n") == ErrorCode::MalformedTable);  // 0 is not neutral
    CHECK(code_of("grid 2 n=1\n0\n1\n0 1\n1 0\n") == ErrorCode::MalformedTable);
    // Z_2 x Z_2 generated by one element leaves two elements unreachable.
    CHECK(code_of("table 4 n=1\n0\n1\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n") == ErrorCode::UnreachableElements);
    CHECK_THROWS_AS(load_group("/nonexistent/group.txt"), Error);
}

TEST_CASE("breadth-first words realize Cayley distances") {
    const GroupOracle z7 = load_group("zmod 7 gens=1");
    const auto words = bfs_words(z7);
    CHECK(words[0].is_identity());
    CHECK(words[4].length() == 3);
    CHECK(to_string(words[4]) == "-1 -1 -1");
    CHECK(words[2].length() == 2);
    for (ElementId h = 0; h < 7; ++h) {
        CHECK(words[h].length() == std::min<std::size_t>(h, 7 - h));
        CHECK(z7.evaluate(words[h]) == h);
    }
    Guards g;
    g.max_elements = 5;
    CHECK_THROWS_AS(bfs_words(z7, g), Error);
}

TEST_CASE("DDCs inside a finite group") {
    const GroupOracle z7 = load_group("zmod 7 gens=1");
    CHECK(is_ddc_in_group(z7, {1, 2, 4}));
    CHECK_FALSE(is_ddc_in_group(z7, {0, 1, 2}));
    CHECK(group_diameter(z7, {1, 2, 4}, bfs_words(z7)) == 3);
    CHECK_THROWS_AS(is_ddc_in_group(z7, {1, 9}), Error);
}

TEST_CASE("lifting {1,2,4} from Z_7") {
    const GroupOracle z7 = load_group("zmod 7 gens=1");
    const auto r = lift(z7, {1, 2, 4}, 3);
    CHECK(r.set.size() == 3);
    CHECK(is_ddc(r.set));
    CHECK(r.free_diameter <= 6);
    CHECK(r.group_diameter == 3);
    REQUIRE(r.lifted.size() == 3);
    const std::vector<ElementId> images{z7.evaluate(r.lifted[0]), z7.evaluate(r.lifted[1]), z7.evaluate(r.lifted[2])};
    CHECK(images == std::vector<ElementId>{1, 2, 4});
    for (const auto& w : r.lifted) CHECK(dist(r.lifted[0], w) <= 3);

    CHECK_THROWS_AS(lift(z7, {0, 1, 2}, 3), Error);
    CHECK_THROWS_AS(lift(z7, {1, 2, 4}, 2), Error);
    CHECK_THROWS_AS(lift(z7, {1, 8}, 3), Error);
    try {
        lift(z7, {1, 2, 4}, 2);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DiameterTooSmall);
    }
}

TEST_CASE("lifting singletons and pairs") {
    const GroupOracle z7 = load_group("zmod 7 gens=1");
    const auto single = lift(z7, {5}, 0);
    CHECK(single.set.size() == 1);
    CHECK(single.free_diameter == 0);
    CHECK(z7.evaluate(single.lifted[0]) == 5);

    const S3 s3;
    std::istringstream in(s3.text({s3.id({1, 0, 2}), s3.id({1, 2, 0})}));
    const GroupOracle g = parse_group_table(in);
    const auto words = bfs_words(g);
    for (ElementId a = 0; a < 6; ++a) {
        for (ElementId b = 0; b < 6; ++b) {
            if (a == b) continue;
            // {a, b} repeats a difference exactly when a⁻¹b is an involution.
            const ElementId diff = g.mul(g.inverse(a), b);
            const bool involution = g.mul(diff, diff) == g.identity();
            CHECK(is_ddc_in_group(g, {a, b}) == !involution);
            if (involution) {
                CHECK_THROWS_AS(lift(g, {a, b}, 2), Error);
                continue;
            }
            const std::size_t d = group_diameter(g, {a, b}, words);
            const auto r = lift(g, {a, b}, d);
            CHECK(r.set.size() == 2);
            CHECK(is_ddc(r.set));
            CHECK(r.free_diameter <= 2 * d);
            CHECK(g.evaluate(r.lifted[0]) == a);
            CHECK(g.evaluate(r.lifted[1]) == b);
        }
    }
}

TEST_CASE("lifts of random group DDCs stay DDCs") {
    const GroupOracle z = load_group("zmod 31 gens=1,5");
    const auto words = bfs_words(z);
    std::mt19937_64 rng(21);
    std::vector<ElementId> all(31);
    for (ElementId i = 0; i < 31; ++i) all[i] = i;
    int lifted = 0;
    for (int t = 0; t < 300; ++t) {
        const auto set = oracle::sample(rng, all, 2 + t % 5);
        if (!is_ddc_in_group(z, set)) continue;
        const std::size_t d = group_diameter(z, set, words);
        const auto r = lift(z, set, d);
        ++lifted;
        CHECK(r.set.size() == set.size());
        CHECK(is_ddc(r.set));
        CHECK(r.free_diameter <= 2 * d);
        for (std::size_t i = 0; i < set.size(); ++i) {
            CHECK(z.evaluate(r.lifted[i]) == set[i]);
            CHECK(dist(r.lifted[0], r.lifted[i]) <= d);
        }
    }
    CHECK(lifted > 50);
}
