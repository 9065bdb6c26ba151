#include <catch2/catch_amalgamated.hpp>

#include <invtab/invtab.hpp>

#include "oracle.hpp"

using namespace invtab;

namespace {

tableau tab(std::vector<std::vector<int>> rows) { return validate(std::move(rows)); }

std::vector<std::tuple<int, int, int>> pair_triples(const tableau& t) {
    std::vector<std::tuple<int, int, int>> out;
    for (const auto& p : inversion_pairs(t)) out.emplace_back(p.smaller, p.larger, p.column);
    return out;
}

}  // namespace

TEST_CASE("shape basics") {
    shape s({4, 3, 2});
    CHECK(s.rows() == 3);
    CHECK(s.cols() == 4);
    CHECK(s.cells() == 9);
    CHECK(s.col_height(0) == 3);
    CHECK(s.col_height(2) == 2);
    CHECK(s.col_height(3) == 1);
    CHECK(s.col_height(4) == 0);
    CHECK_THROWS_AS(shape({2, 3}), shape_error);
    CHECK_THROWS_AS(shape({2, 0}), shape_error);
    CHECK(shape{}.cells() == 0);
}

TEST_CASE("content basics") {
    content mu({1, 2, 2});
    CHECK(mu.max_value() == 3);
    CHECK(mu.total() == 5);
    CHECK(mu.count(2) == 2);
    CHECK_THROWS_AS(content({1, 0, 2}), skipped_value);
    content sw = swap_adjacent(mu, 1);
    CHECK(sw.count(1) == 2);
    CHECK(sw.count(2) == 1);
    CHECK(sw.count(3) == 2);
}

TEST_CASE("validate rejects malformed fillings") {
    CHECK_THROWS_AS(validate({{1, 1}}), row_violation);
    CHECK_THROWS_AS(validate({{2, 1}}), row_violation);
    CHECK_THROWS_AS(validate({{1, 3}, {1, 2, 4}}), shape_error);
    CHECK_THROWS_AS(validate({{1, 3}}), skipped_value);
    CHECK_THROWS_AS(validate({{0, 1}}), skipped_value);
    CHECK_NOTHROW(validate({}));
    CHECK(n_inv(tab({})) == 0);
    CHECK(inversion_pairs(tab({})).empty());
}

TEST_CASE("four-row example: heights, pairs, standardization") {
    tableau t = tab({{1, 3, 7, 8}, {4, 5, 6, 8}, {2, 5, 7}});
    CHECK(height_order_of(t, 3).ranking == std::vector<int>{1, 2, 3});
    CHECK(height_order_of(t, 1).ranking == std::vector<int>{1, 2, 3});
    CHECK(pair_triples(t) ==
          std::vector<std::tuple<int, int, int>>{{2, 4, 1}, {3, 5, 2}, {6, 7, 3}});
    CHECK(n_inv(t) == 3);
    tableau st = standardize(t);
    CHECK(st.rows() ==
          std::vector<std::vector<int>>{{1, 3, 6, 8}, {2, 5, 7, 8}, {4, 5, 7}});
    CHECK(n_inv(st) == 0);
    CHECK(is_semistandard(st));
    CHECK(!is_semistandard(t));
}

TEST_CASE("three-row distinct example: pairs and standardization") {
    tableau t = tab({{1, 5, 8, 9}, {3, 4, 6}, {2, 7}});
    CHECK(pair_triples(t) ==
          std::vector<std::tuple<int, int, int>>{{1, 3, 1}, {2, 3, 1}, {6, 8, 3}});
    tableau st = standardize(t);
    CHECK(st.rows() == std::vector<std::vector<int>>{{1, 4, 6, 9}, {2, 5, 8}, {3, 7}});
    CHECK(n_inv(st) == 0);
}

TEST_CASE("inversion pairs are ordered by column and use strict value pairs") {
    for_each_tableau(shape({2, 2, 1}), content({2, 2, 1}), [](const tableau& t) {
        auto ps = inversion_pairs(t);
        for (std::size_t i = 1; i < ps.size(); ++i)
            CHECK(ps[i - 1].column <= ps[i].column);
        for (const auto& p : ps) CHECK(p.smaller < p.larger);
        CHECK(static_cast<int>(ps.size()) == n_inv(t));
    });
}

TEST_CASE("inversion count matches the right-sequence oracle") {
    for (const auto& [s, mu] : detail::desk_pairs(7)) {
        for_each_tableau(s, mu, [](const tableau& t) {
            REQUIRE(n_inv(t) == oracle::count_inversions(t));
        });
    }
}

TEST_CASE("standardizing is idempotent and kills all inversions") {
    for (const auto& [s, mu] : detail::desk_pairs(6)) {
        for_each_tableau(s, mu, [](const tableau& t) {
            tableau st = standardize(t);
            REQUIRE(n_inv(st) == 0);
            REQUIRE(is_semistandard(st));
            REQUIRE(standardize(st).rows() == st.rows());
            REQUIRE(st.derive_content().multiplicities() ==
                    t.derive_content().multiplicities());
        });
    }
}

TEST_CASE("semistandard tableaux have height equal to row index") {
    for (const auto& [s, mu] : detail::desk_pairs(6)) {
        for_each_tableau(s, mu, [](const tableau& t) {
            if (!is_semistandard(t)) return;
            auto ht = height_orders(t);
            for (std::size_t c = 0; c < ht.size(); ++c)
                for (std::size_t r = 0; r < ht[c].size(); ++r)
                    REQUIRE(ht[c][r] == static_cast<int>(r) + 1);
        });
    }
}

TEST_CASE("single column with distinct entries counts permutation inversions") {
    shape s({1, 1, 1, 1});
    content mu({1, 1, 1, 1});
    for_each_tableau(s, mu, [](const tableau& t) {
        int perm_inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (t.at(i, 0) > t.at(j, 0)) ++perm_inv;
        REQUIRE(n_inv(t) == perm_inv);
    });
}

TEST_CASE("height sequences round-trip through reconstruction") {
    for (const auto& [s, mu] : detail::desk_pairs(7)) {
        for_each_tableau(s, mu, [&](const tableau& t) {
            auto seq = height_sequences(t);
            auto back = tableau_from_height_sequences(t.shp(), seq);
            REQUIRE(back.has_value());
            REQUIRE(back->rows() == t.rows());
        });
    }
}

TEST_CASE("text and json round-trips") {
    tableau t = tab({{1, 3, 7, 8}, {4, 5, 6, 8}, {2, 5, 7}});
    CHECK(to_text(t) == "1 3 7 8\n4 5 6 8\n2 5 7\n");
    CHECK(parse_tableau(to_text(t)).rows() == t.rows());
    CHECK(parse_tableau(to_json(t)).rows() == t.rows());
    CHECK(parse_shape("4,3,2").parts() == std::vector<int>{4, 3, 2});
    CHECK(parse_content("1,2,2").multiplicities() == std::vector<int>{1, 2, 2});
    CHECK_THROWS_AS(parse_tableau("1 x\n"), parse_error);
    CHECK_THROWS_AS(parse_shape("3,,2"), parse_error);
    CHECK(shape_to_string(shape({4, 3, 2})) == "4,3,2");
    CHECK(pairs_to_string(inversion_pairs(t)) == "(2,4)^1 (3,5)^2 (6,7)^3");
}
