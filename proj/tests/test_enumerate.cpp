#include <catch2/catch_amalgamated.hpp>

#include <invtab/invtab.hpp>

using namespace invtab;

TEST_CASE("tiny single-column family enumerates in row-major lexicographic order") {
    std::vector<std::vector<std::vector<int>>> seen;
    for_each_tableau(shape({1, 1, 1}), content({1, 2}),
                     [&](const tableau& t) { seen.push_back(t.rows()); });
    std::vector<std::vector<std::vector<int>>> want = {
        {{1}, {2}, {2}}, {{2}, {1}, {2}}, {{2}, {2}, {1}}};
    CHECK(seen == want);
    distribution d = inversion_distribution(shape({1, 1, 1}), content({1, 2}));
    CHECK(d.counts == std::vector<bigint>{1, 1, 1});
    CHECK(d.total() == 3);
    CHECK(d.max_index() == 2);
}

TEST_CASE("two-by-two families") {
    distribution d = inversion_distribution(shape({2, 2}), content({1, 1, 1, 1}));
    CHECK(d.counts == std::vector<bigint>{2, 3, 1});
    CHECK(d.total() == 6);
    distribution rep = inversion_distribution(shape({2, 2}), content({2, 2}));
    CHECK(rep.counts == std::vector<bigint>{1});
}

TEST_CASE("single row families") {
    distribution d = inversion_distribution(shape({3}), content({1, 1, 1}));
    CHECK(d.counts == std::vector<bigint>{1});
    // a repeated value cannot sit in one strict row
    distribution none = inversion_distribution(shape({2}), content({2}));
    CHECK(none.counts == std::vector<bigint>{0});
    CHECK(none.total() == 0);
}

TEST_CASE("enumeration visits each filling once, in increasing word order") {
    std::vector<std::vector<int>> words;
    for_each_tableau(shape({2, 2, 1}), content({2, 2, 1}), [&](const tableau& t) {
        std::vector<int> w;
        for (const auto& row : t.rows()) w.insert(w.end(), row.begin(), row.end());
        words.push_back(std::move(w));
    });
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
    CHECK(words.size() == inversion_distribution(shape({2, 2, 1}), content({2, 2, 1})).total());
}

TEST_CASE("content size must match the shape") {
    CHECK_THROWS_AS(inversion_distribution(shape({2, 2}), content({1, 1, 1})),
                    size_mismatch);
    CHECK_THROWS_AS(for_each_tableau(shape({2}), content({1, 1, 1}),
                                     [](const tableau&) {}),
                    size_mismatch);
}

TEST_CASE("empty shape has the single empty filling") {
    int seen = 0;
    for_each_tableau(shape{}, content{}, [&](const tableau&) { ++seen; });
    CHECK(seen == 1);
    distribution d = inversion_distribution(shape{}, content{});
    CHECK(d.counts == std::vector<bigint>{1});
}

TEST_CASE("partition and composition generators") {
    auto parts = partitions_of(4);
    CHECK(parts.size() == 5);
    for (const auto& p : parts)
        CHECK(std::is_sorted(p.parts().rbegin(), p.parts().rend()));
    auto comps = compositions_of(3);
    CHECK(comps.size() == 4);
    CHECK(partitions_of(0).size() == 1);
    CHECK(compositions_of(0).size() == 1);
}

TEST_CASE("distribution generating function matches counts") {
    distribution d = inversion_distribution(shape({2, 2}), content({1, 1, 1, 1}));
    qpolynomial gf = d.gf();
    CHECK(gf.coefficients() == std::vector<bigint>{2, 3, 1});
    CHECK(gf.eval_at_one() == 6);
}
