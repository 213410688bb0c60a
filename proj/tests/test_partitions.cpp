#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ncshuffle/partitions.hpp"

using namespace ncs;

TEST_CASE("family sizes at small n") {
    CHECK(enumerate_nc(3).size() == 5);
    CHECK(enumerate_nc(4).size() == 14);
    CHECK(enumerate_nc_irr(4).size() == 5);
    CHECK(enumerate_interval(4).size() == 8);
    CHECK(enumerate_monotone(3, false).size() == 12);
    CHECK(enumerate_nc(1).size() == 1);
    CHECK(enumerate_nc_irr(1).size() == 1);
    CHECK(enumerate_interval(1).size() == 1);
    CHECK(enumerate_monotone(1, false).size() == 1);
    CHECK(enumerate_monotone(1, true).size() == 1);
}

TEST_CASE("enumeration is canonical, duplicate-free and matches the filter oracle") {
    for (int n = 1; n <= 8; ++n) {
        auto fast = enumerate_nc(n);
        auto oracle = set_partitions_oracle(n, true);
        REQUIRE(fast.size() == oracle.size());
        std::set<std::vector<int>> seen;
        std::vector<int> prev;
        for (const auto& p : fast) {
            validate_noncrossing(p);
            auto v = block_vector(p);
            CHECK(seen.insert(v).second);
            CHECK(prev < v);
            prev = v;
        }
        for (const auto& p : oracle) CHECK(seen.contains(block_vector(p)));
    }
}

TEST_CASE("irreducible means 1 and n share a block") {
    for (const auto& p : enumerate_nc_irr(5)) {
        CHECK(p.blocks.front().front() == 1);
        CHECK(p.blocks.front().back() == 5);
    }
}

TEST_CASE("classify") {
    SECTION("nested pair") {
        NoncrossingPartition p{4, {{1, 4}, {2, 3}}};
        auto cl = classify(p);
        CHECK(cl.outer_blocks == std::vector<int>{0});
        CHECK(cl.inner_blocks == std::vector<int>{1});
        CHECK(cl.components.size() == 1);
    }
    SECTION("disjoint intervals") {
        NoncrossingPartition p{4, {{1, 2}, {3, 4}}};
        auto cl = classify(p);
        CHECK(cl.outer_blocks.size() == 2);
        CHECK(cl.inner_blocks.empty());
        CHECK(cl.components.size() == 2);
    }
    SECTION("mixed") {
        NoncrossingPartition p{4, {{1, 3}, {2}, {4}}};
        auto cl = classify(p);
        CHECK(cl.outer_blocks == std::vector<int>{0, 2});
        CHECK(cl.inner_blocks == std::vector<int>{1});
        REQUIRE(cl.components.size() == 2);
        CHECK(cl.components[0] == NoncrossingPartition{3, {{1, 3}, {2}}});
        CHECK(cl.components[1] == NoncrossingPartition{1, {{1}}});
        CHECK(cl.spans == std::vector<std::pair<int, int>>{{1, 3}, {4, 4}});
    }
}

TEST_CASE("components concatenate back and tree factorial is multiplicative") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& p : enumerate_nc(n)) {
            auto cl = classify(p);
            Integer prod = 1;
            std::size_t blocks = 0;
            for (std::size_t c = 0; c < cl.components.size(); ++c) {
                prod *= tree_factorial(cl.components[c]);
                blocks += cl.components[c].blocks.size();
                CHECK(is_irreducible(cl.components[c]));
                // shifting the component back must reproduce blocks of p
                for (const auto& b : cl.components[c].blocks) {
                    std::vector<int> shifted;
                    for (int i : b) shifted.push_back(i + cl.spans[c].first - 1);
                    CHECK(std::find(p.blocks.begin(), p.blocks.end(), shifted) != p.blocks.end());
                }
            }
            CHECK(blocks == p.blocks.size());
            CHECK(prod == tree_factorial(p));
        }
    }
}

TEST_CASE("nesting forests and tree factorials") {
    NoncrossingPartition chain{3, {{1, 3}, {2}}};
    auto f = nesting_forest(chain);
    REQUIRE(f.roots.size() == 1);
    CHECK(f.nodes[f.roots[0]].children.size() == 1);
    CHECK(tree_factorial(chain) == 2);
    CHECK(monotone_count(chain) == 1);

    NoncrossingPartition singletons{4, {{1}, {2}, {3}, {4}}};
    CHECK(nesting_forest(singletons).roots.size() == 4);
    CHECK(tree_factorial(singletons) == 1);
    CHECK(monotone_count(singletons) == 24);

    NoncrossingPartition vee{4, {{1, 4}, {2}, {3}}};
    auto fv = nesting_forest(vee);
    REQUIRE(fv.roots.size() == 1);
    CHECK(fv.nodes[fv.roots[0]].children.size() == 2);
    CHECK(tree_factorial(vee) == 3);
    CHECK(monotone_count(vee) == 2);
}

TEST_CASE("monotone count equals the number of generated labelings") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : enumerate_nc(n)) {
            Integer count = 0;
            for_each_labeling(p, [&](const std::vector<int>&) { ++count; });
            CHECK(count == monotone_count(p));
        }
    }
}

TEST_CASE("monotone enumeration is ordered by base partition, then labeling") {
    auto list = enumerate_monotone(4, false);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> keys;
    for (const auto& mp : list) keys.emplace_back(block_vector(mp.base), mp.labels);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("monotone labelings are increasing along nesting") {
    for (const auto& mp : enumerate_monotone(5, false)) {
        const auto& p = mp.base;
        for (int a = 0; a < p.block_count(); ++a)
            for (int b = 0; b < p.block_count(); ++b)
                if (a != b && nested_inside(p.blocks[b], p.blocks[a]))
                    CHECK(mp.labels[a] < mp.labels[b]);
        std::set<int> labels(mp.labels.begin(), mp.labels.end());
        CHECK(labels.size() == mp.labels.size());
        CHECK(*labels.begin() == 1);
        CHECK(*labels.rbegin() == p.block_count());
    }
}

TEST_CASE("omega") {
    NoncrossingPartition one{4, {{1, 2, 3, 4}}};
    CHECK(omega(one) == 1);

    NoncrossingPartition chain{3, {{1, 3}, {2}}};
    CHECK(omega_k(chain, 1) == 0);
    CHECK(omega_k(chain, 2) == 1);
    CHECK(omega(chain) == make_rational(-1, 2));

    NoncrossingPartition vee{4, {{1, 4}, {2}, {3}}};
    CHECK(omega_k(vee, 2) == 1);
    CHECK(omega_k(vee, 3) == 2);
    CHECK(omega(vee) == make_rational(1, 6));

    NoncrossingPartition reducible{2, {{1}, {2}}};
    CHECK_THROWS_AS(omega(reducible), error);
}

TEST_CASE("restrict") {
    Word w{0, 1, 2, 3};
    CHECK(restrict_word(w, {1, 3}) == Word{0, 2});
    CHECK(restrict_word(w, {1, 2, 3, 4}) == w);
    Word aaaa{0, 0, 0, 0};
    CHECK(restrict_word(aaaa, {2, 4}) == Word{0, 0});
    CHECK_THROWS_AS(restrict_word(w, {5}), error);
}

TEST_CASE("enumeration limit errors name the family and the bound") {
    CHECK_THROWS_WITH(enumerate_nc(0), Catch::Matchers::ContainsSubstring("nc"));
    CHECK_THROWS_WITH(enumerate_nc(13), Catch::Matchers::ContainsSubstring("12"));
    CHECK_THROWS_WITH(enumerate_monotone(11, false),
                      Catch::Matchers::ContainsSubstring("monotone"));
    CHECK_THROWS_WITH(enumerate_monotone(11, false), Catch::Matchers::ContainsSubstring("10"));
}

TEST_CASE("fast crossing check agrees with the definitional one") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : set_partitions_oracle(n, false))
            CHECK(is_noncrossing(p) == is_noncrossing_definition(p));
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(validate_noncrossing(NoncrossingPartition{4, {{1, 3}, {2, 4}}}), error);
    CHECK_THROWS_AS(validate_noncrossing(NoncrossingPartition{3, {{1, 2}}}), error);
    CHECK_THROWS_AS(validate_noncrossing(NoncrossingPartition{2, {{1, 2, 3}}}), error);
}
