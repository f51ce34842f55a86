#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fishlab/perms.hpp"

using namespace fishlab;

TEST_CASE("permutation validation") {
    CHECK_NOTHROW(Permutation({2, 1, 3}));
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
}

TEST_CASE("avoids_bivincular") {
    CHECK_FALSE(avoids_bivincular(Permutation({1, 3, 2})));
    CHECK(avoids_bivincular(Permutation({2, 1, 3})));
    const std::int64_t expected[] = {1, 2, 5, 15, 53, 217, 1014};
    for (int n = 1; n <= 7; ++n) CHECK(count_avoiders(n) == expected[n - 1]);
}

TEST_CASE("corner_stats") {
    auto st = corner_stats(Permutation({1, 2, 3, 4}));
    CHECK(st.lrmax == 4);
    CHECK(st.lrmin == 1);
    CHECK(st.rlmax == 1);
    CHECK(st.rlmin == 4);

    st = corner_stats(Permutation({4, 3, 2, 1}));
    CHECK(st.lrmax == 1);
    CHECK(st.lrmin == 4);
    CHECK(st.rlmax == 4);
    CHECK(st.rlmin == 1);

    st = corner_stats(Permutation({2, 1, 3}));
    CHECK(st.lrmax == 2);
    CHECK(st.lrmin == 2);
    CHECK(st.rlmax == 1);
    CHECK(st.rlmin == 2);
}

TEST_CASE("inverse") {
    Permutation p({3, 1, 2});
    CHECK(p.inverse() == Permutation({2, 3, 1}));
    CHECK(p.inverse().inverse() == p);
}

TEST_CASE("inversion exchanges the corner statistics") {
    // reflection across the main diagonal: LRmax <-> RLmin, LRmin and RLmax fixed
    Permutation p({2, 3, 1});
    auto st = corner_stats(p);
    auto sti = corner_stats(p.inverse());
    CHECK(st.lrmax == 2);
    CHECK(sti.lrmax == 1);
    CHECK(st.lrmax == sti.rlmin);
    CHECK(st.rlmin == sti.lrmax);
    CHECK(st.lrmin == sti.lrmin);
    CHECK(st.rlmax == sti.rlmax);
}

TEST_CASE("conjecture_pat2") {
    auto r1 = conjecture_pat2(1);
    CHECK(r1.symmetric);
    CHECK(r1.table.size() == 1);

    auto r3 = conjecture_pat2(3);
    std::int64_t total = 0;
    for (const auto& [key, count] : r3.table) total += count;
    CHECK(total == 5);
    CHECK(r3.symmetric);

    CHECK_THROWS_AS(conjecture_pat2(10), std::invalid_argument);
}

TEST_CASE("conjecture_pat1_necessary") {
    auto r1 = conjecture_pat1_necessary(1);
    CHECK(r1.multisets_equal);
    CHECK(r1.inverse_closed);
    REQUIRE(r1.permutation_side.size() == 1);
    CHECK(r1.permutation_side.begin()->first == std::array<int, 4>{1, 1, 1, 1});

    auto r3 = conjecture_pat1_necessary(3);
    std::int64_t total = 0;
    for (const auto& [key, count] : r3.permutation_side) total += count;
    CHECK(total == 5);
    CHECK(r3.multisets_equal);
    CHECK(r3.inverse_closed);

    CHECK_THROWS_AS(conjecture_pat1_necessary(9), std::invalid_argument);
}

TEST_CASE("one-line format") {
    CHECK(to_line(Permutation({2, 1, 3})) == "2 1 3");
}
