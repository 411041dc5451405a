#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "deviant/betti.hpp"
#include "deviant/errors.hpp"
#include "doctest.h"

using namespace deviant;

TEST_CASE("support runs split linearly and wrap cyclically") {
    ExponentVector v{1, 1, 0, 1, 1};
    auto linear = support_runs(v, false);
    REQUIRE(linear.size() == 2);
    CHECK(linear[0] == std::vector<int>{1, 2});
    CHECK(linear[1] == std::vector<int>{4, 5});
    auto cyclic = support_runs(v, true);
    REQUIRE(cyclic.size() == 1);
    CHECK(cyclic[0] == std::vector<int>{4, 5, 1, 2});
    auto full = support_runs(ones(4), true);
    REQUIRE(full.size() == 1);
    CHECK(full[0].size() == 4);
}

TEST_CASE("block decomposition carries tau and iota") {
    BlockDecomposition b = block_decompose(ExponentVector{1, 1, 0, 1, 1, 1}, false);
    CHECK(b.tau() == 2);
    CHECK(b.iota() == 1 + 2);  // floor(4/3) + floor(6/3)
    CHECK_THROWS_AS(block_decompose(ExponentVector{2, 0, 1}, false),
                    std::invalid_argument);
}

TEST_CASE("path Betti values follow the block norms mod 3") {
    // a block of norm 1 mod 3 kills the multidegree
    BettiValue dead = betti_path(4, ones(4));
    CHECK(dead.beta == 0);
    BettiValue b3 = betti_path(3, ones(3));
    CHECK(b3.i == 2);
    CHECK(b3.beta == 1);
    BettiValue b22 = betti_path(5, ExponentVector{1, 1, 0, 1, 1});
    CHECK(b22.i == 2);
    CHECK(b22.beta == 1);
    // norm-2 and norm-3 blocks: iota = 1 + 2
    BettiValue b23 = betti_path(6, ExponentVector{1, 1, 0, 1, 1, 1});
    CHECK(b23.i == 3);
    CHECK(b23.beta == 1);
}

TEST_CASE("full-support cycle Betti numbers depend on n mod 3") {
    struct Row {
        int n, i;
        long long beta;
    };
    for (Row r : {Row{3, 2, 2}, Row{4, 3, 1}, Row{5, 3, 1}, Row{6, 4, 2},
                  Row{7, 5, 1}, Row{8, 5, 1}, Row{9, 6, 2}}) {
        BettiValue b = betti_cycle(r.n, ones(r.n));
        CHECK(b.i == r.i);
        CHECK(b.beta == r.beta);
    }
}

TEST_CASE("proper-support cycle multidegrees reduce to path blocks") {
    // support {4,5,1,2} on C5 is one wrapped block of norm 4: 4 = 1 mod 3
    CHECK(betti_cycle(5, ExponentVector{1, 1, 0, 1, 1}).beta == 0);
    // {5,6,1} and {3}: norm-1 block kills it
    CHECK(betti_cycle(6, ExponentVector{1, 0, 1, 0, 1, 1}).beta == 0);
    // {6,1,2} and {4}: same
    BettiValue b = betti_cycle(6, ExponentVector{1, 1, 0, 1, 1, 1});
    CHECK(b.i == 3);
    CHECK(b.beta == 1);
}

TEST_CASE("the Betti table of the 3-path is the length-2 resolution") {
    BettiTable t = betti_table(path_graph(3));
    CHECK(t.entries.size() == 4);
    CHECK(t.at(0, ExponentVector{0, 0, 0}) == 1);
    CHECK(t.at(1, ExponentVector{1, 1, 0}) == 1);
    CHECK(t.at(1, ExponentVector{0, 1, 1}) == 1);
    CHECK(t.at(2, ExponentVector{1, 1, 1}) == 1);
    auto graded = t.graded();
    CHECK(graded.at({1, 2}) == 2);
    CHECK(graded.at({2, 3}) == 1);
    CHECK(t.max_i() == 2);
    CHECK(t.max_j() == 3);
}

TEST_CASE("graded Betti numbers of the 6-cycle match the closed forms") {
    auto graded = betti_table(cycle_graph(6)).graded();
    CHECK(graded.at({1, 2}) == 6);  // the edges
    CHECK(graded.at({2, 3}) == 6);  // the six length-3 cyclic intervals
    CHECK(graded.at({2, 4}) == 3);  // two 2-blocks with gaps on both sides
    CHECK(graded.at({4, 6}) == 2);  // full support
}

TEST_CASE("restricting the ideal of a 4-cycle onto three vertices gives the 3-path") {
    BettiTable t = restricted_ideal_betti(cycle_graph(4), ExponentVector{1, 1, 1, 0});
    CHECK(t.at(0, ExponentVector{0, 0, 0, 0}) == 1);
    CHECK(t.at(1, ExponentVector{1, 1, 0, 0}) == 1);
    CHECK(t.at(1, ExponentVector{0, 1, 1, 0}) == 1);
    CHECK(t.at(2, ExponentVector{1, 1, 1, 0}) == 1);
    CHECK(t.entries.size() == 4);
}

TEST_CASE("betti_table rejects general graphs and oversized instances") {
    CHECK_THROWS_AS(betti_table(graph_from_edges(3, {{1, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(betti_table(path_graph(30)), ResourceError);
}
