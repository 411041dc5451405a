#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>

#include "deviant/betti.hpp"
#include "deviant/dgmodel.hpp"
#include "deviant/exactla.hpp"
#include "deviant/koszul.hpp"
#include "doctest.h"

using namespace deviant;

namespace {

ModelMonomial mono(int n, std::vector<ModelVariable> vars) {
    auto [m, sign] = monomial_of(ExponentVector(n), std::move(vars));
    REQUIRE(sign == 1);
    return m;
}

ModelSum add_scaled(ModelSum a, const ModelSum& b, const Int& c) {
    for (const auto& [m, x] : b) {
        a[m] += c * x;
        if (a[m] == 0) a.erase(m);
    }
    return a;
}

}  // namespace

TEST_CASE("model variables know their degrees and supports") {
    ModelVariable x = path_x(7, 2, 5);
    CHECK(x.hom_degree() == 3);
    CHECK(x.mdeg() == ExponentVector{0, 1, 1, 1, 1, 0, 0});
    CHECK(x.min_support() == 2);

    ModelVariable wrapped = cycle_x(5, 4, 2);
    CHECK(wrapped.hom_degree() == 3);
    CHECK(wrapped.mdeg() == ExponentVector{1, 1, 0, 1, 1});
    CHECK(wrapped.min_support() == 4);

    ModelVariable w = cycle_w(6, 3);
    CHECK(w.hom_degree() == 5);
    CHECK(w.mdeg() == ones(6));

    CHECK_THROWS_AS(path_x(5, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(path_x(5, 2, 6), std::invalid_argument);
    CHECK_THROWS_AS(cycle_x(5, 2, 1), std::invalid_argument);  // full circle
    CHECK_THROWS_AS(cycle_w(5, 5), std::invalid_argument);
}

TEST_CASE("the differential of x[1,4] has its three signed terms") {
    ModelSum d = variable_differential(path_x(7, 1, 4));
    REQUIRE(d.size() == 3);

    ModelMonomial t1x24{ExponentVector{1, 0, 0, 0, 0, 0, 0}, {path_x(7, 2, 4)}};
    ModelMonomial x12x34 = mono(7, {path_x(7, 1, 2), path_x(7, 3, 4)});
    ModelMonomial x13t4{ExponentVector{0, 0, 0, 1, 0, 0, 0}, {path_x(7, 1, 3)}};
    CHECK(d.at(t1x24) == 1);
    CHECK(d.at(x12x34) == -1);
    CHECK(d.at(x13t4) == 1);

    CHECK(render(d) == "-x[1,2]*x[3,4] + T4*x[1,3] + T1*x[2,4]");

    ModelSum r = reduced_differential(path_x(7, 1, 4));
    REQUIRE(r.size() == 1);
    CHECK(r.at(x12x34) == -1);
}

TEST_CASE("the differential of a wrapped cycle variable follows the circle") {
    ModelSum d = variable_differential(cycle_x(7, 4, 1));
    REQUIRE(d.size() == 4);
    ModelMonomial t4x51{ExponentVector{0, 0, 0, 1, 0, 0, 0}, {cycle_x(7, 5, 1)}};
    CHECK(d.at(t4x51) == 1);
    CHECK(d.at(mono(7, {cycle_x(7, 4, 5), cycle_x(7, 6, 1)})) == -1);
    CHECK(d.at(mono(7, {cycle_x(7, 4, 6), cycle_x(7, 7, 1)})) == 1);
    ModelMonomial x47t1{ExponentVector{1, 0, 0, 0, 0, 0, 0}, {cycle_x(7, 4, 7)}};
    CHECK(d.at(x47t1) == -1);
}

TEST_CASE("an edge variable bounds the product of its endpoints") {
    ModelSum d = variable_differential(path_x(4, 1, 2));
    REQUIRE(d.size() == 1);
    ModelMonomial t1t2{ExponentVector{1, 1, 0, 0}, {}};
    CHECK(d.at(t1t2) == 1);
    CHECK(reduced_differential(path_x(4, 1, 2)).empty());
    CHECK(reduced_differential(path_x(5, 1, 3)).empty());
}

TEST_CASE("the reduced differential of w1 alternates over splittings") {
    ModelSum r = reduced_differential(cycle_w(7, 1));
    REQUIRE(r.size() == 4);
    CHECK(r.at(mono(7, {cycle_x(7, 1, 2), cycle_x(7, 3, 7)})) == -1);
    CHECK(r.at(mono(7, {cycle_x(7, 1, 3), cycle_x(7, 4, 7)})) == 1);
    CHECK(r.at(mono(7, {cycle_x(7, 1, 4), cycle_x(7, 5, 7)})) == -1);
    CHECK(r.at(mono(7, {cycle_x(7, 1, 5), cycle_x(7, 6, 7)})) == 1);
}

TEST_CASE("the differential squares to zero on every variable of small models") {
    const int n = 6;
    for (int p = 1; p < n; ++p)
        for (int q = p + 1; q <= n; ++q)
            CHECK(differential(variable_differential(path_x(n, p, q))).empty());
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
            if (p == q || p == q % n + 1) continue;
            CHECK(differential(variable_differential(cycle_x(n, p, q))).empty());
        }
    for (int i = 1; i < n; ++i)
        CHECK(differential(variable_differential(cycle_w(n, i))).empty());
}

TEST_CASE("monomial normal forms track Koszul signs") {
    // two odd variables anticommute
    auto [m, sign] = monomial_of(ExponentVector(4), {path_x(4, 3, 4), path_x(4, 1, 2)});
    CHECK(sign == -1);
    CHECK(m.vars == std::vector<ModelVariable>{path_x(4, 1, 2), path_x(4, 3, 4)});

    // an odd variable squares to zero
    auto [mz, sz] = monomial_of(ExponentVector(6), {path_x(6, 1, 2), path_x(6, 1, 2)});
    CHECK(sz == 0);

    // overlapping supports leave the squarefree strand
    CHECK_THROWS_AS(monomial_of(ExponentVector(4), {path_x(4, 1, 2), path_x(4, 2, 3)}),
                    std::invalid_argument);

    // odd-even pairs commute without sign
    auto [me, se] = monomial_of(ExponentVector(6), {path_x(6, 4, 6), path_x(6, 1, 2)});
    CHECK(se == 1);
    CHECK(me.vars.front() == path_x(6, 1, 2));
}

TEST_CASE("the product rule holds for the Leibniz extension") {
    ModelSum a{{mono(7, {path_x(7, 1, 3)}), 1}};   // even degree 2
    ModelSum b{{mono(7, {path_x(7, 4, 6)}), 1}};
    ModelSum lhs = differential(model_product(a, b));
    ModelSum rhs = add_scaled(model_product(differential(a), b),
                              model_product(a, differential(b)), 1);
    CHECK(lhs == rhs);

    ModelSum ao{{mono(7, {path_x(7, 1, 2)}), 1}};  // odd degree 1
    lhs = differential(model_product(ao, b));
    rhs = add_scaled(model_product(differential(ao), b),
                     model_product(ao, differential(b)), -1);
    CHECK(lhs == rhs);
}

TEST_CASE("strands of the path model resolve as expected") {
    StrandOfModel s = strand_of_model(GraphKind::path, 4, ones(4));
    CHECK(s.dim(2) == 1);
    CHECK(s.dim(3) == 1);
    CHECK(s.dim(1) == 0);

    ModelMonomial pair = mono(4, {path_x(4, 1, 2), path_x(4, 3, 4)});
    ModelMonomial whole = mono(4, {path_x(4, 1, 4)});
    CHECK(s.index_of(2, pair) == 0);
    CHECK(s.index_of(3, whole) == 0);
    CHECK(s.index_of(2, whole) == -1);

    CHECK(is_cycle(s, pair));
    CHECK(is_boundary(s, pair));      // = d(-x[1,4])
    CHECK_FALSE(is_cycle(s, whole));

    StrandOfModel t = strand_of_model(GraphKind::path, 3, ones(3));
    CHECK(t.dim(2) == 1);
    ModelMonomial x13 = mono(3, {path_x(3, 1, 3)});
    CHECK(is_cycle(t, x13));
    CHECK_FALSE(is_boundary(t, x13));
}

TEST_CASE("model homology reproduces the Betti tables") {
    for (int n = 3; n <= 6; ++n) {
        CHECK(model_homology(GraphKind::path, n, ones(n)) == betti_table(path_graph(n)));
        CHECK(model_homology(GraphKind::cycle, n, ones(n)) == betti_table(cycle_graph(n)));
    }
    // the two full-support cycle headlines
    BettiTable c6 = model_homology(GraphKind::cycle, 6, ones(6));
    CHECK(c6.at(4, ones(6)) == 2);
    BettiTable c7 = model_homology(GraphKind::cycle, 7, ones(7));
    CHECK(c7.at(5, ones(7)) == 1);
    CHECK(c7 == betti_table(cycle_graph(7)));
}

TEST_CASE("model homology over a prime field matches the rationals") {
    CHECK(model_homology(GraphKind::cycle, 5, ones(5), 2) ==
          model_homology(GraphKind::cycle, 5, ones(5)));
}

TEST_CASE("index pairs build the B monomials when the inequalities hold") {
    IndexPair pq{{1, 4}, {3, 5}};
    auto [m, sign] = b_monomial(6, pq);
    CHECK(sign == 1);
    CHECK(m.vars == std::vector<ModelVariable>{path_x(6, 1, 3), path_x(6, 4, 5)});

    // cyclic pairs reduce indices above n
    auto [mt, st] = bt_monomial(5, IndexPair{{4}, {7}});
    CHECK(st == 1);
    CHECK(mt.vars == std::vector<ModelVariable>{cycle_x(5, 4, 2)});

    CHECK_THROWS_AS(b_monomial(6, IndexPair{{1, 3}, {3, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(b_monomial(4, IndexPair{{1, 3}, {2, 6}}), std::invalid_argument);
    // q1 must stay below p1 + n - 1
    CHECK_THROWS_AS(bt_monomial(5, IndexPair{{1}, {5}}), std::invalid_argument);
}

TEST_CASE("gamma indices list the contractions and their deletions") {
    GammaDeletions g = gamma_indices(IndexPair{{1, 4, 7, 11, 14}, {3, 5, 9, 13, 15}});
    CHECK(g.gamma == std::vector<int>{2, 5});
    REQUIRE(g.deleted.size() == 2);
    CHECK(g.deleted[0].p == std::vector<int>{1, 7, 11, 14});
    CHECK(g.deleted[0].q == std::vector<int>{5, 9, 13, 15});
    CHECK(g.deleted[1].p == std::vector<int>{1, 4, 7, 14});
    CHECK(g.deleted[1].q == std::vector<int>{3, 5, 9, 15});

    CHECK(gamma_indices(IndexPair{{1}, {3}}).gamma.empty());
    CHECK(gamma_indices(IndexPair{{1, 3}, {2, 5}}).gamma == std::vector<int>{2});
}

TEST_CASE("the star conditions accept short gapped blocks only") {
    CHECK(star_conditions(IndexPair{{1, 4}, {3, 5}}));       // norms 3,2
    CHECK(star_conditions(IndexPair{{1, 4}, {2, 6}}));       // gapped length-1 block
    CHECK_FALSE(star_conditions(IndexPair{{1, 3}, {2, 4}})); // length-1 block abuts
    CHECK_FALSE(star_conditions(IndexPair{{1}, {4}}));       // block too long
}

TEST_CASE("the cyclic star conditions also watch the wrap-around") {
    // on the 5-cycle, blocks {1,2} and {4,5} abut across the wrap: the merged
    // variable xt[4,2] bounds the monomial
    IndexPair pq{{1, 4}, {2, 5}};
    CHECK(star_conditions(pq));
    CHECK_FALSE(star_conditions(5, pq));
    auto [m, sign] = bt_monomial(5, pq);
    StrandOfModel s = strand_of_model(GraphKind::cycle, 5, m.mdeg());
    CHECK(is_cycle(s, m));
    CHECK(is_boundary(s, m));

    // full support is exempt: no merged variable exists there
    IndexPair full{{1, 4}, {3, 5}};
    CHECK(star_conditions(5, full));
    auto [fm, fs] = bt_monomial(5, full);
    StrandOfModel sf = strand_of_model(GraphKind::cycle, 5, ones(5));
    CHECK(is_cycle(sf, fm));
    CHECK_FALSE(is_boundary(sf, fm));

    // no wrap adjacency: plain star conditions carry over
    CHECK(star_conditions(7, IndexPair{{1, 4}, {2, 6}}));
}

TEST_CASE("every star-admissible monomial is a non-bounding cycle at n = 5") {
    for (int cyclic = 0; cyclic <= 1; ++cyclic) {
        GraphKind kind = cyclic ? GraphKind::cycle : GraphKind::path;
        int checked = 0;
        for (const IndexPair& pq : admissible_pairs(5, cyclic)) {
            if (!(cyclic ? star_conditions(5, pq) : star_conditions(pq))) continue;
            auto [m, sign] = cyclic ? bt_monomial(5, pq) : b_monomial(5, pq);
            StrandOfModel s = strand_of_model(kind, 5, m.mdeg());
            CHECK(is_cycle(s, m));
            CHECK_FALSE(is_boundary(s, m));
            ++checked;
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("the coefficient identity for contractions holds on random pairs") {
    std::mt19937 rng(7);
    auto check_pair = [&](int n, bool cyclic, const IndexPair& pq) {
        GammaDeletions g = gamma_indices(pq);
        REQUIRE_FALSE(g.gamma.empty());
        auto target = cyclic ? bt_monomial(n, pq) : b_monomial(n, pq);
        ModelSum sum;
        Int expect = 0;
        for (size_t t = 0; t < g.gamma.size(); ++t) {
            Int lambda = static_cast<int>(rng() % 19) - 9;
            auto del = cyclic ? bt_monomial(n, g.deleted[t]) : b_monomial(n, g.deleted[t]);
            sum = add_scaled(sum, ModelSum{{del.first, del.second}}, lambda);
            int e = 0;
            for (int j = 0; j + 1 < g.gamma[t]; ++j) e += pq.q[j] - pq.p[j];
            expect += (e % 2 == 0 ? lambda : -lambda);
        }
        ModelSum d = differential(sum);
        Int got = 0;
        auto it = d.find(target.first);
        if (it != d.end()) got = target.second * it->second;
        CHECK(got == expect);
    };
    for (int trial = 0; trial < 10; ++trial) {
        check_pair(10, false, IndexPair{{1, 4, 6}, {3, 5, 8}});   // Gamma = {2,3}
        check_pair(9, false, IndexPair{{2, 5}, {4, 7}});          // Gamma = {2}
        check_pair(7, true, IndexPair{{1, 4}, {3, 6}});           // Gamma = {2}
        check_pair(8, true, IndexPair{{2, 5, 7}, {4, 6, 8}});     // Gamma = {2,3}
    }
}

TEST_CASE("the cycles killed by the w variables are linearly independent") {
    for (int n = 4; n <= 8; ++n) {
        std::map<ModelMonomial, int> col;
        std::vector<ModelSum> zs;
        for (int i = 1; i < n; ++i) {
            zs.push_back(variable_differential(cycle_w(n, i)));
            for (const auto& [m, c] : zs.back())
                col.emplace(m, static_cast<int>(col.size()));
        }
        Mat<Int> a(n - 1, static_cast<int>(col.size()));
        for (int i = 0; i < n - 1; ++i)
            for (const auto& [m, c] : zs[i]) a(i, col.at(m)) = c;
        CHECK(rank_bareiss(a) == n - 1);
    }
}
