#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "deviant/betti.hpp"
#include "deviant/ideals.hpp"
#include "deviant/koszul.hpp"
#include "doctest.h"

using namespace deviant;

TEST_CASE("merge signs are exterior-algebra signs") {
    CHECK(merge_sign({1}, {2}) == 1);
    CHECK(merge_sign({2}, {1}) == -1);
    CHECK(merge_sign({1, 3}, {2}) == -1);
    CHECK(merge_sign({1, 2}, {3, 4}) == 1);
    CHECK(merge_sign({3, 4}, {1, 2}) == 1);
    CHECK(merge_sign({1, 2}, {2, 3}) == 0);
    CHECK(merge_sign({}, {1, 2}) == 1);
}

TEST_CASE("the full-support strand of the 3-path has sizes 0,1,3,1") {
    StrandComplex s = build_strand(edge_ideal(path_graph(3)), ones(3));
    CHECK(s.dim(0) == 0);  // x1*x2*x3 lies in the ideal
    CHECK(s.dim(1) == 1);  // only x1*x3 (x) e2 survives
    CHECK(s.dim(2) == 3);
    CHECK(s.dim(3) == 1);

    KoszulQ K(edge_ideal(path_graph(3)), ones(3));
    CHECK(K.dim(0, ones(3)) == 0);
    CHECK(K.dim(1, ones(3)) == 0);
    CHECK(K.dim(2, ones(3)) == 1);
    CHECK(K.dim(3, ones(3)) == 0);
}

TEST_CASE("Koszul homology equals the closed-form Betti tables") {
    for (int n = 3; n <= 6; ++n) {
        Graph p = path_graph(n);
        CHECK(koszul_homology(edge_ideal(p), ones(n)) == betti_table(p));
        Graph c = cycle_graph(n);
        CHECK(koszul_homology(edge_ideal(c), ones(n)) == betti_table(c));
    }
}

TEST_CASE("Koszul homology over small prime fields agrees with the rationals") {
    Graph c = cycle_graph(5);
    BettiTable over_q = koszul_homology(edge_ideal(c), ones(5));
    CHECK(koszul_homology(edge_ideal(c), ones(5), 2) == over_q);
    CHECK(koszul_homology(edge_ideal(c), ones(5), 32003) == over_q);
}

TEST_CASE("homology of a disjoint union is the convolution of the factors") {
    Graph a = path_graph(2), b = path_graph(3);
    BettiTable expect;
    expect.n = 5;
    for (const auto& [k1, b1] : betti_table(a).entries)
        for (const auto& [k2, b2] : betti_table(b).entries) {
            ExponentVector v(5);
            for (int t = 0; t < 2; ++t) v[t] = k1.second[t];
            for (int t = 0; t < 3; ++t) v[2 + t] = k2.second[t];
            expect.add(k1.first + k2.first, v, b1 * b2);
        }
    Graph g = disjoint_union(a, b);
    CHECK(koszul_homology(edge_ideal(g), ones(5)) == expect);
}

TEST_CASE("the homology product is graded-commutative and boundary-independent") {
    KoszulQ K(edge_ideal(cycle_graph(6)), ones(6));
    auto a = K.homology_basis(1, ExponentVector{1, 1, 0, 0, 0, 0});
    auto b = K.homology_basis(1, ExponentVector{0, 0, 0, 1, 1, 0});
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);

    KoszulQ::Class ab = K.multiply(a[0], b[0]);
    KoszulQ::Class ba = K.multiply(b[0], a[0]);
    CHECK(K.is_cycle(ab));
    CHECK_FALSE(K.is_boundary(ab));  // beta = 1 at two norm-2 blocks
    for (size_t t = 0; t < ab.rep.size(); ++t) CHECK(ab.rep[t] == -ba.rep[t]);

    // even times odd commutes on the nose
    auto c = K.homology_basis(2, ExponentVector{1, 1, 1, 0, 0, 0});
    auto d = K.homology_basis(1, ExponentVector{0, 0, 0, 0, 1, 1});
    REQUIRE(c.size() == 1);
    REQUIRE(d.size() == 1);
    KoszulQ::Class cd = K.multiply(c[0], d[0]);
    KoszulQ::Class dc = K.multiply(d[0], c[0]);
    CHECK(cd.rep == dc.rep);
    CHECK_FALSE(K.is_boundary(cd));

    // perturbing a factor by a boundary does not move the product's class
    for (unsigned seed : {1u, 2u, 3u}) {
        KoszulQ::Class az = K.perturb_by_boundary(a[0], seed);
        CHECK(K.class_coordinates(az) == K.class_coordinates(a[0]));
        CHECK(K.class_coordinates(K.multiply(az, b[0])) == K.class_coordinates(ab));
    }
}

TEST_CASE("products are associative on sample classes") {
    KoszulQ K(edge_ideal(path_graph(8)), ones(8));
    auto a = K.homology_basis(1, ExponentVector{1, 1, 0, 0, 0, 0, 0, 0});
    auto b = K.homology_basis(1, ExponentVector{0, 0, 0, 1, 1, 0, 0, 0});
    auto c = K.homology_basis(1, ExponentVector{0, 0, 0, 0, 0, 0, 1, 1});
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    REQUIRE(c.size() == 1);
    KoszulQ::Class left = K.multiply(K.multiply(a[0], b[0]), c[0]);
    KoszulQ::Class right = K.multiply(a[0], K.multiply(b[0], c[0]));
    CHECK(left.rep == right.rep);
    CHECK_FALSE(K.is_boundary(left));
}

TEST_CASE("paths are generated in the linear strand plus (2,3)") {
    MonomialIdeal I = edge_ideal(path_graph(4));
    SpanResult span = koszul_subalgebra_span(I, ones(4), {{1, 2}, {2, 3}});
    CHECK(span.full);
    CHECK(span.gaps.empty());
    CHECK(koszul_minimal_generators(I, ones(4)) ==
          std::set<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(koszul_minimal_generators(edge_ideal(path_graph(2)), ones(2)) ==
          std::set<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("the 7-cycle needs exactly one extra generator at (5,7)") {
    MonomialIdeal I = edge_ideal(cycle_graph(7));
    SpanResult span = koszul_subalgebra_span(I, ones(7), {{1, 2}, {2, 3}});
    CHECK_FALSE(span.full);
    REQUIRE(span.gaps.size() == 1);
    CHECK(span.gaps[0].i == 5);
    CHECK(span.gaps[0].v == ones(7));
    CHECK(span.gaps[0].span_dim == 0);
    CHECK(span.gaps[0].full_dim == 1);
    CHECK(koszul_minimal_generators(I, ones(7)) ==
          std::set<std::pair<int, int>>{{1, 2}, {2, 3}, {5, 7}});

    KoszulQ K(I, ones(7));
    auto top = K.homology_basis(5, ones(7));
    REQUIRE(top.size() == 1);
    CHECK(K.subalgebra_span({{1, 2}, {2, 3}}, {top[0]}).full);
}

TEST_CASE("diagonal products generate the two top diagonals") {
    CHECK(koszul_check_diagonals(edge_ideal(path_graph(5)), ones(5)).ok);
    CHECK(koszul_check_diagonals(edge_ideal(cycle_graph(6)), ones(6)).ok);
    // squares of variables are fine for quadratic monomial ideals
    MonomialIdeal I = make_monomial_ideal(
        4, {ExponentVector{2, 0, 0, 0}, ExponentVector{1, 1, 0, 0},
            ExponentVector{0, 0, 1, 1}});
    CHECK(koszul_check_diagonals(I, I.generator_join()).ok);
    MonomialIdeal hyper = make_monomial_ideal(1, {ExponentVector{2}});
    CHECK(koszul_check_diagonals(hyper, hyper.generator_join()).ok);
}
