#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "deviant/errors.hpp"
#include "deviant/series.hpp"
#include "doctest.h"

using namespace deviant;

TEST_CASE("univariate product and inverse agree on small closed forms") {
    // (1+z)(1-z) = 1 - z^2
    UniSeries a{1, 1}, b{1, -1};
    a.a.resize(6, 0);
    b.a.resize(6, 0);
    UniSeries ab = uni_mul(a, b);
    CHECK(ab == UniSeries{1, 0, -1, 0, 0, 0});

    // 1/(1-z) = 1 + z + z^2 + ...
    UniSeries inv = uni_inv(b);
    for (int i = 0; i <= 5; ++i) CHECK(inv[i] == 1);
}

TEST_CASE("random unit series invert exactly both ways") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        int D = 1 + static_cast<int>(rng() % 12);
        UniSeries a(D);
        a[0] = 1;
        for (int i = 1; i <= D; ++i)
            a[i] = static_cast<int>(rng() % 9) - 4;
        UniSeries inv = uni_inv(a);
        CHECK(uni_mul(a, inv) == uni_one(D));
        CHECK(uni_inv(inv) == a);
    }
}

TEST_CASE("binomial powers match hand expansions, negative exponents included") {
    // (1 - z^2)^3 = 1 - 3z^2 + 3z^4 - z^6
    CHECK(uni_binomial_power(6, 2, -1, 3) == UniSeries{1, 0, -3, 0, 3, 0, -1});
    // (1 + z)^-2 = sum (-1)^k (k+1) z^k
    UniSeries s = uni_binomial_power(5, 1, 1, -2);
    for (int k = 0; k <= 5; ++k)
        CHECK(s[k] == (k % 2 == 0 ? Int(k + 1) : Int(-(k + 1))));
    // consistency with uni_mul: (1+z^3)^2 * (1+z^3)^-2 = 1
    UniSeries p = uni_binomial_power(9, 3, 1, 2);
    UniSeries q = uni_binomial_power(9, 3, 1, -2);
    CHECK(uni_mul(p, q) == uni_one(9));
}

TEST_CASE("multivariate series respect the truncation box") {
    MultiSeries s(ExponentVector{2, 1}, 2);
    s.add(ExponentVector{1, 0}, 3);
    s.add(ExponentVector{2, 1}, 7);   // norm 3 > degree bound: dropped
    s.add(ExponentVector{0, 2}, 5);   // exceeds cap componentwise: dropped
    CHECK(s.coeff(ExponentVector{1, 0}) == 3);
    CHECK(s.coeff(ExponentVector{2, 1}) == 0);
    CHECK(s.coeff(ExponentVector{0, 2}) == 0);
    CHECK(s.t.size() == 1);
}

TEST_CASE("multivariate product expands (1+x1)(1+x2) inside the box") {
    MultiSeries a = multi_one(ExponentVector{1, 1}, 2);
    a.add(ExponentVector{1, 0}, 1);
    MultiSeries b = multi_one(ExponentVector{1, 1}, 2);
    b.add(ExponentVector{0, 1}, 1);
    MultiSeries ab = multi_mul(a, b);
    CHECK(ab.coeff(ExponentVector{0, 0}) == 1);
    CHECK(ab.coeff(ExponentVector{1, 0}) == 1);
    CHECK(ab.coeff(ExponentVector{0, 1}) == 1);
    CHECK(ab.coeff(ExponentVector{1, 1}) == 1);
}

TEST_CASE("binomial multiplication is inverse to its negative exponent") {
    MultiSeries s = multi_one(ExponentVector{2, 2, 2}, 5);
    s.add(ExponentVector{1, 1, 0}, -2);
    s.add(ExponentVector{0, 1, 1}, 4);
    s.add(ExponentVector{1, 1, 1}, 1);
    MultiSeries t = s;
    multi_mul_binomial(t, ExponentVector{1, 0, 1}, 3);
    multi_mul_binomial(t, ExponentVector{1, 0, 1}, -3);
    CHECK(t == s);
}

TEST_CASE("vector enumeration counts norms and boxes") {
    ExponentVector cap{1, 1, 1};
    CHECK(vectors_of_norm(cap, 1).size() == 3);
    CHECK(vectors_of_norm(cap, 2).size() == 3);
    CHECK(vectors_of_norm(cap, 3).size() == 1);
    CHECK(vectors_in_box(cap, 3).size() == 8);
    CHECK(vectors_in_box(cap, 1).size() == 4);  // zero plus the three units
    CHECK(vectors_of_norm(ExponentVector{2, 1}, 2).size() == 2);
}

TEST_CASE("deviation extraction recovers the hypersurface k[x]/(x^2)") {
    // HS = 1 + z, so P(z) = 1/HS(-z) = 1/(1-z); deviations are 1,1,0,0,...
    UniSeries hs_neg{1, -1};
    hs_neg.a.resize(9, 0);
    auto eps = extract_deviations_uni(uni_inv(hs_neg));
    CHECK(eps[1] == 1);
    CHECK(eps[2] == 1);
    for (int s = 3; s <= 8; ++s) CHECK(eps[s] == 0);
}

TEST_CASE("deviation extraction recovers the polynomial ring") {
    // HS = 1/(1-z): P(z) = 1/HS(-z) = 1 + z
    UniSeries p{1, 1};
    p.a.resize(7, 0);
    auto eps = extract_deviations_uni(p);
    CHECK(eps[1] == 1);
    for (int s = 2; s <= 6; ++s) CHECK(eps[s] == 0);
}

TEST_CASE("extraction rejects series that are not deviation products") {
    UniSeries p{1, -1};  // eps_1 = -1 < 0
    p.a.resize(5, 0);
    CHECK_THROWS_AS(extract_deviations_uni(p), ExtractionError);
}

TEST_CASE("multigraded extraction recovers the complete intersection k[x,y]/(xy)") {
    // HS has support on the axes only; deviations: the two variables and the
    // single relation at (1,1)
    ExponentVector cap{3, 3};
    MultiSeries hs(cap, 6);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            if (i == 0 || j == 0) hs.add(ExponentVector{i, j}, 1);
    auto eps = extract_deviations_multi(hs);
    Int nonzero = 0;
    for (const auto& [v, e] : eps)
        if (e != 0) ++nonzero;
    CHECK(nonzero == 3);
    CHECK(eps[ExponentVector{1, 0}] == 1);
    CHECK(eps[ExponentVector{0, 1}] == 1);
    CHECK(eps[ExponentVector{1, 1}] == 1);
}
