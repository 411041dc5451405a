#pragma once

#include <map>
#include <string>
#include <vector>

#include "deviant/errors.hpp"
#include "deviant/exponent.hpp"
#include "deviant/numeric.hpp"

namespace deviant {

// ---------------------------------------------------------------------------
// Univariate truncated power series over Z.

struct UniSeries {
    std::vector<Int> a;  // a[i] = coefficient of z^i; size = order()+1

    UniSeries() = default;
    explicit UniSeries(int D) : a(D + 1, 0) {}
    UniSeries(std::initializer_list<Int> init) : a(init) {}

    int order() const { return static_cast<int>(a.size()) - 1; }
    const Int& operator[](int i) const { return a[i]; }
    Int& operator[](int i) { return a[i]; }

    friend bool operator==(const UniSeries&, const UniSeries&) = default;
};

inline UniSeries uni_one(int D) {
    UniSeries s(D);
    s[0] = 1;
    return s;
}

// Cauchy product truncated at the shared order.
UniSeries uni_mul(const UniSeries& a, const UniSeries& b);

// Multiplicative inverse; constant term must be 1 or -1.
UniSeries uni_inv(const UniSeries& a);

// (1 + sign*z^i)^e truncated at D; e may be any integer (negative = inverse
// power) of arbitrary size.
UniSeries uni_binomial_power(int D, int i, int sign, const Int& e);

// ---------------------------------------------------------------------------
// Sparse multivariate series over Z, truncated by a componentwise cap and a
// total-degree bound. Keys are kept in lex order; zero coefficients are
// never stored.

struct MultiSeries {
    ExponentVector cap;
    int degree_bound = 0;
    std::map<ExponentVector, Int> t;

    MultiSeries() = default;
    MultiSeries(ExponentVector cap_, int degree_bound_)
        : cap(std::move(cap_)), degree_bound(degree_bound_) {}

    int n() const { return cap.n(); }

    bool in_box(const ExponentVector& v) const {
        return v.norm() <= degree_bound && v.divides(cap);
    }

    Int coeff(const ExponentVector& v) const {
        auto it = t.find(v);
        return it == t.end() ? Int(0) : it->second;
    }

    void add(const ExponentVector& v, const Int& c) {  // drops out-of-box terms
        if (c == 0 || !in_box(v)) return;
        Int& slot = t[v];
        slot += c;
        if (slot == 0) t.erase(v);
    }

    friend bool operator==(const MultiSeries& x, const MultiSeries& y) {
        return x.cap == y.cap && x.degree_bound == y.degree_bound && x.t == y.t;
    }
};

inline MultiSeries multi_one(ExponentVector cap, int degree_bound) {
    MultiSeries s(std::move(cap), degree_bound);
    s.t[ExponentVector(s.n())] = 1;
    return s;
}

// Truncated product; cap and degree_bound must match.
MultiSeries multi_mul(const MultiSeries& a, const MultiSeries& b);

// a *= (1 - xi^v)^e in place, truncated. e >= 0.
void multi_mul_binomial(MultiSeries& a, const ExponentVector& v, const Int& e);

// All u <= cap with ||u|| == d, in lex order.
std::vector<ExponentVector> vectors_of_norm(const ExponentVector& cap, int d);

// All u <= cap with ||u|| <= degree_bound, ordered by (norm, lex).
std::vector<ExponentVector> vectors_in_box(const ExponentVector& cap, int degree_bound);

// ---------------------------------------------------------------------------
// Deviations.

struct DeviationTable {
    std::map<int, Int> graded;                  // s -> eps_s, populated 1..smax
    std::map<ExponentVector, Int> multigraded;  // v -> eps_v, nonzero entries
    // source / truncation metadata
    std::string kind;  // "path" | "cycle" | "general" | "series"
    int n = 0;
    int smax = 0;
    ExponentVector cap;     // empty if multigraded part not populated
    int degree_bound = 0;

    Int graded_at(int s) const {
        auto it = graded.find(s);
        return it == graded.end() ? Int(0) : it->second;
    }
    Int multigraded_at(const ExponentVector& v) const {
        auto it = multigraded.find(v);
        return it == multigraded.end() ? Int(0) : it->second;
    }
    // sum of multigraded entries over ||v|| == s
    Int norm_sum(int s) const {
        Int acc = 0;
        for (const auto& [v, e] : multigraded)
            if (v.norm() == s) acc += e;
        return acc;
    }
};

// eps_1..eps_D from a Poincare series with constant term 1, by peeling the
// product expansion  P = prod_{odd i}(1+z^i)^{eps_i} / prod_{even i}(1-z^i)^{eps_i}.
std::map<int, Int> extract_deviations_uni(const UniSeries& P);

// eps_v for all v <= cap, ||v|| <= degree_bound, from the multigraded Hilbert
// series of a Koszul quotient, by peeling
//   prod_{||v|| odd}(1-xi^v)^{eps_v} * HS = prod_{||v|| even}(1-xi^v)^{eps_v}
// in increasing norm then lex order. Verifies the residual vanishes.
std::map<ExponentVector, Int> extract_deviations_multi(const MultiSeries& HS);

}  // namespace deviant
