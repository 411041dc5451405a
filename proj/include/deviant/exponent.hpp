#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace deviant {

// Multidegree in N^n, 0-indexed internally; variables are 1-based in all
// user-facing notation.
struct ExponentVector {
    std::vector<int> c;

    ExponentVector() = default;
    explicit ExponentVector(int n) : c(n, 0) {}
    ExponentVector(std::initializer_list<int> init) : c(init) {}
    explicit ExponentVector(std::vector<int> v) : c(std::move(v)) {}

    int n() const { return static_cast<int>(c.size()); }
    int operator[](int i) const { return c[i]; }
    int& operator[](int i) { return c[i]; }

    int norm() const { return std::accumulate(c.begin(), c.end(), 0); }

    // 1-based support indices, increasing.
    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < n(); ++i)
            if (c[i] > 0) s.push_back(i + 1);
        return s;
    }

    bool is_zero() const {
        for (int x : c)
            if (x != 0) return false;
        return true;
    }

    bool is_squarefree() const {
        for (int x : c)
            if (x > 1) return false;
        return true;
    }

    bool divides(const ExponentVector& o) const {  // componentwise <=
        if (n() != o.n()) return false;
        for (int i = 0; i < n(); ++i)
            if (c[i] > o.c[i]) return false;
        return true;
    }

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
        if (a.n() != b.n()) throw std::invalid_argument("exponent size mismatch");
        ExponentVector r(a.n());
        for (int i = 0; i < a.n(); ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }

    friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
        if (a.n() != b.n()) throw std::invalid_argument("exponent size mismatch");
        ExponentVector r(a.n());
        for (int i = 0; i < a.n(); ++i) {
            r.c[i] = a.c[i] - b.c[i];
            if (r.c[i] < 0) throw std::invalid_argument("negative exponent");
        }
        return r;
    }

    // Lex order; doubles as the deterministic iteration order everywhere.
    friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) = default;

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < n(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }
};

inline ExponentVector unit_vector(int n, int i) {  // i is 1-based
    ExponentVector v(n);
    v[i - 1] = 1;
    return v;
}

inline ExponentVector ones(int n) {
    ExponentVector v(n);
    for (int i = 0; i < n; ++i) v[i] = 1;
    return v;
}

inline ExponentVector constant_vector(int n, int val) {
    ExponentVector v(n);
    for (int i = 0; i < n; ++i) v[i] = val;
    return v;
}

// v with one zero appended (the standard inclusion into one more variable).
inline ExponentVector append_zero(const ExponentVector& v) {
    ExponentVector w = v;
    w.c.push_back(0);
    return w;
}

}  // namespace deviant
