#pragma once

// Dense exact linear algebra: row reduction over an arbitrary field type,
// fraction-free Bareiss rank over the integers, and a small prime field.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "deviant/numeric.hpp"

namespace deviant {

template <class F>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<F> a;  // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    F& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const F& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const Mat&) const = default;
};

template <class F, class G>
Mat<F> mat_cast(const Mat<G>& m) {
    Mat<F> r(m.rows, m.cols);
    for (size_t k = 0; k < m.a.size(); ++k) r.a[k] = F(m.a[k]);
    return r;
}

template <class F>
Mat<F> hconcat(const Mat<F>& a, const Mat<F>& b) {
    if (a.rows != b.rows) throw std::invalid_argument("hconcat: row mismatch");
    Mat<F> r(a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) r(i, j) = a(i, j);
        for (int j = 0; j < b.cols; ++j) r(i, a.cols + j) = b(i, j);
    }
    return r;
}

template <class F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat<F> r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const F& x = a(i, k);
            if (x == F(0)) continue;
            for (int j = 0; j < b.cols; ++j) r(i, j) = r(i, j) + x * b(k, j);
        }
    return r;
}

template <class F>
std::vector<F> mat_apply(const Mat<F>& a, const std::vector<F>& x) {
    if (a.cols != static_cast<int>(x.size()))
        throw std::invalid_argument("mat_apply: shape mismatch");
    std::vector<F> y(a.rows, F(0));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (!(a(i, j) == F(0))) y[i] = y[i] + a(i, j) * x[j];
    return y;
}

// in-place reduced row echelon form; returns the pivot columns
template <class F>
std::vector<int> rref(Mat<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!(m(i, c) == F(0))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        F inv = F(1) / m(r, c);
        for (int j = c; j < m.cols; ++j) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            F f = m(i, c);
            if (f == F(0)) continue;
            for (int j = c; j < m.cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(Mat<F> m) {
    return static_cast<int>(rref(m).size());
}

// columns form a basis of the right kernel, in free-column order
template <class F>
Mat<F> kernel_basis(const Mat<F>& m0) {
    Mat<F> m = m0;
    std::vector<int> piv = rref(m);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    Mat<F> ker(m.cols, m.cols - static_cast<int>(piv.size()));
    int col = 0;
    for (int f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        ker(f, col) = F(1);
        for (int r = 0; r < static_cast<int>(piv.size()); ++r)
            ker(piv[r], col) = F(0) - m(r, f);
        ++col;
    }
    return ker;
}

// one solution of A x = b, or nullopt if inconsistent
template <class F>
std::optional<std::vector<F>> solve(const Mat<F>& A, const std::vector<F>& b) {
    if (A.rows != static_cast<int>(b.size()))
        throw std::invalid_argument("solve: shape mismatch");
    Mat<F> m(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) m(i, j) = A(i, j);
        m(i, A.cols) = b[i];
    }
    std::vector<int> piv = rref(m);
    if (!piv.empty() && piv.back() == A.cols) return std::nullopt;
    std::vector<F> x(A.cols, F(0));
    for (int r = 0; r < static_cast<int>(piv.size()); ++r) x[piv[r]] = m(r, A.cols);
    return x;
}

// fraction-free elimination (Bareiss); exact over the integers
inline int rank_bareiss(Mat<Int> m) {
    int r = 0;
    Int prev = 1;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        for (int i = r + 1; i < m.rows; ++i) {
            for (int j = c + 1; j < m.cols; ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

// prime field with a per-thread runtime modulus
class Fp {
public:
    Fp() = default;
    Fp(long long x) {
        check();
        v_ = x % p_;
        if (v_ < 0) v_ += p_;
    }
    explicit Fp(const Int& x) : Fp(static_cast<long long>(x % p_)) {}

    static void set_modulus(long long p) {
        if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
        p_ = p;
    }
    static long long modulus() { return p_; }

    long long value() const { return v_; }

    friend Fp operator+(Fp a, Fp b) { return Fp(a.v_ + b.v_); }
    friend Fp operator-(Fp a, Fp b) { return Fp(a.v_ - b.v_); }
    friend Fp operator*(Fp a, Fp b) { return Fp(a.v_ * b.v_); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    bool operator==(const Fp&) const = default;

    Fp inverse() const {
        check();
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        // extended Euclid
        long long a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            long long q = a / b;
            a -= q * b;
            std::swap(a, b);
            x0 -= q * x1;
            std::swap(x0, x1);
        }
        return Fp(x0);
    }

private:
    static void check() {
        if (p_ < 2) throw std::logic_error("Fp: modulus not set");
    }
    long long v_ = 0;
    static inline thread_local long long p_ = 0;
};

}  // namespace deviant
