#include "deviant/series.hpp"

namespace deviant {

UniSeries uni_mul(const UniSeries& a, const UniSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("uni_mul: truncation orders differ");
    const int D = a.order();
    UniSeries r(D);
    for (int i = 0; i <= D; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= D; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

UniSeries uni_inv(const UniSeries& a) {
    if (a.a.empty() || (a[0] != 1 && a[0] != -1))
        throw std::invalid_argument("uni_inv: constant term must be 1 or -1");
    const int D = a.order();
    UniSeries b(D);
    b[0] = a[0];  // 1/(+-1) = +-1
    for (int k = 1; k <= D; ++k) {
        Int s = 0;
        for (int j = 1; j <= k; ++j) s += a[j] * b[k - j];
        b[k] = -a[0] * s;
    }
    return b;
}

UniSeries uni_binomial_power(int D, int i, int sign, const Int& e) {
    if (i <= 0 || (sign != 1 && sign != -1))
        throw std::invalid_argument("uni_binomial_power: bad arguments");
    UniSeries r(D);
    Int coef = 1;  // binomial(e, m), computed incrementally
    for (int m = 0; m * i <= D; ++m) {
        if (m > 0) {
            coef *= e - (m - 1);
            coef /= m;
        }
        r[m * i] = (sign == -1 && m % 2 == 1) ? -coef : coef;
        if (coef == 0) break;  // e >= 0 exhausted
    }
    return r;
}

std::map<int, Int> extract_deviations_uni(const UniSeries& P) {
    if (P.a.empty() || P[0] != 1)
        throw std::invalid_argument("extract_deviations_uni: constant term must be 1");
    const int D = P.order();
    UniSeries Q = P;
    std::map<int, Int> eps;
    for (int i = 1; i <= D; ++i) {
        Int e = Q[i];
        if (e < 0)
            throw ExtractionError("not a deviation sequence: negative value at degree " +
                                  std::to_string(i));
        eps[i] = e;
        if (e == 0) continue;
        // peel the factor: odd i divide by (1+z^i)^e, even i multiply by (1-z^i)^e
        Q = uni_mul(Q, uni_binomial_power(D, i, i % 2 ? 1 : -1, i % 2 ? -e : e));
    }
    return eps;
}

MultiSeries multi_mul(const MultiSeries& a, const MultiSeries& b) {
    if (a.cap != b.cap || a.degree_bound != b.degree_bound)
        throw std::invalid_argument("multi_mul: truncations differ");
    MultiSeries r(a.cap, a.degree_bound);
    for (const auto& [u, cu] : a.t)
        for (const auto& [v, cv] : b.t) {
            if (u.norm() + v.norm() > r.degree_bound) continue;
            bool ok = true;
            ExponentVector w(u.n());
            for (int i = 0; i < u.n(); ++i) {
                w[i] = u[i] + v[i];
                if (w[i] > r.cap[i]) {
                    ok = false;
                    break;
                }
            }
            if (ok) r.add(w, cu * cv);
        }
    return r;
}

void multi_mul_binomial(MultiSeries& a, const ExponentVector& v, const Int& e) {
    if (v.n() != a.n()) throw std::invalid_argument("multi_mul_binomial: size mismatch");
    if (e < 0) throw std::invalid_argument("multi_mul_binomial: negative exponent");
    if (e == 0) return;
    const int dv = v.norm();
    if (dv == 0) throw std::invalid_argument("multi_mul_binomial: v must be nonzero");
    MultiSeries r(a.cap, a.degree_bound);
    for (const auto& [u, cu] : a.t) {
        ExponentVector w = u;
        Int coef = 1;  // binomial(e, m) * (-1)^m
        for (int m = 0;; ++m) {
            if (m > 0) {
                coef *= e - (m - 1);
                coef /= m;
                coef = -coef;
                if (coef == 0) break;
                bool ok = w.norm() + dv <= a.degree_bound;
                for (int i = 0; ok && i < w.n(); ++i)
                    if (w[i] + v[i] > a.cap[i]) ok = false;
                if (!ok) break;
                for (int i = 0; i < w.n(); ++i) w[i] += v[i];
            }
            r.add(w, coef * cu);
        }
    }
    a.t.swap(r.t);
}

namespace {

void norm_rec(const ExponentVector& cap, int pos, int rest, ExponentVector& cur,
              std::vector<ExponentVector>& out) {
    if (pos == cap.n()) {
        if (rest == 0) out.push_back(cur);
        return;
    }
    // lex order: highest value first in the leading coordinate
    int hi = std::min(cap[pos], rest);
    for (int x = 0; x <= hi; ++x) {
        cur[pos] = x;
        norm_rec(cap, pos + 1, rest - x, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<ExponentVector> vectors_of_norm(const ExponentVector& cap, int d) {
    std::vector<ExponentVector> out;
    ExponentVector cur(cap.n());
    norm_rec(cap, 0, d, cur, out);
    return out;
}

std::vector<ExponentVector> vectors_in_box(const ExponentVector& cap, int degree_bound) {
    std::vector<ExponentVector> out;
    for (int d = 0; d <= degree_bound; ++d) {
        auto layer = vectors_of_norm(cap, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::map<ExponentVector, Int> extract_deviations_multi(const MultiSeries& HS) {
    if (HS.coeff(ExponentVector(HS.n())) != 1)
        throw std::invalid_argument("extract_deviations_multi: constant term must be 1");
    // L carries the odd-norm factors times HS; R carries the even-norm factors.
    MultiSeries L = HS;
    MultiSeries R = multi_one(HS.cap, HS.degree_bound);
    std::map<ExponentVector, Int> eps;
    for (int d = 1; d <= HS.degree_bound; ++d) {
        const bool odd = d % 2 == 1;
        for (const ExponentVector& v : vectors_of_norm(HS.cap, d)) {
            Int diff = L.coeff(v) - R.coeff(v);
            Int e = odd ? diff : -diff;
            if (e < 0)
                throw ExtractionError("not a deviation sequence: negative value at " + v.str());
            if (e == 0) continue;
            eps[v] = e;
            multi_mul_binomial(odd ? L : R, v, e);
        }
    }
    if (!(L.t == R.t))
        throw ExtractionError("extraction residual nonzero: input not Koszul-consistent");
    return eps;
}

}  // namespace deviant
