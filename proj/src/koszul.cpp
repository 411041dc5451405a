#include "deviant/koszul.hpp"

#include <functional>

namespace deviant {

int merge_sign(const std::vector<int>& J1, const std::vector<int>& J2) {
    int inversions = 0;
    for (int a : J1)
        for (int b : J2) {
            if (a == b) return 0;
            if (a > b) ++inversions;
        }
    return inversions % 2 == 0 ? 1 : -1;
}

namespace {

void subsets_of_size(const std::vector<int>& pool, int k, std::vector<int>& cur,
                     size_t from, const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == k) {
        emit(cur);
        return;
    }
    for (size_t p = from; p < pool.size(); ++p) {
        cur.push_back(pool[p]);
        subsets_of_size(pool, k, cur, p + 1, emit);
        cur.pop_back();
    }
}

}  // namespace

StrandComplex build_strand(const MonomialIdeal& I, const ExponentVector& v) {
    if (I.n != v.n()) throw std::invalid_argument("build_strand: ambient size mismatch");
    const int n = I.n;
    StrandComplex s;
    s.v = v;
    std::vector<int> supp = v.support();
    const int imax = static_cast<int>(supp.size());
    s.basis.resize(imax + 1);
    for (int i = 0; i <= imax; ++i) {
        std::vector<int> cur;
        subsets_of_size(supp, i, cur, 0, [&](const std::vector<int>& J) {
            ExponentVector m = v;
            for (int j : J) m[j - 1] -= 1;
            if (!I.contains(m)) s.basis[i].push_back({std::move(m), J});
        });
    }
    // d[i]: degree i -> i-1; entry (target row, source column)
    s.d.resize(imax + 1);
    s.d[0] = Mat<int>(0, s.dim(0));
    for (int i = 1; i <= imax; ++i) {
        std::map<std::vector<int>, int> lower;
        for (int k = 0; k < s.dim(i - 1); ++k) lower[s.basis[i - 1][k].J] = k;
        Mat<int> d(s.dim(i - 1), s.dim(i));
        for (int col = 0; col < s.dim(i); ++col) {
            const StrandBasisElement& e = s.basis[i][col];
            for (size_t pos = 0; pos < e.J.size(); ++pos) {
                ExponentVector m = e.m + unit_vector(n, e.J[pos]);
                if (I.contains(m)) continue;
                std::vector<int> J = e.J;
                J.erase(J.begin() + static_cast<long>(pos));
                d(lower.at(J), col) = pos % 2 == 0 ? 1 : -1;
            }
        }
        s.d[i] = std::move(d);
    }
    for (int i = 2; i <= imax; ++i) {
        Mat<int> sq = mat_mul(s.d[i - 1], s.d[i]);
        for (int x : sq.a)
            if (x != 0) throw std::logic_error("build_strand: d o d != 0 at " + v.str());
    }
    return s;
}

BettiTable koszul_homology(const MonomialIdeal& I, const ExponentVector& cap,
                           long long prime) {
    if (prime == 0) return KoszulQ(I, cap).homology_table();
    return KoszulFp(I, cap, prime).homology_table();
}

SpanResult koszul_subalgebra_span(const MonomialIdeal& I, const ExponentVector& cap,
                                  const std::vector<std::pair<int, int>>& gen_bidegrees,
                                  long long prime) {
    if (prime == 0) return KoszulQ(I, cap).subalgebra_span(gen_bidegrees);
    return KoszulFp(I, cap, prime).subalgebra_span(gen_bidegrees);
}

DiagonalReport koszul_check_diagonals(const MonomialIdeal& I, const ExponentVector& cap,
                                      long long prime) {
    if (prime == 0) return KoszulQ(I, cap).check_diagonals();
    return KoszulFp(I, cap, prime).check_diagonals();
}

std::set<std::pair<int, int>> koszul_minimal_generators(const MonomialIdeal& I,
                                                        const ExponentVector& cap,
                                                        long long prime) {
    if (prime == 0) return KoszulQ(I, cap).minimal_generator_bidegrees();
    return KoszulFp(I, cap, prime).minimal_generator_bidegrees();
}

}  // namespace deviant
