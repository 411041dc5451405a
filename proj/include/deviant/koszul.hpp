#pragma once

// Koszul complex K^R = R (x) Lambda(e_1..e_n) of R = S/I for a monomial ideal
// I, one multidegree strand at a time: homology dimensions and bases, the DG
// algebra product, subalgebra spans, diagonal identities, minimal generators.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "deviant/betti.hpp"
#include "deviant/errors.hpp"
#include "deviant/exactla.hpp"
#include "deviant/exponent.hpp"
#include "deviant/ideals.hpp"

namespace deviant {

struct StrandBasisElement {
    ExponentVector m;    // monomial of R, i.e. m not in I
    std::vector<int> J;  // exterior indices, sorted, 1-based
};

// the (i, v)-strand for fixed v: bases by homological degree and the
// differentials between them; d[i] maps degree i to degree i-1
struct StrandComplex {
    ExponentVector v;
    std::vector<std::vector<StrandBasisElement>> basis;
    std::vector<Mat<int>> d;

    int top() const { return static_cast<int>(basis.size()) - 1; }
    int dim(int i) const {
        return i >= 0 && i <= top() ? static_cast<int>(basis[i].size()) : 0;
    }
};

// throws std::logic_error if the assembled differentials fail d o d = 0
StrandComplex build_strand(const MonomialIdeal& I, const ExponentVector& v);

// sign of e_{J1} ^ e_{J2} -> e_{sorted merge}; 0 when the lists intersect
int merge_sign(const std::vector<int>& J1, const std::vector<int>& J2);

struct SpanGap {
    int i = 0;
    ExponentVector v;
    int span_dim = 0;
    int full_dim = 0;
};

struct SpanResult {
    std::map<std::pair<int, ExponentVector>, int> dims;  // subalgebra dims
    bool full = true;                                    // spans all of H in the box
    std::vector<SpanGap> gaps;
};

struct DiagonalReport {
    bool ok = true;
    std::vector<std::string> violations;  // witness bidegrees
};

template <class F>
class KoszulAlgebra {
public:
    // a chain of K^R_{i,v} held as coordinates in the strand basis
    struct Class {
        int i = 0;
        ExponentVector v;
        std::vector<F> rep;
    };

    KoszulAlgebra(MonomialIdeal ideal, ExponentVector cap, long long prime = 0)
        : ideal_(std::move(ideal)), cap_(std::move(cap)), prime_(prime) {
        if (ideal_.n != cap_.n())
            throw std::invalid_argument("KoszulAlgebra: cap size mismatch");
        setmod();
    }

    const MonomialIdeal& ideal() const { return ideal_; }
    const ExponentVector& cap() const { return cap_; }

    const StrandComplex& strand(const ExponentVector& v) {
        auto it = strands_.find(v);
        if (it == strands_.end())
            it = strands_.emplace(v, build_strand(ideal_, v)).first;
        return it->second;
    }

    int dim(int i, const ExponentVector& v) {
        setmod();
        const StrandComplex& s = strand(v);
        if (i < 0 || i > s.top()) return 0;
        return s.dim(i) - d_rank(v, i) - d_rank(v, i + 1);
    }

    // cycle representatives whose classes form a basis of H_{i,v}
    std::vector<Class> homology_basis(int i, const ExponentVector& v) {
        const HData& h = hdata(i, v);
        std::vector<Class> out;
        for (int c = 0; c < h.reps.cols; ++c) {
            Class z{i, v, std::vector<F>(h.reps.rows)};
            for (int r = 0; r < h.reps.rows; ++r) z.rep[r] = h.reps(r, c);
            out.push_back(std::move(z));
        }
        return out;
    }

    bool is_cycle(const Class& z) {
        setmod();
        const StrandComplex& s = strand(z.v);
        if (z.i == 0) return true;
        Mat<F> di = mat_cast<F>(s.d[z.i]);
        for (const F& c : mat_apply(di, z.rep))
            if (!(c == F(0))) return false;
        return true;
    }

    // coordinates of the class of z in the homology_basis order
    std::vector<F> class_coordinates(const Class& z) {
        const HData& h = hdata(z.i, z.v);
        if (static_cast<int>(z.rep.size()) != h.bh.rows)
            throw std::invalid_argument("class_coordinates: wrong strand");
        auto x = solve(h.bh, z.rep);
        if (!x) throw std::logic_error("class_coordinates: not a cycle");
        return std::vector<F>(x->begin() + h.b_rank, x->end());
    }

    bool is_boundary(const Class& z) {
        for (const F& c : class_coordinates(z))
            if (!(c == F(0))) return false;
        return true;
    }

    // exterior-sign product of representatives, reduced mod I
    Class multiply(const Class& a, const Class& b) {
        setmod();
        const StrandComplex& sa = strand(a.v);
        const StrandComplex& sb = strand(b.v);
        ExponentVector vv = a.v + b.v;
        const StrandComplex& st = strand(vv);
        Class out{a.i + b.i, vv, std::vector<F>(st.dim(a.i + b.i), F(0))};
        if (st.dim(out.i) == 0) return out;
        const auto& index = jindex(vv, out.i);
        for (size_t p = 0; p < a.rep.size(); ++p) {
            if (a.rep[p] == F(0)) continue;
            const StrandBasisElement& ea = sa.basis[a.i][p];
            for (size_t q = 0; q < b.rep.size(); ++q) {
                if (b.rep[q] == F(0)) continue;
                const StrandBasisElement& eb = sb.basis[b.i][q];
                int sign = merge_sign(ea.J, eb.J);
                if (sign == 0) continue;
                ExponentVector m = ea.m + eb.m;
                if (ideal_.contains(m)) continue;
                std::vector<int> J = ea.J;
                J.insert(J.end(), eb.J.begin(), eb.J.end());
                std::sort(J.begin(), J.end());
                out.rep[index.at(J)] = out.rep[index.at(J)] + a.rep[p] * b.rep[q] * F(sign);
            }
        }
        return out;
    }

    // z + d(chain) with small pseudorandom coefficients; same homology class
    Class perturb_by_boundary(const Class& z, unsigned seed) {
        setmod();
        const StrandComplex& s = strand(z.v);
        Class out = z;
        if (z.i + 1 > s.top()) return out;
        unsigned state = seed * 2654435761u + 1u;
        std::vector<F> c(s.dim(z.i + 1));
        for (F& x : c) {
            state = state * 1664525u + 1013904223u;
            x = F(static_cast<long long>(state >> 28) - 7);
        }
        std::vector<F> b = mat_apply(mat_cast<F>(s.d[z.i + 1]), c);
        for (size_t k = 0; k < out.rep.size(); ++k) out.rep[k] = out.rep[k] + b[k];
        return out;
    }

    // dims of every H_{i,v} with v <= cap
    BettiTable homology_table() {
        setmod();
        BettiTable t;
        t.n = ideal_.n;
        for (const ExponentVector& v : box()) {
            const StrandComplex& s = strand(v);
            for (int i = 0; i <= s.top(); ++i) t.add(i, v, dim(i, v));
        }
        return t;
    }

    int max_homological_degree() {
        int m = 0;
        for (const auto& [key, val] : homology_table().entries)
            m = std::max(m, key.first);
        return m;
    }

    // closure of the given generators under the product, inside the cap box;
    // generators = full homology bases at the listed (i,j) plus extras
    SpanResult subalgebra_span(const std::vector<std::pair<int, int>>& gen_bidegrees,
                               const std::vector<Class>& extra_gens = {}) {
        setmod();
        BettiTable full = homology_table();
        int imax = 0;
        for (const auto& [key, val] : full.entries) imax = std::max(imax, key.first);

        std::vector<Class> gens;
        for (const ExponentVector& v : box())
            for (auto [gi, gj] : gen_bidegrees)
                if (v.norm() == gj)
                    for (Class& c : homology_basis(gi, v)) gens.push_back(std::move(c));
        for (const Class& c : extra_gens) gens.push_back(c);

        std::map<Key, SpanBasis> spans;
        auto insert = [&](const Class& c) {
            int hd = dim(c.i, c.v);
            if (hd == 0) return;
            spans.try_emplace({c.i, c.v}, SpanBasis(hd))
                .first->second.add(class_coordinates(c));
        };
        for (const Class& g : gens) insert(g);

        for (int deg = 2; deg <= imax; ++deg) {
            // snapshot the lower-degree sources before inserting at deg
            std::vector<std::pair<Key, std::vector<std::vector<F>>>> sources;
            for (auto& [key, sp] : spans)
                if (key.first < deg) sources.push_back({key, sp.members});
            for (const Class& g : gens) {
                if (g.i >= deg) continue;
                for (auto& [key, members] : sources) {
                    if (key.first != deg - g.i) continue;
                    ExponentVector target = key.second + g.v;
                    if (!target.divides(cap_)) continue;  // H = 0 outside the box
                    for (const auto& coords : members)
                        insert(multiply(g, from_coordinates(key.first, key.second, coords)));
                }
            }
        }

        SpanResult r;
        for (auto& [key, sp] : spans) r.dims[key] = sp.size();
        for (const auto& [key, val] : full.entries) {
            if (key.first == 0) continue;  // the unit is not an algebra generator
            int got = r.dims.count({key.first, key.second})
                          ? r.dims[{key.first, key.second}]
                          : 0;
            int want = static_cast<int>(to_int64(val));
            if (got < want) {
                r.full = false;
                r.gaps.push_back({key.first, key.second, got, want});
            }
        }
        return r;
    }

    // vanishing above j = 2i plus the two diagonal product identities
    DiagonalReport check_diagonals() {
        setmod();
        BettiTable full = homology_table();
        DiagonalReport rep;
        int imax = 0;
        for (const auto& [key, val] : full.entries) {
            imax = std::max(imax, key.first);
            if (key.second.norm() > 2 * key.first)
                rep.violations.push_back("H nonzero above j=2i at i=" +
                                         std::to_string(key.first) +
                                         ", v=" + key.second.str());
        }
        std::vector<Class> g12 = bidegree_basis(1, 2);
        // top diagonal (H_{1,2})^i = H_{i,2i}
        diagonal_pass(full, g12, bidegree_spans(1, 2), 1, 0, imax, rep);
        // subdiagonal (H_{1,2})^{i-2} H_{2,3} = H_{i,2i-1}
        diagonal_pass(full, g12, bidegree_spans(2, 3), 2, 1, imax, rep);
        rep.ok = rep.violations.empty();
        return rep;
    }

    // bidegrees carrying classes outside the span of products of lower ones
    std::set<std::pair<int, int>> minimal_generator_bidegrees() {
        setmod();
        BettiTable full = homology_table();
        std::set<std::pair<int, int>> out;
        for (const auto& [key, val] : full.entries) {
            auto [i, v] = key;
            if (i == 0) continue;
            SpanBasis decomp(dim(i, v));
            for (int i1 = 1; i1 < i; ++i1)
                for (const ExponentVector& w : vectors_in_box(v, v.norm())) {
                    if (w.is_zero() || w == v) continue;
                    std::vector<Class> ba = homology_basis(i1, w);
                    if (ba.empty()) continue;
                    std::vector<Class> bb = homology_basis(i - i1, v - w);
                    for (const Class& a : ba)
                        for (const Class& b : bb)
                            decomp.add(class_coordinates(multiply(a, b)));
                }
            if (decomp.size() < static_cast<int>(to_int64(val)))
                out.insert({i, v.norm()});
        }
        return out;
    }

private:
    using Key = std::pair<int, ExponentVector>;

    struct SpanBasis {
        int ambient = 0;
        std::vector<std::vector<F>> members;  // originals, for later products
        std::vector<std::pair<int, std::vector<F>>> ech;  // (pivot, reduced)

        explicit SpanBasis(int dim = 0) : ambient(dim) {}
        int size() const { return static_cast<int>(ech.size()); }

        bool add(std::vector<F> x) {
            for (const auto& [p, e] : ech) {
                if (x[p] == F(0)) continue;
                F f = x[p];
                for (int k = 0; k < ambient; ++k) x[k] = x[k] - f * e[k];
            }
            int p = -1;
            for (int k = 0; k < ambient; ++k)
                if (!(x[k] == F(0))) {
                    p = k;
                    break;
                }
            if (p < 0) return false;
            members.push_back(x);
            F inv = F(1) / x[p];
            for (int k = 0; k < ambient; ++k) x[k] = x[k] * inv;
            ech.push_back({p, std::move(x)});
            return true;
        }
    };

    struct HData {
        int b_rank = 0;
        Mat<F> reps;  // strand-dim x dim H, cycle representatives
        Mat<F> bh;    // [image basis of d_{i+1} | reps]
    };

    void setmod() const {
        if constexpr (std::is_same_v<F, Fp>) {
            if (prime_ < 2)
                throw std::invalid_argument("KoszulAlgebra<Fp>: prime required");
            Fp::set_modulus(prime_);
        }
    }

    std::vector<ExponentVector> box() {
        if (box_.empty()) box_ = vectors_in_box(cap_, cap_.norm());
        return box_;
    }

    int d_rank(const ExponentVector& v, int i) {
        const StrandComplex& s = strand(v);
        if (i < 1 || i > s.top()) return 0;
        auto key = std::make_pair(i, v);
        auto it = ranks_.find(key);
        if (it != ranks_.end()) return it->second;
        int r;
        if constexpr (std::is_same_v<F, Fp>)
            r = rank(mat_cast<Fp>(s.d[i]));
        else
            r = rank_bareiss(mat_cast<Int>(s.d[i]));
        ranks_[key] = r;
        return r;
    }

    const HData& hdata(int i, const ExponentVector& v) {
        setmod();
        auto key = std::make_pair(i, v);
        auto it = h_.find(key);
        if (it != h_.end()) return it->second;
        const StrandComplex& s = strand(v);
        HData h;
        Mat<F> Z;
        if (i == 0) {  // d_0 = 0: every chain is a cycle
            Z = Mat<F>(s.dim(0), s.dim(0));
            for (int k = 0; k < s.dim(0); ++k) Z(k, k) = F(1);
        } else if (i > s.top()) {
            Z = Mat<F>(0, 0);
        } else {
            Z = kernel_basis(mat_cast<F>(s.d[i]));
        }
        Mat<F> B(s.dim(i), 0);
        if (i + 1 <= s.top()) {
            Mat<F> dn = mat_cast<F>(s.d[i + 1]);
            Mat<F> work = dn;
            std::vector<int> piv = rref(work);
            B = Mat<F>(s.dim(i), static_cast<int>(piv.size()));
            for (int c = 0; c < static_cast<int>(piv.size()); ++c)
                for (int r = 0; r < s.dim(i); ++r) B(r, c) = dn(r, piv[c]);
        }
        h.b_rank = B.cols;
        Mat<F> bz = hconcat(B, Z);
        Mat<F> work = bz;
        std::vector<int> piv = rref(work);
        std::vector<int> chosen;
        for (int c : piv)
            if (c >= B.cols) chosen.push_back(c - B.cols);
        h.reps = Mat<F>(s.dim(i), static_cast<int>(chosen.size()));
        for (int c = 0; c < static_cast<int>(chosen.size()); ++c)
            for (int r = 0; r < s.dim(i); ++r) h.reps(r, c) = Z(r, chosen[c]);
        h.bh = hconcat(B, h.reps);
        if (h.reps.cols != dim(i, v))
            throw std::logic_error("hdata: rank bookkeeping mismatch");
        return h_.emplace(key, std::move(h)).first->second;
    }

    const std::map<std::vector<int>, int>& jindex(const ExponentVector& v, int i) {
        auto key = std::make_pair(i, v);
        auto it = jindex_.find(key);
        if (it != jindex_.end()) return it->second;
        std::map<std::vector<int>, int> m;
        const StrandComplex& s = strand(v);
        for (int k = 0; k < s.dim(i); ++k) m[s.basis[i][k].J] = k;
        return jindex_.emplace(key, std::move(m)).first->second;
    }

    Class from_coordinates(int i, const ExponentVector& v, const std::vector<F>& coords) {
        const HData& h = hdata(i, v);
        Class z{i, v, std::vector<F>(h.reps.rows, F(0))};
        for (int c = 0; c < h.reps.cols; ++c) {
            if (coords[c] == F(0)) continue;
            for (int r = 0; r < h.reps.rows; ++r)
                z.rep[r] = z.rep[r] + h.reps(r, c) * coords[c];
        }
        return z;
    }

    std::vector<Class> bidegree_basis(int i, int j) {
        std::vector<Class> out;
        for (const ExponentVector& v : box())
            if (v.norm() == j)
                for (Class& c : homology_basis(i, v)) out.push_back(std::move(c));
        return out;
    }

    std::map<ExponentVector, SpanBasis> bidegree_spans(int i, int j) {
        std::map<ExponentVector, SpanBasis> m;
        for (const ExponentVector& v : box()) {
            if (v.norm() != j) continue;
            int hd = dim(i, v);
            if (hd == 0) continue;
            SpanBasis sp(hd);
            for (const Class& c : homology_basis(i, v)) sp.add(class_coordinates(c));
            m.emplace(v, std::move(sp));
        }
        return m;
    }

    // seeds sit at homological degree i0 on diagonal j = 2i - off; multiply by
    // H_{1,2} up the diagonal and compare span dims against the full table
    void diagonal_pass(const BettiTable& full, const std::vector<Class>& g12,
                       std::map<ExponentVector, SpanBasis> level, int i0, int off,
                       int imax, DiagonalReport& rep) {
        for (int i = i0; i <= imax; ++i) {
            if (i > i0) {
                std::map<ExponentVector, SpanBasis> next;
                for (auto& [w, sp] : level)
                    for (const auto& coords : sp.members)
                        for (const Class& g : g12) {
                            ExponentVector target = w + g.v;
                            if (!target.divides(cap_)) continue;
                            Class prod = multiply(g, from_coordinates(i - 1, w, coords));
                            int hd = dim(i, target);
                            if (hd == 0) continue;
                            next.try_emplace(target, SpanBasis(hd))
                                .first->second.add(class_coordinates(prod));
                        }
                level = std::move(next);
            }
            for (const auto& [key, val] : full.entries) {
                if (key.first != i || key.second.norm() != 2 * i - off) continue;
                auto it = level.find(key.second);
                int got = it == level.end() ? 0 : it->second.size();
                if (got != static_cast<int>(to_int64(val)))
                    rep.violations.push_back(
                        "diagonal j=2i-" + std::to_string(off) + " not spanned at i=" +
                        std::to_string(i) + ", v=" + key.second.str());
            }
        }
    }

    MonomialIdeal ideal_;
    ExponentVector cap_;
    long long prime_ = 0;
    std::map<ExponentVector, StrandComplex> strands_;
    std::map<Key, int> ranks_;
    std::map<Key, HData> h_;
    std::map<Key, std::map<std::vector<int>, int>> jindex_;
    std::vector<ExponentVector> box_;
};

using KoszulQ = KoszulAlgebra<Rat>;
using KoszulFp = KoszulAlgebra<Fp>;

// convenience wrappers; prime = 0 means exact rationals
BettiTable koszul_homology(const MonomialIdeal& I, const ExponentVector& cap,
                           long long prime = 0);
SpanResult koszul_subalgebra_span(const MonomialIdeal& I, const ExponentVector& cap,
                                  const std::vector<std::pair<int, int>>& gen_bidegrees,
                                  long long prime = 0);
DiagonalReport koszul_check_diagonals(const MonomialIdeal& I, const ExponentVector& cap,
                                      long long prime = 0);
std::set<std::pair<int, int>> koszul_minimal_generators(const MonomialIdeal& I,
                                                        const ExponentVector& cap,
                                                        long long prime = 0);

}  // namespace deviant
