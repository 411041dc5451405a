#include "deviant/betti.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "deviant/errors.hpp"

namespace deviant {

std::vector<std::vector<int>> support_runs(const ExponentVector& v, bool cyclic) {
    if (!v.is_squarefree())
        throw std::invalid_argument("support_runs: vector must be squarefree");
    const int n = v.n();
    std::vector<int> supp = v.support();
    std::vector<std::vector<int>> runs;
    for (int i : supp) {
        if (!runs.empty() && runs.back().back() == i - 1)
            runs.back().push_back(i);
        else
            runs.push_back({i});
    }
    // a wrapping run joins the last block to the first
    if (cyclic && runs.size() > 1 && runs.front().front() == 1 && runs.back().back() == n) {
        for (int i : runs.front()) runs.back().push_back(i);
        runs.erase(runs.begin());
    }
    return runs;
}

BlockDecomposition block_decompose(const ExponentVector& v, bool cyclic) {
    const int n = v.n();
    BlockDecomposition d;
    d.cyclic = cyclic;
    for (const auto& run : support_runs(v, cyclic)) {
        ExponentVector b(n);
        for (int i : run) b[i - 1] = 1;
        d.blocks.push_back(b);
    }
    return d;
}

namespace {

BettiValue from_blocks(const BlockDecomposition& d) {
    for (const auto& b : d.blocks)
        if (b.norm() % 3 == 1) return {};
    return {d.iota(), Int(1)};
}

}  // namespace

BettiValue betti_path(int n, const ExponentVector& v) {
    if (v.n() != n) throw std::invalid_argument("betti_path: ambient size mismatch");
    return from_blocks(block_decompose(v, false));
}

BettiValue betti_cycle(int n, const ExponentVector& w) {
    if (w.n() != n) throw std::invalid_argument("betti_cycle: ambient size mismatch");
    if (!w.is_squarefree())
        throw std::invalid_argument("betti_cycle: vector must be squarefree");
    if (w.norm() == n) {  // full support: the exceptional multidegree
        switch (n % 3) {
            case 0: return {2 * n / 3, Int(2)};
            case 1: return {(2 * n + 2) / 3, Int(1)};  // ceil(2n/3), above iota
            default: return {2 * n / 3, Int(1)};       // iota of the single block
        }
    }
    return from_blocks(block_decompose(w, true));
}

std::map<std::pair<int, int>, Int> BettiTable::graded() const {
    std::map<std::pair<int, int>, Int> g;
    for (const auto& [key, b] : entries) g[{key.first, key.second.norm()}] += b;
    return g;
}

int BettiTable::max_i() const {
    int m = 0;
    for (const auto& [key, b] : entries) m = std::max(m, key.first);
    return m;
}

int BettiTable::max_j() const {
    int m = 0;
    for (const auto& [key, b] : entries) m = std::max(m, key.second.norm());
    return m;
}

namespace {

ExponentVector vector_of_mask(int n, unsigned mask) {
    ExponentVector v(n);
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) v[i] = 1;
    return v;
}

unsigned rotate_mask(int n, unsigned mask) {
    unsigned all = (n == 32 ? ~0u : (1u << n) - 1);
    return ((mask << 1) | (mask >> (n - 1))) & all;
}

}  // namespace

BettiTable betti_table(const Graph& g) {
    if (g.kind == GraphKind::general)
        throw std::invalid_argument("betti_table: closed forms cover paths and cycles only");
    const int n = g.n;
    if (n > 22) throw ResourceError("betti_table: n too large for subset enumeration");
    BettiTable t;
    t.n = n;
    const unsigned top = 1u << n;
    if (g.kind == GraphKind::path) {
        for (unsigned mask = 0; mask < top; ++mask) {
            ExponentVector v = vector_of_mask(n, mask);
            BettiValue b = betti_path(n, v);
            t.add(b.i, v, b.beta);
        }
        return t;
    }
    // cycle: one decomposition per rotation orbit, full support separately
    for (unsigned mask = 0; mask + 1 < top; ++mask) {
        bool canonical = true;
        unsigned r = mask;
        for (int k = 1; k < n && canonical; ++k) {
            r = rotate_mask(n, r);
            if (r < mask) canonical = false;
        }
        if (!canonical) continue;
        BettiValue b = betti_cycle(n, vector_of_mask(n, mask));
        if (b.beta == 0) continue;
        std::set<unsigned> orbit;
        r = mask;
        for (int k = 0; k < n; ++k) {
            orbit.insert(r);
            r = rotate_mask(n, r);
        }
        for (unsigned m : orbit) t.add(b.i, vector_of_mask(n, m), b.beta);
    }
    BettiValue full = betti_cycle(n, ones(n));
    t.add(full.i, ones(n), full.beta);
    return t;
}

BettiTable restricted_ideal_betti(const Graph& g, const ExponentVector& a) {
    if (a.n() != g.n) throw std::invalid_argument("restricted_ideal_betti: cap size mismatch");
    BettiTable full = betti_table(g);
    BettiTable t;
    t.n = g.n;
    for (const auto& [key, b] : full.entries)
        if (key.second.divides(a)) t.add(key.first, key.second, b);
    return t;
}

}  // namespace deviant
