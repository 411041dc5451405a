#pragma once

// Closed-form multigraded Betti numbers of S/I(P_n), S/I(C_n) via block
// decomposition of squarefree multidegrees.

#include <map>
#include <utility>
#include <vector>

#include "deviant/exponent.hpp"
#include "deviant/ideals.hpp"
#include "deviant/numeric.hpp"

namespace deviant {

// Minimal splitting of a squarefree vector into interval-supported pieces.
// Blocks are maximal runs of consecutive support indices; with `cyclic` set,
// runs may wrap around n -> 1.
struct BlockDecomposition {
    std::vector<ExponentVector> blocks;
    bool cyclic = false;

    int tau() const { return static_cast<int>(blocks.size()); }
    int iota() const {
        int s = 0;
        for (const auto& b : blocks) s += 2 * b.norm() / 3;
        return s;
    }
};

// maximal runs of consecutive support indices as ordered vertex lists; a
// wrapping run of a cyclic support is listed in circle order (e.g. n,1,2)
std::vector<std::vector<int>> support_runs(const ExponentVector& v, bool cyclic);

BlockDecomposition block_decompose(const ExponentVector& v, bool cyclic);

// Betti value at the unique homological degree allowed for a squarefree
// multidegree; beta == 0 means the whole column vanishes (i is then -1).
struct BettiValue {
    int i = -1;
    Int beta = 0;
};

BettiValue betti_path(int n, const ExponentVector& v);
BettiValue betti_cycle(int n, const ExponentVector& w);

struct BettiTable {
    int n = 0;
    // only nonzero entries are stored
    std::map<std::pair<int, ExponentVector>, Int> entries;

    void add(int i, const ExponentVector& v, const Int& beta) {
        if (beta != 0) entries[{i, v}] += beta;
    }
    Int at(int i, const ExponentVector& v) const {
        auto it = entries.find({i, v});
        return it == entries.end() ? Int(0) : it->second;
    }
    // beta_{i,j} = sum over ||v|| = j
    std::map<std::pair<int, int>, Int> graded() const;
    int max_i() const;
    int max_j() const;
    bool operator==(const BettiTable&) const = default;
};

// Full table over all squarefree multidegrees; path or cycle only.
BettiTable betti_table(const Graph& g);

// Sub-table of entries with v <= a componentwise (resolution of S/I_{<=a}).
BettiTable restricted_ideal_betti(const Graph& g, const ExponentVector& a);

}  // namespace deviant
