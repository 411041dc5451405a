#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "deviant/series.hpp"

namespace deviant {

enum class GraphKind { path, cycle, general };

struct Graph {
    int n = 0;
    GraphKind kind = GraphKind::general;
    std::vector<std::pair<int, int>> edges;  // 1-based, i < j, sorted, unique

    bool has_edge(int i, int j) const;
    // vertices: sorted 1-based index set
    bool independent(const std::vector<int>& vertices) const;
};

Graph path_graph(int n);   // n >= 2
Graph cycle_graph(int n);  // n >= 3
Graph graph_from_edges(int n, std::vector<std::pair<int, int>> edges);

// Disjoint union; vertices of b are shifted by a.n. Kind becomes general.
Graph disjoint_union(const Graph& a, const Graph& b);

struct MonomialIdeal {
    int n = 0;
    std::vector<ExponentVector> gens;  // minimal generating set, lex-sorted

    // true iff some generator divides m (i.e. m = 0 in S/I)
    bool contains(const ExponentVector& m) const {
        for (const auto& g : gens)
            if (g.divides(m)) return true;
        return false;
    }
    // componentwise join of generator multidegrees; all nonzero Betti
    // multidegrees lie under it (Taylor complex support)
    ExponentVector generator_join() const {
        ExponentVector j(n);
        for (const auto& g : gens)
            for (int i = 0; i < n; ++i) j[i] = std::max(j[i], g[i]);
        return j;
    }
};

// Prunes to the minimal generating set.
MonomialIdeal make_monomial_ideal(int n, std::vector<ExponentVector> gens);

MonomialIdeal edge_ideal(const Graph& g);

// Independent-set counts i_j (number of independent sets of size j).
// Path/cycle kinds use I(P_n) = I(P_{n-1}) + x I(P_{n-2}) and
// I(C_n) = I(P_{n-1}) + x I(P_{n-3}); general graphs are enumerated.
std::vector<Int> independence_counts(const Graph& g);

// HS_{S/I(g)}(t) to degree D, via HS(t) = sum_j i_j t^j (1-t)^{-j}.
UniSeries hilbert_graded(const Graph& g, int D);

// Coefficient 1 at every v in the truncation box whose support is
// independent in g, else 0.
MultiSeries hilbert_multigraded(const Graph& g, const ExponentVector& cap, int degree_bound);

}  // namespace deviant
