#include "deviant/ideals.hpp"

#include <algorithm>
#include <set>

namespace deviant {

bool Graph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

bool Graph::independent(const std::vector<int>& vertices) const {
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = a + 1; b < vertices.size(); ++b)
            if (has_edge(vertices[a], vertices[b])) return false;
    return true;
}

Graph path_graph(int n) {
    if (n < 2) throw std::invalid_argument("path_graph: n must be >= 2");
    Graph g;
    g.n = n;
    g.kind = GraphKind::path;
    for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    Graph g;
    g.n = n;
    g.kind = GraphKind::cycle;
    for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
    g.edges.emplace_back(1, n);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Graph graph_from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("graph_from_edges: n must be >= 1");
    std::set<std::pair<int, int>> uniq;
    for (auto [i, j] : edges) {
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n || i == j)
            throw std::invalid_argument("graph_from_edges: bad edge");
        uniq.emplace(i, j);
    }
    Graph g;
    g.n = n;
    g.kind = GraphKind::general;
    g.edges.assign(uniq.begin(), uniq.end());
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g;
    g.n = a.n + b.n;
    g.kind = GraphKind::general;
    g.edges = a.edges;
    for (auto [i, j] : b.edges) g.edges.emplace_back(i + a.n, j + a.n);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

MonomialIdeal make_monomial_ideal(int n, std::vector<ExponentVector> gens) {
    for (const auto& g : gens) {
        if (g.n() != n) throw std::invalid_argument("monomial ideal: wrong ambient size");
        if (g.is_zero()) throw std::invalid_argument("monomial ideal: unit generator");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal I;
    I.n = n;
    for (size_t a = 0; a < gens.size(); ++a) {
        bool redundant = false;
        for (size_t b = 0; b < gens.size() && !redundant; ++b)
            if (a != b && gens[b].divides(gens[a])) redundant = true;
        if (!redundant) I.gens.push_back(gens[a]);
    }
    return I;
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<ExponentVector> gens;
    for (auto [i, j] : g.edges) {
        ExponentVector m(g.n);
        m[i - 1] = 1;
        m[j - 1] = 1;
        gens.push_back(m);
    }
    return make_monomial_ideal(g.n, std::move(gens));
}

namespace {

// independence polynomial coefficients of the path on m vertices
std::vector<Int> path_counts(int m) {
    // I(P_0) = 1, I(P_1) = 1 + x, I(P_m) = I(P_{m-1}) + x I(P_{m-2})
    std::vector<Int> prev{1}, cur{1, 1};
    if (m == 0) return prev;
    for (int k = 2; k <= m; ++k) {
        std::vector<Int> next(cur.size() + 1, 0);
        for (size_t i = 0; i < cur.size(); ++i) next[i] += cur[i];
        for (size_t i = 0; i < prev.size(); ++i) next[i + 1] += prev[i];
        while (next.back() == 0) next.pop_back();
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Int count_independent(const Graph& g, std::vector<int>& chosen, int next, int size) {
    if (size == 0) return 1;
    Int total = 0;
    for (int v = next; v <= g.n - size + 1; ++v) {
        bool ok = true;
        for (int u : chosen)
            if (g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(v);
        total += count_independent(g, chosen, v + 1, size - 1);
        chosen.pop_back();
    }
    return total;
}

}  // namespace

std::vector<Int> independence_counts(const Graph& g) {
    if (g.kind == GraphKind::path) return path_counts(g.n);
    if (g.kind == GraphKind::cycle) {
        // I(C_n) = I(P_{n-1}) + x I(P_{n-3})
        auto a = path_counts(g.n - 1);
        auto b = path_counts(g.n - 3);
        std::vector<Int> r(std::max(a.size(), b.size() + 1), 0);
        for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i + 1] += b[i];
        while (r.back() == 0) r.pop_back();
        return r;
    }
    std::vector<Int> r;
    std::vector<int> chosen;
    for (int size = 0;; ++size) {
        Int c = count_independent(g, chosen, 1, size);
        if (c == 0) break;
        r.push_back(c);
    }
    return r;
}

UniSeries hilbert_graded(const Graph& g, int D) {
    auto counts = independence_counts(g);
    UniSeries s(D);
    s[0] = 1;
    // t^j (1-t)^{-j} contributes binomial(d-1, j-1) at degree d
    for (int d = 1; d <= D; ++d) {
        Int c = 0;
        for (size_t j = 1; j < counts.size() && static_cast<int>(j) <= d; ++j)
            c += counts[j] * binomial(d - 1, static_cast<long>(j) - 1);
        s[d] = c;
    }
    return s;
}

namespace {

void box_rec(const Graph& g, const ExponentVector& cap, int degree_bound, int pos, int used,
             ExponentVector& cur, std::vector<int>& supp, MultiSeries& out) {
    if (pos == g.n) {
        out.t[cur] = 1;
        return;
    }
    // zero at this position
    cur[pos] = 0;
    box_rec(g, cap, degree_bound, pos + 1, used, cur, supp, out);
    // positive values, provided the support stays independent
    bool ok = true;
    for (int u : supp)
        if (g.has_edge(u, pos + 1)) {
            ok = false;
            break;
        }
    if (ok) {
        supp.push_back(pos + 1);
        for (int x = 1; x <= cap[pos] && used + x <= degree_bound; ++x) {
            cur[pos] = x;
            box_rec(g, cap, degree_bound, pos + 1, used + x, cur, supp, out);
        }
        supp.pop_back();
        cur[pos] = 0;
    }
}

}  // namespace

MultiSeries hilbert_multigraded(const Graph& g, const ExponentVector& cap, int degree_bound) {
    if (cap.n() != g.n) throw std::invalid_argument("hilbert_multigraded: cap size mismatch");
    MultiSeries s(cap, degree_bound);
    ExponentVector cur(g.n);
    std::vector<int> supp;
    box_rec(g, cap, degree_bound, 0, 0, cur, supp, s);
    return s;
}

}  // namespace deviant
