#include "deviant/dgmodel.hpp"

#include <algorithm>
#include <tuple>

#include "deviant/errors.hpp"

namespace deviant {

namespace {

int wrap(int t, int n) { return (t - 1) % n + 1; }

}  // namespace

int ModelVariable::hom_degree() const {
    switch (kind) {
        case VarKind::path_x: return q - p;
        case VarKind::cycle_x: return (q - p + n) % n;
        default: return n - 1;
    }
}

ExponentVector ModelVariable::mdeg() const {
    if (kind == VarKind::cycle_w) return ones(n);
    ExponentVector v(n);
    for (int t = 0; t <= hom_degree(); ++t) v[(p - 1 + t) % n] = 1;
    return v;
}

int ModelVariable::min_support() const {
    if (kind == VarKind::cycle_w) return 1;
    if (kind == VarKind::cycle_x && p > q) return 1;  // wraps through n -> 1
    return p;
}

std::string ModelVariable::str() const {
    switch (kind) {
        case VarKind::path_x:
            return "x[" + std::to_string(p) + "," + std::to_string(q) + "]";
        case VarKind::cycle_x:
            return "xt[" + std::to_string(p) + "," + std::to_string(q) + "]";
        default: return "w[" + std::to_string(p) + "]";
    }
}

ModelVariable path_x(int n, int p, int q) {
    if (n < 2 || p < 1 || q > n || p >= q)
        throw std::invalid_argument("path_x: bad indices");
    return {VarKind::path_x, n, p, q};
}

ModelVariable cycle_x(int n, int p, int q) {
    if (n < 3 || p < 1 || p > n || q < 1 || q > n || p == q || p == q % n + 1)
        throw std::invalid_argument("cycle_x: bad indices");
    return {VarKind::cycle_x, n, p, q};
}

ModelVariable cycle_w(int n, int i) {
    if (n < 3 || i < 1 || i > n - 1)
        throw std::invalid_argument("cycle_w: bad index");
    return {VarKind::cycle_w, n, i, 0};
}

int ModelMonomial::hom_degree() const {
    int s = 0;
    for (const auto& x : vars) s += x.hom_degree();
    return s;
}

ExponentVector ModelMonomial::mdeg() const {
    ExponentVector v = T;
    for (const auto& x : vars) v = v + x.mdeg();
    return v;
}

std::string ModelMonomial::str() const {
    std::string out;
    for (int i = 0; i < T.n(); ++i) {
        if (T[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "T" + std::to_string(i + 1);
        if (T[i] > 1) out += "^" + std::to_string(T[i]);
    }
    for (const auto& x : vars) {
        if (!out.empty()) out += "*";
        out += x.str();
    }
    return out.empty() ? "1" : out;
}

std::pair<ModelMonomial, int> monomial_of(ExponentVector T,
                                          std::vector<ModelVariable> vars) {
    auto key = [](const ModelVariable& x) {
        return std::tuple(x.min_support(), static_cast<int>(x.kind), x.p, x.q);
    };
    int sign = 1;
    for (size_t i = 1; i < vars.size(); ++i) {  // insertion sort, Koszul signs
        ModelVariable x = vars[i];
        size_t j = i;
        while (j > 0 && key(vars[j - 1]) > key(x)) {
            if (x.hom_degree() % 2 == 1 && vars[j - 1].hom_degree() % 2 == 1)
                sign = -sign;
            vars[j] = vars[j - 1];
            --j;
        }
        vars[j] = x;
    }
    for (size_t i = 1; i < vars.size(); ++i)
        if (vars[i] == vars[i - 1] && vars[i].hom_degree() % 2 == 1)
            return {ModelMonomial{}, 0};  // odd square
    ModelMonomial m{std::move(T), std::move(vars)};
    if (!m.mdeg().is_squarefree())
        throw std::invalid_argument("monomial_of: multidegree not squarefree");
    return {std::move(m), sign};
}

ModelSum variable_differential(const ModelVariable& x) {
    const int n = x.n;
    ModelSum out;
    // one summand: sign * (T or x at [a,b]) * (T or x at [c,d]); a==b or c==d
    // marks a T factor
    auto add = [&](int sign, int a, int b, int c, int d) {
        ExponentVector T(n);
        std::vector<ModelVariable> vars;
        VarKind k = x.kind == VarKind::path_x ? VarKind::path_x : VarKind::cycle_x;
        auto factor = [&](int u, int v) {
            if (u == v)
                T[u - 1] += 1;
            else
                vars.push_back(k == VarKind::path_x ? path_x(n, u, v)
                                                    : cycle_x(n, u, v));
        };
        factor(a, b);
        factor(c, d);
        auto [mono, sg] = monomial_of(std::move(T), std::move(vars));
        if (sg == 0) return;
        Int& slot = out[mono];
        slot += sign * sg;
        if (slot == 0) out.erase(mono);
    };
    switch (x.kind) {
        case VarKind::path_x:
            for (int t = 0; t < x.q - x.p; ++t)
                add(t % 2 == 0 ? 1 : -1, x.p, x.p + t, x.p + t + 1, x.q);
            break;
        case VarKind::cycle_x: {
            int len = (x.q - x.p + n) % n;
            for (int t = 0; t < len; ++t)
                add(t % 2 == 0 ? 1 : -1, x.p, wrap(x.p + t, n),
                    wrap(x.p + t + 1, n), x.q);
            break;
        }
        default:  // w_i
            for (int t = 0; t <= n - 2; ++t)
                add(t % 2 == 0 ? 1 : -1, x.p, wrap(x.p + t, n),
                    wrap(x.p + t + 1, n), wrap(x.p + n - 1, n));
    }
    return out;
}

ModelSum reduced_differential(const ModelVariable& x) {
    ModelSum out;
    for (const auto& [m, c] : variable_differential(x))
        if (m.T.is_zero()) out.emplace(m, c);
    return out;
}

ModelSum differential(const ModelSum& s) {
    ModelSum out;
    for (const auto& [m, c] : s) {
        int presign = 1;
        for (size_t j = 0; j < m.vars.size(); ++j) {
            for (const auto& [dm, dc] : variable_differential(m.vars[j])) {
                std::vector<ModelVariable> vars;
                vars.reserve(m.vars.size() - 1 + dm.vars.size());
                vars.insert(vars.end(), m.vars.begin(), m.vars.begin() + j);
                vars.insert(vars.end(), dm.vars.begin(), dm.vars.end());
                vars.insert(vars.end(), m.vars.begin() + j + 1, m.vars.end());
                auto [mono, sg] = monomial_of(m.T + dm.T, std::move(vars));
                if (sg == 0) continue;
                Int& slot = out[mono];
                slot += c * dc * sg * presign;
                if (slot == 0) out.erase(mono);
            }
            if (m.vars[j].hom_degree() % 2 == 1) presign = -presign;
        }
    }
    return out;
}

ModelSum model_product(const ModelSum& a, const ModelSum& b) {
    ModelSum out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::vector<ModelVariable> vars = ma.vars;
            vars.insert(vars.end(), mb.vars.begin(), mb.vars.end());
            auto [mono, sg] = monomial_of(ma.T + mb.T, std::move(vars));
            if (sg == 0) continue;
            Int& slot = out[mono];
            slot += ca * cb * sg;
            if (slot == 0) out.erase(mono);
        }
    return out;
}

std::string render(const ModelSum& s) {
    if (s.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : s) {
        Int a = c < 0 ? Int(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string mono = m.str();
        if (a != 1)
            out += a.str() + (mono == "1" ? "" : "*" + mono);
        else
            out += mono;
    }
    return out;
}

int StrandOfModel::index_of(int i, const ModelMonomial& m) const {
    if (i < 0 || i > top()) return -1;
    auto it = std::lower_bound(basis[i].begin(), basis[i].end(), m);
    if (it == basis[i].end() || !(*it == m)) return -1;
    return static_cast<int>(it - basis[i].begin());
}

namespace {

// consecutive chunks of size >= 2 covering the whole run
void run_partitions(const std::vector<int>& run, size_t from,
                    std::vector<std::pair<int, int>>& cur,
                    std::vector<std::vector<std::pair<int, int>>>& out) {
    if (from == run.size()) {
        out.push_back(cur);
        return;
    }
    for (size_t len = 2; from + len <= run.size(); ++len) {
        cur.emplace_back(run[from], run[from + len - 1]);
        run_partitions(run, from + len, cur, out);
        cur.pop_back();
    }
}

}  // namespace

StrandOfModel strand_of_model(GraphKind kind, int n, const ExponentVector& v,
                              bool include_w) {
    if (kind == GraphKind::general)
        throw std::invalid_argument("strand_of_model: path or cycle only");
    if (v.n() != n) throw std::invalid_argument("strand_of_model: size mismatch");
    if (!v.is_squarefree())
        throw std::invalid_argument("strand_of_model: strand must be squarefree");
    if (n < (kind == GraphKind::path ? 2 : 3))
        throw std::invalid_argument("strand_of_model: ambient too small");

    const bool cyclic = kind == GraphKind::cycle;
    std::vector<std::vector<ModelVariable>> products;
    if (v.is_zero()) {
        products.push_back({});
    } else if (cyclic && v == ones(n)) {
        // arcs between cut points; cuts pairwise non-adjacent on the circle
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> cuts;
            for (int i = 1; i <= n; ++i)
                if (mask >> (i - 1) & 1u) cuts.push_back(i);
            int k = static_cast<int>(cuts.size());
            if (k < 2) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                int gap = j + 1 < k ? cuts[j + 1] - cuts[j] : cuts[0] + n - cuts[k - 1];
                ok = gap >= 2;
            }
            if (!ok) continue;
            std::vector<ModelVariable> vars;
            for (int j = 0; j < k; ++j)
                vars.push_back(cycle_x(n, wrap(cuts[j] + 1, n), cuts[(j + 1) % k]));
            products.push_back(std::move(vars));
        }
    } else {
        std::vector<std::vector<std::vector<std::pair<int, int>>>> per_run;
        for (const auto& run : support_runs(v, cyclic)) {
            std::vector<std::vector<std::pair<int, int>>> parts;
            std::vector<std::pair<int, int>> cur;
            run_partitions(run, 0, cur, parts);
            per_run.push_back(std::move(parts));
        }
        std::vector<std::vector<ModelVariable>> acc = {{}};
        for (const auto& parts : per_run) {
            std::vector<std::vector<ModelVariable>> next;
            for (const auto& base : acc)
                for (const auto& choice : parts) {
                    std::vector<ModelVariable> vars = base;
                    for (auto [a, b] : choice)
                        vars.push_back(cyclic ? cycle_x(n, a, b) : path_x(n, a, b));
                    next.push_back(std::move(vars));
                }
            acc = std::move(next);
        }
        products = std::move(acc);
    }

    std::map<int, std::vector<ModelMonomial>> buckets;
    for (auto& vars : products) {
        auto [mono, sg] = monomial_of(ExponentVector(n), std::move(vars));
        buckets[mono.hom_degree()].push_back(std::move(mono));
    }
    if (cyclic && v == ones(n) && include_w)
        for (int i = 1; i <= n - 1; ++i)
            buckets[n - 1].push_back(ModelMonomial{ExponentVector(n), {cycle_w(n, i)}});

    StrandOfModel s;
    s.kind = kind;
    s.n = n;
    s.v = v;
    if (!buckets.empty()) {
        s.basis.resize(buckets.rbegin()->first + 1);
        for (auto& [deg, list] : buckets) {
            std::sort(list.begin(), list.end());
            s.basis[deg] = std::move(list);
        }
    }
    s.d.resize(std::max(s.top() + 1, 1));
    s.d[0] = Mat<int>(0, s.dim(0));
    for (int i = 1; i <= s.top(); ++i) {
        Mat<int> d(s.dim(i - 1), s.dim(i));
        for (int col = 0; col < s.dim(i); ++col) {
            for (const auto& [dm, dc] : differential({{s.basis[i][col], Int(1)}})) {
                if (!dm.T.is_zero()) continue;  // k[X]: T-terms vanish
                int row = s.index_of(i - 1, dm);
                if (row < 0)
                    throw std::logic_error("strand_of_model: differential leaves strand");
                d(row, col) = static_cast<int>(to_int64(dc));
            }
        }
        s.d[i] = std::move(d);
    }
    for (int i = 2; i <= s.top(); ++i) {
        Mat<int> sq = mat_mul(s.d[i - 1], s.d[i]);
        for (int x : sq.a)
            if (x != 0)
                throw std::logic_error("strand_of_model: d o d != 0 at " + v.str());
    }
    return s;
}

bool is_cycle(const StrandOfModel& s, int i, const std::vector<Int>& coeffs) {
    if (i < 0 || i > s.top() || static_cast<int>(coeffs.size()) != s.dim(i))
        throw std::invalid_argument("is_cycle: bad chain");
    for (const Int& y : mat_apply(mat_cast<Int>(s.d[i]), coeffs))
        if (y != 0) return false;
    return true;
}

bool is_boundary(const StrandOfModel& s, int i, const std::vector<Int>& coeffs) {
    if (i < 0 || i > s.top() || static_cast<int>(coeffs.size()) != s.dim(i))
        throw std::invalid_argument("is_boundary: bad chain");
    bool zero = true;
    for (const Int& c : coeffs)
        if (c != 0) zero = false;
    if (zero) return true;
    if (i + 1 > s.top()) return false;
    std::vector<Rat> b(coeffs.size());
    for (size_t k = 0; k < coeffs.size(); ++k) b[k] = Rat(coeffs[k]);
    return solve(mat_cast<Rat>(s.d[i + 1]), b).has_value();
}

namespace {

std::vector<Int> unit_chain(const StrandOfModel& s, const ModelMonomial& m, int& i) {
    i = m.hom_degree();
    int idx = s.index_of(i, m);
    if (idx < 0) throw std::invalid_argument("monomial is not in the strand");
    std::vector<Int> c(s.dim(i));
    c[idx] = 1;
    return c;
}

}  // namespace

bool is_cycle(const StrandOfModel& s, const ModelMonomial& m) {
    int i;
    std::vector<Int> c = unit_chain(s, m, i);
    return is_cycle(s, i, c);
}

bool is_boundary(const StrandOfModel& s, const ModelMonomial& m) {
    int i;
    std::vector<Int> c = unit_chain(s, m, i);
    return is_boundary(s, i, c);
}

namespace {

void validate_pair(const IndexPair& pq) {
    if (pq.p.size() != pq.q.size() || pq.p.empty())
        throw std::invalid_argument("index pair: mismatched sequences");
    for (int i = 0; i < pq.size(); ++i) {
        if (pq.p[i] >= pq.q[i])
            throw std::invalid_argument("index pair: p_i < q_i required");
        if (i + 1 < pq.size() && pq.q[i] >= pq.p[i + 1])
            throw std::invalid_argument("index pair: q_i < p_{i+1} required");
    }
}

}  // namespace

GammaDeletions gamma_indices(const IndexPair& pq) {
    validate_pair(pq);
    GammaDeletions g;
    for (int i = 2; i <= pq.size(); ++i) {
        if (pq.p[i - 1] != pq.q[i - 2] + 1) continue;
        g.gamma.push_back(i);
        IndexPair del = pq;
        del.p.erase(del.p.begin() + (i - 1));
        del.q.erase(del.q.begin() + (i - 2));
        g.deleted.push_back(std::move(del));
    }
    return g;
}

std::pair<ModelMonomial, int> b_monomial(int n, const IndexPair& pq) {
    validate_pair(pq);
    if (pq.p[0] < 1 || pq.q[pq.size() - 1] > n)
        throw std::invalid_argument("b_monomial: indices out of range");
    std::vector<ModelVariable> vars;
    for (int i = 0; i < pq.size(); ++i) vars.push_back(path_x(n, pq.p[i], pq.q[i]));
    return monomial_of(ExponentVector(n), std::move(vars));
}

std::pair<ModelMonomial, int> bt_monomial(int n, const IndexPair& pq) {
    validate_pair(pq);
    const int N = pq.size();
    if (pq.p[0] < 1 || !(pq.q[0] < pq.p[0] + n - 1) || !(pq.p[0] + n - 1 < 2 * n) ||
        !(pq.q[N - 1] < pq.p[0] + n))
        throw std::invalid_argument("bt_monomial: indices out of range");
    std::vector<ModelVariable> vars;
    for (int i = 0; i < N; ++i)
        vars.push_back(cycle_x(n, wrap(pq.p[i], n), wrap(pq.q[i], n)));
    return monomial_of(ExponentVector(n), std::move(vars));
}

bool star_conditions(const IndexPair& pq) {
    for (int i = 0; i < pq.size(); ++i) {
        int len = pq.q[i] - pq.p[i];
        if (len != 1 && len != 2) return false;
        if (len == 1 && i + 1 < pq.size() && !(pq.q[i] < pq.p[i + 1] - 1))
            return false;
    }
    return true;
}

bool star_conditions(int n, const IndexPair& pq) {
    if (!star_conditions(pq)) return false;
    int N = pq.size();
    if (N == 0) return true;
    int norm = 0;
    for (int i = 0; i < N; ++i) norm += pq.q[i] - pq.p[i] + 1;
    // a two-vertex block N abutting block 1 across the wrap merges with it
    // into a single variable whose differential produces B~; at full support
    // the merged interval would be the whole circle, which is not a variable
    if (pq.q[N - 1] - pq.p[N - 1] == 1 && pq.q[N - 1] == pq.p[0] + n - 1 &&
        norm < n)
        return false;
    return true;
}

namespace {

void extend_pairs(int n, bool cyclic, IndexPair& cur, std::vector<IndexPair>& out) {
    int base = cur.p[0];
    int pmin = cur.q.back() + 1;
    int bound = cyclic ? base + n - 1 : n;  // q's stay < p_1 + n (cyclic)
    for (int p = pmin; p < bound; ++p)
        for (int q = p + 1; q <= bound && (cyclic ? q < base + n : q <= n); ++q) {
            cur.p.push_back(p);
            cur.q.push_back(q);
            out.push_back(cur);
            extend_pairs(n, cyclic, cur, out);
            cur.p.pop_back();
            cur.q.pop_back();
        }
}

}  // namespace

std::vector<IndexPair> admissible_pairs(int n, bool cyclic) {
    std::vector<IndexPair> out;
    for (int p1 = 1; p1 <= n; ++p1) {
        int qmax = cyclic ? p1 + n - 2 : n;
        if (!cyclic && p1 >= n) break;
        for (int q1 = p1 + 1; q1 <= qmax; ++q1) {
            IndexPair cur{{p1}, {q1}};
            out.push_back(cur);
            extend_pairs(n, cyclic, cur, out);
        }
    }
    return out;
}

BettiTable model_homology(GraphKind kind, int n, const ExponentVector& cap,
                          long long prime) {
    if (cap.n() != n) throw std::invalid_argument("model_homology: cap size mismatch");
    if (prime != 0) Fp::set_modulus(prime);
    std::vector<int> supp;
    for (int i = 0; i < n; ++i)
        if (cap[i] >= 1) supp.push_back(i);
    if (supp.size() > 22) throw ResourceError("model_homology: cap too large");
    BettiTable t;
    t.n = n;
    for (unsigned mask = 0; mask < (1u << supp.size()); ++mask) {
        ExponentVector v(n);
        for (size_t k = 0; k < supp.size(); ++k)
            if (mask >> k & 1u) v[supp[k]] = 1;
        StrandOfModel s = strand_of_model(kind, n, v);
        std::vector<int> r(s.top() + 2, 0);
        for (int i = 1; i <= s.top(); ++i)
            r[i] = prime == 0 ? rank_bareiss(mat_cast<Int>(s.d[i]))
                              : rank(mat_cast<Fp>(s.d[i]));
        for (int i = 0; i <= s.top(); ++i)
            t.add(i, v, s.dim(i) - r[i] - r[i + 1]);
    }
    return t;
}

}  // namespace deviant
