#pragma once

// Squarefree strand of the minimal model S[X] (paths) / S[X~] (cycles):
// variables x_{p,q}, x~_{p,q}, w_i with their explicit differentials, the
// reduced complex k[X], and strand homology — the second independent route
// to the Betti numbers.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deviant/betti.hpp"
#include "deviant/exactla.hpp"
#include "deviant/exponent.hpp"
#include "deviant/ideals.hpp"
#include "deviant/numeric.hpp"

namespace deviant {

enum class VarKind { path_x, cycle_x, cycle_w };

struct ModelVariable {
    VarKind kind = VarKind::path_x;
    int n = 0;
    int p = 0, q = 0;  // w_i stores i in p, q unused

    int hom_degree() const;
    ExponentVector mdeg() const;
    int min_support() const;
    std::string str() const;  // x[p,q], xt[p,q], w[i]
    auto operator<=>(const ModelVariable&) const = default;
};

ModelVariable path_x(int n, int p, int q);   // 1 <= p < q <= n
ModelVariable cycle_x(int n, int p, int q);  // cyclic interval p..q, p != q+1 mod n
ModelVariable cycle_w(int n, int i);         // 1 <= i <= n-1

// T^a times a product of model variables with pairwise disjoint supports,
// variables in normal form (sorted by min support index, then kind)
struct ModelMonomial {
    ExponentVector T;
    std::vector<ModelVariable> vars;

    int hom_degree() const;
    ExponentVector mdeg() const;
    std::string str() const;
    auto operator<=>(const ModelMonomial&) const = default;
};

// normal form of T^a * vars as given; the returned sign is the Koszul sign of
// the sort (0 when an odd variable repeats). Overlapping supports otherwise
// leave the squarefree strand and are rejected.
std::pair<ModelMonomial, int> monomial_of(ExponentVector T, std::vector<ModelVariable> vars);

// formal sums with exact integer coefficients, canonically collected
using ModelSum = std::map<ModelMonomial, Int>;

ModelSum variable_differential(const ModelVariable& x);  // in S[X], T-terms kept
ModelSum reduced_differential(const ModelVariable& x);   // image in k[X]
ModelSum differential(const ModelSum& s);                // Leibniz extension
ModelSum model_product(const ModelSum& a, const ModelSum& b);
std::string render(const ModelSum& s);

// the multidegree-v strand of k[X]: basis monomials by homological degree and
// the reduced differential matrices; d[i] maps degree i to i-1
struct StrandOfModel {
    GraphKind kind = GraphKind::path;
    int n = 0;
    ExponentVector v;
    std::vector<std::vector<ModelMonomial>> basis;
    std::vector<Mat<int>> d;

    int top() const { return static_cast<int>(basis.size()) - 1; }
    int dim(int i) const {
        return i >= 0 && i <= top() ? static_cast<int>(basis[i].size()) : 0;
    }
    // -1 when the monomial is not a basis element of degree i
    int index_of(int i, const ModelMonomial& m) const;
};

// include_w: whether the degree n-1 variables w_i enter the v = 1_n strand
StrandOfModel strand_of_model(GraphKind kind, int n, const ExponentVector& v,
                              bool include_w = true);

bool is_cycle(const StrandOfModel& s, int i, const std::vector<Int>& coeffs);
bool is_boundary(const StrandOfModel& s, int i, const std::vector<Int>& coeffs);
bool is_cycle(const StrandOfModel& s, const ModelMonomial& m);
bool is_boundary(const StrandOfModel& s, const ModelMonomial& m);

// pairs of index sequences P, Q as in the monomial family B_{P,Q}
struct IndexPair {
    std::vector<int> p, q;
    int size() const { return static_cast<int>(p.size()); }
};

// Gamma_{P,Q} = { i > 1 : p_i = q_{i-1}+1 } with the deleted sequences
// (P(i), Q(i)); positions are 1-based
struct GammaDeletions {
    std::vector<int> gamma;
    std::vector<IndexPair> deleted;
};

GammaDeletions gamma_indices(const IndexPair& pq);

// B_{P,Q} (linear) and B~_{P,Q} (cyclic, indices above n wrap); validates the
// defining inequalities. Returned is the normal-form monomial together with
// the Koszul sign relating it to the product in listed order.
std::pair<ModelMonomial, int> b_monomial(int n, const IndexPair& pq);
std::pair<ModelMonomial, int> bt_monomial(int n, const IndexPair& pq);

// the (*) conditions: q_i - p_i in {1,2}; a length-1 block only at the end or
// followed by a gap
bool star_conditions(const IndexPair& pq);

// cyclic reading: block N is followed by block 1 shifted by n, so a two-vertex
// block N must not abut it across the wrap (the merged variable would bound
// B~) -- except at full support, where no merged variable exists
bool star_conditions(int n, const IndexPair& pq);

// every admissible (P,Q) for the given ambient, in lexicographic order
std::vector<IndexPair> admissible_pairs(int n, bool cyclic);

// homology dims of all squarefree strands with v <= cap; prime = 0 means
// rationals
BettiTable model_homology(GraphKind kind, int n, const ExponentVector& cap,
                          long long prime = 0);

}  // namespace deviant
