#pragma once

#include <optional>
#include <string>

#include "deviant/ideals.hpp"
#include "deviant/series.hpp"

namespace deviant {

struct SequencePair {
    std::map<int, Int> gamma, alpha;  // s -> gamma_s, alpha_s for s = 1..smax
    int smax = 0;
};

DeviationTable deviations_graded(const Graph& g, int smax);
DeviationTable deviations_multigraded(const Graph& g, const ExponentVector& cap,
                                      int degree_bound);

// gamma_s, alpha_s with eps_s(P_n) = gamma_s*n - alpha_s; solved from two
// path sizes and verified on a third.
SequencePair gamma_alpha(int smax);

// True iff s is an interval of consecutive integers (s nonempty, sorted).
bool is_interval(const std::vector<int>& s);
// True iff s is a cyclic interval mod n (s nonempty, sorted 1-based).
bool is_cyclic_interval(const std::vector<int>& s, int n);

struct SupportCheck {
    bool ok = true;
    std::vector<ExponentVector> violations;  // nonzero deviations off-pattern
};

// Every nonzero multigraded deviation must have interval (path) or
// cyclic-interval (cycle) support.
SupportCheck check_support_property(const Graph& g, const DeviationTable& table);

struct StabilityCheck {
    bool ok = true;
    // failing comparisons: (part 'a'|'b'|'c', witness v)
    std::vector<std::pair<char, ExponentVector>> violations;
};

// On the full box (cap,...,cap) with the given degree bound:
//  (a) eps_v(P_n) = eps_{v,0}(P_{n+1});
//  (b) eps_v(C_n) = eps_{v,0}(C_{n+1}) when v_1 = 0 or v_n = 0;
//  (c) eps_v(P_n) = eps_v(C_n) when v_1 = 0 or v_n = 0.
StabilityCheck check_stability(int n, int cap, int degree_bound);
// Same checks over precomputed tables (boxes must match as above).
StabilityCheck check_stability_tables(const DeviationTable& pn, const DeviationTable& pn1,
                                      const DeviationTable& cn, const DeviationTable& cn1);

struct PatternRow {
    std::string name;  // e.g. "cycle s=n+1"
    int n = 0;
    Int lhs, rhs;  // computed deviation vs predicted value
    bool confirmed = false;
};

struct PatternReport {
    std::vector<PatternRow> rows;
    bool all_confirmed = true;
};

// The seven conjectural higher-deviation patterns (three for cycles at
// s = n+1..n+3, four for paths at s = n+2..n+5), evaluated for 3 <= n <= nmax.
PatternReport check_higher_patterns(int nmax);

}  // namespace deviant
