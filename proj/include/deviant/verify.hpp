#pragma once

// The acceptance suite behind `deviant verify` and the standalone runner:
// nine numbered checks at quick or full bounds, an informational growth-ratio
// row, and an optional characteristic-p section.

#include <string>
#include <vector>

namespace deviant {

struct CheckResult {
    std::string id;       // C1..C9, R1 (info), X1.. (characteristic-p)
    std::string name;
    bool pass = false;
    bool warn = false;    // conjecture-level refutation: surfaced, not gating
    bool gating = true;   // theorem-level checks drive the exit status
    std::string details;  // deterministic one-liner (witness on failure)
    double seconds = 0.0;
    double budget = 0.0;  // expected runtime in seconds; 0 = none stated
};

struct VerifyOptions {
    bool full = false;    // full: n <= 8, Table 1 to s = 25; quick: n <= 6, s <= 12
    long long prime = 0;  // nonzero: add the characteristic-p section
    int jobs = 1;         // worker threads for the independent sweeps
};

std::vector<CheckResult> run_acceptance(const VerifyOptions& opt);

// all gating checks pass (conjecture and info rows never gate)
bool acceptance_ok(const std::vector<CheckResult>& rs);

// [PASS]/[FAIL]/[WARN] lines with timings
std::string format_report(const std::vector<CheckResult>& rs);

}  // namespace deviant
