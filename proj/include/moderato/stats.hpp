#pragma once

#include <vector>

namespace moderato {

// Two-sided Mann-Whitney U test.
//
// U is min(U_a, U_b) from the rank sums (midranks on ties). The p-value is
// exact -- the null probability over all C(n+m, n) rank assignments that
// min(U_a, U_b) is at most the observed value -- when n+m <= 12 and the
// pooled sample is tie-free; otherwise it comes from the normal
// approximation with tie and continuity corrections.
struct MannWhitneyResult {
    double u_a = 0.0;
    double u_b = 0.0;
    double u = 0.0; // min(u_a, u_b)
    double p = 1.0; // two-sided
    bool exact = false;
};

MannWhitneyResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b);

// The two p-value routes, exposed for cross-validation. The exact route
// requires a tie-free pooled sample and counts rank assignments by dynamic
// programming; it is feasible well past the n+m <= 12 cutoff used by
// mann_whitney_u.
double mann_whitney_exact_p(const std::vector<double>& a, const std::vector<double>& b);
double mann_whitney_normal_p(const std::vector<double>& a, const std::vector<double>& b);

} // namespace moderato
