// Two-sided Mann-Whitney U.
//
// The statistic is computed from rank sums with midranks on ties:
// U_a = R_a - n_a(n_a+1)/2, U_b = n_a n_b - U_a, U = min(U_a, U_b).
//
// For small tie-free samples the p-value is exact: under the null every
// assignment of ranks {1..N} to sample a is equally likely, so the null
// distribution of the rank sum follows from counting size-n_a subsets of
// {1..N} by sum (a textbook dynamic program; subset counts fit a double
// exactly far beyond the sizes used here). The reported two-sided p is the
// null probability that min(U_a, U_b) is at most the observed minimum, which
// for the symmetric tie-free null equals the usual doubled one-sided tail.
//
// Larger or tied samples use the normal approximation with the tie-corrected
// variance and a 0.5 continuity correction.

#include "moderato/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace moderato {

namespace {

struct RankSummary {
    double u_a = 0.0;
    double u_b = 0.0;
    bool has_ties = false;
    double tie_term = 0.0; // sum of t^3 - t over tie groups
};

RankSummary rank_summary(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n_a = a.size();
    const std::size_t n = n_a + b.size();
    std::vector<std::pair<double, int>> pooled; // (value, 0 for a / 1 for b)
    pooled.reserve(n);
    for (double v : a)
        pooled.emplace_back(v, 0);
    for (double v : b)
        pooled.emplace_back(v, 1);
    std::sort(pooled.begin(), pooled.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    RankSummary summary;
    double rank_sum_a = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && pooled[j].first == pooled[i].first)
            ++j;
        const double t = static_cast<double>(j - i);
        const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k)
            if (pooled[k].second == 0)
                rank_sum_a += midrank;
        if (t > 1.0) {
            summary.has_ties = true;
            summary.tie_term += t * t * t - t;
        }
        i = j;
    }
    summary.u_a = rank_sum_a - static_cast<double>(n_a) * (static_cast<double>(n_a) + 1.0) / 2.0;
    summary.u_b = static_cast<double>(n_a) * static_cast<double>(b.size()) - summary.u_a;
    return summary;
}

void require_non_empty(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("mann_whitney_u: empty sample");
}

// Null distribution of the sample-a rank sum: count[s] = number of size-n_a
// subsets of {1..N} summing to s.
std::vector<double> rank_sum_counts(int n_a, int n) {
    const int max_sum = n_a * (2 * n - n_a + 1) / 2;
    std::vector<std::vector<double>> count(
        n_a + 1, std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
    count[0][0] = 1.0;
    for (int rank = 1; rank <= n; ++rank)
        for (int chosen = std::min(rank, n_a); chosen >= 1; --chosen)
            for (int s = max_sum; s >= rank; --s)
                count[chosen][s] += count[chosen - 1][s - rank];
    return count[n_a];
}

double exact_two_sided_p(double u_a, int n_a, int n_b) {
    const int n = n_a + n_b;
    const double u_min = std::min(u_a, static_cast<double>(n_a) * n_b - u_a);
    const std::vector<double> counts = rank_sum_counts(n_a, n);
    const double min_sum = static_cast<double>(n_a) * (n_a + 1) / 2.0;
    double in_tail = 0.0;
    double total = 0.0;
    for (std::size_t s = 0; s < counts.size(); ++s) {
        if (counts[s] == 0.0)
            continue;
        total += counts[s];
        const double u = static_cast<double>(s) - min_sum;
        const double u_other = static_cast<double>(n_a) * n_b - u;
        if (std::min(u, u_other) <= u_min + 1e-9)
            in_tail += counts[s];
    }
    return in_tail / total;
}

double normal_two_sided_p(const RankSummary& summary, int n_a, int n_b) {
    const double n = n_a + n_b;
    const double mu = static_cast<double>(n_a) * n_b / 2.0;
    const double variance = static_cast<double>(n_a) * n_b / 12.0 *
                            ((n + 1.0) - summary.tie_term / (n * (n - 1.0)));
    if (!(variance > 0.0))
        return 1.0; // every pooled value identical
    const double u = std::min(summary.u_a, summary.u_b);
    const double z = (u - mu + 0.5) / std::sqrt(variance);
    const double phi = 0.5 * std::erfc(-z / std::sqrt(2.0));
    return std::min(1.0, 2.0 * phi);
}

} // namespace

MannWhitneyResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b) {
    require_non_empty(a, b);
    const RankSummary summary = rank_summary(a, b);
    MannWhitneyResult result;
    result.u_a = summary.u_a;
    result.u_b = summary.u_b;
    result.u = std::min(summary.u_a, summary.u_b);
    result.exact = !summary.has_ties && a.size() + b.size() <= 12;
    result.p = result.exact
                   ? exact_two_sided_p(summary.u_a, static_cast<int>(a.size()),
                                       static_cast<int>(b.size()))
                   : normal_two_sided_p(summary, static_cast<int>(a.size()),
                                        static_cast<int>(b.size()));
    return result;
}

double mann_whitney_exact_p(const std::vector<double>& a, const std::vector<double>& b) {
    require_non_empty(a, b);
    const RankSummary summary = rank_summary(a, b);
    if (summary.has_ties)
        throw std::invalid_argument("mann_whitney_exact_p: ties present");
    return exact_two_sided_p(summary.u_a, static_cast<int>(a.size()),
                             static_cast<int>(b.size()));
}

double mann_whitney_normal_p(const std::vector<double>& a, const std::vector<double>& b) {
    require_non_empty(a, b);
    return normal_two_sided_p(rank_summary(a, b), static_cast<int>(a.size()),
                              static_cast<int>(b.size()));
}

} // namespace moderato
