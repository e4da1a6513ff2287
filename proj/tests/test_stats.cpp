#include "moderato/stats.hpp"

#include "moderato/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace moderato;

namespace {

// Brute-force two-sided p: enumerate every assignment of the pooled ranks to
// sample a and count how often min(U_a, U_b) is at most the observed value.
// Only valid for tie-free pooled samples.
double enumerate_p(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    std::sort(pooled.begin(), pooled.end());
    const int n = static_cast<int>(pooled.size());
    const int n_a = static_cast<int>(a.size());

    // Observed U from the actual split.
    double rank_sum = 0.0;
    for (double v : a)
        rank_sum += static_cast<double>(
                        std::lower_bound(pooled.begin(), pooled.end(), v) - pooled.begin()) +
                    1.0;
    const double u_a = rank_sum - n_a * (n_a + 1) / 2.0;
    const double u_obs = std::min(u_a, static_cast<double>(n_a) * b.size() - u_a);

    long in_tail = 0, total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != n_a)
            continue;
        ++total;
        double sum = 0.0;
        for (int r = 0; r < n; ++r)
            if (mask & (1u << r))
                sum += r + 1;
        const double u = sum - n_a * (n_a + 1) / 2.0;
        if (std::min(u, static_cast<double>(n_a) * b.size() - u) <= u_obs + 1e-9)
            ++in_tail;
    }
    return static_cast<double>(in_tail) / static_cast<double>(total);
}

std::vector<double> random_sample(int n, Rng& rng) {
    std::uniform_real_distribution<double> value(0.0, 100.0);
    std::vector<double> out(n);
    for (double& v : out)
        v = value(rng);
    return out;
}

} // namespace

TEST_CASE("small separated samples give the enumerated p") {
    const MannWhitneyResult two = mann_whitney_u({1.0, 2.0}, {3.0, 4.0});
    CHECK(two.u == doctest::Approx(0.0));
    CHECK(two.exact);
    CHECK(two.p == doctest::Approx(2.0 / 6.0));

    const MannWhitneyResult three = mann_whitney_u({1.0, 2.0, 3.0}, {4.0, 5.0, 6.0});
    CHECK(three.u == doctest::Approx(0.0));
    CHECK(three.exact);
    CHECK(three.p == doctest::Approx(0.1));
}

TEST_CASE("identical samples are maximally non-significant") {
    const MannWhitneyResult r = mann_whitney_u({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0});
    CHECK(r.u_a == doctest::Approx(4.5));
    CHECK(r.u == doctest::Approx(4.5)); // = |a||b|/2
    CHECK_FALSE(r.exact);               // ties force the normal path
    CHECK(r.p == doctest::Approx(1.0));

    const MannWhitneyResult constant = mann_whitney_u({5.0, 5.0, 5.0}, {5.0, 5.0});
    CHECK(constant.p == doctest::Approx(1.0)); // zero variance
}

TEST_CASE("rank-sum identity holds with and without ties") {
    Rng rng(3);
    std::uniform_int_distribution<int> coarse(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> a(3 + trial % 5), b(2 + trial % 7);
        for (double& v : a)
            v = coarse(rng);
        for (double& v : b)
            v = coarse(rng);
        const MannWhitneyResult r = mann_whitney_u(a, b);
        CHECK(r.u_a + r.u_b == doctest::Approx(static_cast<double>(a.size() * b.size())));
        CHECK(r.u == doctest::Approx(std::min(r.u_a, r.u_b)));
    }
}

TEST_CASE("the test is symmetric in its arguments") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<double> a = random_sample(4 + trial % 6, rng);
        const std::vector<double> b = random_sample(3 + trial % 8, rng);
        const MannWhitneyResult ab = mann_whitney_u(a, b);
        const MannWhitneyResult ba = mann_whitney_u(b, a);
        CHECK(ab.u == doctest::Approx(ba.u));
        CHECK(ab.p == doctest::Approx(ba.p).epsilon(1e-12));
        CHECK(ab.exact == ba.exact);
    }
}

TEST_CASE("exact p equals full enumeration on random tie-free pairs") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> size_a(2, 8);
        const int n_a = size_a(rng);
        std::uniform_int_distribution<int> size_b(2, 10 - n_a);
        const int n_b = size_b(rng);
        const std::vector<double> a = random_sample(n_a, rng);
        const std::vector<double> b = random_sample(n_b, rng);

        const double reference = enumerate_p(a, b);
        CHECK(std::abs(mann_whitney_exact_p(a, b) - reference) <= 1e-12);

        const MannWhitneyResult r = mann_whitney_u(a, b);
        CHECK(r.exact);
        CHECK(std::abs(r.p - reference) <= 1e-12);
    }
}

TEST_CASE("normal approximation tracks the exact p in the validation band") {
    Rng rng(11);
    for (int n_a = 8; n_a <= 12; ++n_a)
        for (int n_b = 8; n_b <= 12; ++n_b)
            for (int rep = 0; rep < 20; ++rep) {
                const std::vector<double> a = random_sample(n_a, rng);
                const std::vector<double> b = random_sample(n_b, rng);
                const double exact = mann_whitney_exact_p(a, b);
                const double normal = mann_whitney_normal_p(a, b);
                CHECK(std::abs(exact - normal) < 0.02);
            }
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(mann_whitney_u({}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(mann_whitney_u({1.0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(mann_whitney_exact_p({1.0, 1.0}, {2.0}), std::invalid_argument);
}
