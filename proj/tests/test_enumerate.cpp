#include "sytstrip/enumerate.hpp"
#include "sytstrip/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace sytstrip;

namespace {

// Exhaustive oracle for the matrix characterization: every permutation of
// 1..rows*width placed row-major, tested against all four monotonicity rules.
long matrix_count_by_permutations(int rows, int cols) {
    std::vector<int> a(static_cast<std::size_t>(rows * cols));
    std::iota(a.begin(), a.end(), 1);
    long hits = 0;
    auto at = [&](int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; };
    do {
        bool ok = true;
        for (int i = 0; i < rows && ok; ++i) {
            for (int j = 0; j < cols && ok; ++j) {
                if (j + 1 < cols && !(at(i, j) < at(i, j + 1))) ok = false;
                if (i + 1 < rows && !(at(i, j) < at(i + 1, j))) ok = false;
                if (i + 1 < rows && j + 1 < cols && !(at(i, j) < at(i + 1, j + 1))) ok = false;
                if (i + 1 < rows && j >= 1 && !(at(i, j) < at(i + 1, j - 1))) ok = false;
            }
        }
        hits += ok;
    } while (std::next_permutation(a.begin(), a.end()));
    return hits;
}

}  // namespace

TEST_CASE("backtracking counts") {
    CHECK(count_backtrack(build_strip({2, 2})) == 1);
    CHECK(count_backtrack(build_shifted(StrictPartition({2, 1}))) == 1);
    CHECK(count_backtrack(build_strip({2, 3})) == 2);
    CHECK(count_backtrack(build_strip({4, 4})) == 169);
    CHECK(count_backtrack(build_strip({5, 1})) == 1);
}

TEST_CASE("ideal DP counts") {
    CHECK(count_ideal_dp(build_strip({3, 3})) == 4);
    CHECK(count_ideal_dp(build_strip({3, 5})) == 290);
    CHECK(count_ideal_dp(build_strip({4, 4})) == 169);
    CHECK(count_ideal_dp(build_strip({1, 1})) == 1);
    CHECK(count_ideal_dp(build_strip({4, 5})) == 6392);
    CHECK(count_ideal_dp(build_strip({5, 5})) == 141696);
}

TEST_CASE("matrix model against exhaustive permutations") {
    CHECK(matrix_count_by_permutations(2, 2) == 1);
    CHECK(matrix_count_by_permutations(2, 3) == 2);
    CHECK(matrix_count_by_permutations(3, 3) == 4);
    for (auto [r, c] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}, {4, 2}, {1, 6}, {6, 1}}) {
        CAPTURE(r);
        CAPTURE(c);
        CHECK(count_matrix_model({r, c}) == matrix_count_by_permutations(r, c));
    }
}

TEST_CASE("three counters agree on every strip up to 12 cells") {
    for (int r = 1; r <= 12; ++r) {
        for (int w = 1; r * w <= 12; ++w) {
            CAPTURE(r);
            CAPTURE(w);
            const CellPoset p = build_strip({r, w});
            const BigCount dp = count_ideal_dp(p);
            CHECK(count_backtrack(p) == dp);
            CHECK(count_matrix_model({r, w}) == dp);
        }
    }
}

TEST_CASE("known families through the DP") {
    const std::vector<long> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786};
    for (int n = 1; n <= 12; ++n) CHECK(count_ideal_dp(build_strip({2, n})) == catalan[n - 1]);
    for (int n = 1; n <= 20; ++n) {
        CHECK(count_ideal_dp(build_strip({n, 2})) == 1);
        CHECK(count_ideal_dp(build_strip({n, 3})) == BigCount(1UL << (n - 1)));
    }
}

TEST_CASE("budgets are enforced") {
    CountLimits tight;
    tight.backtrack_max_cells = 6;
    tight.matrix_max_cells = 6;
    tight.dp_max_states = 1;
    CHECK_THROWS_AS(count_backtrack(build_strip({3, 3}), tight), BudgetExceeded);
    CHECK_THROWS_AS(count_matrix_model({3, 3}, tight), BudgetExceeded);
    CHECK_THROWS_AS(count_ideal_dp(build_strip({3, 3}), tight), BudgetExceeded);
    CHECK_THROWS_AS(count_matrix_model({4, 4}), BudgetExceeded);
    CHECK(count_ideal_dp(build_strip({40, 7})) > 0);
}

TEST_CASE("Monte Carlo volume estimates") {
    const VolumeEstimate e22 = estimate_volume_mc({2, 2}, 200'000, 11);
    CHECK(e22.mean == doctest::Approx(1.0 / 24).epsilon(1e-9));  // chain: every sample weighs 1
    CHECK(e22.std_error == 0.0);

    const VolumeEstimate h22 = estimate_volume_mc({2, 2}, 1'000'000, 11, VolumeEstimator::HitOrMiss);
    CHECK(std::fabs(h22.mean - 1.0 / 24) <= 4 * h22.std_error);
    CHECK(h22.std_error > 0);

    const VolumeEstimate h12 = estimate_volume_mc({1, 2}, 1'000'000, 5, VolumeEstimator::HitOrMiss);
    CHECK(std::fabs(h12.mean - 0.5) <= 4 * h12.std_error);

    const VolumeEstimate e34 = estimate_volume_mc({3, 4}, 1'000'000, 3);
    CHECK(std::fabs(e34.count_estimate - 29) <= 4 * e34.count_stderr);
    CHECK(e34.mean == doctest::Approx(e34.count_estimate / 479001600.0));
    CHECK(e34.mean >= 0);
    CHECK(e34.mean <= 1);
}

TEST_CASE("Monte Carlo is reproducible from its seed") {
    const auto a = estimate_volume_mc({3, 4}, 50'000, 99);
    const auto b = estimate_volume_mc({3, 4}, 50'000, 99);
    const auto c = estimate_volume_mc({3, 4}, 50'000, 100);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(a.mean != c.mean);
    CHECK(a.generator.find("mt19937_64") != std::string::npos);
    CHECK_THROWS_AS(estimate_volume_mc({2, 2}, 0, 1), std::invalid_argument);
}
