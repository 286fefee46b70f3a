#include "sytstrip/enumerate.hpp"
#include "sytstrip/errors.hpp"
#include "sytstrip/formulas.hpp"

#include <doctest.h>

using namespace sytstrip;

TEST_CASE("arithmetic helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(require_integer(ExactRational(1, 2), "x"), ExactnessError);
    CHECK_THROWS_AS(exact_divide(7, 2, "x"), ExactnessError);
    CHECK(exact_divide(1440, 360, "x") == 4);
}

TEST_CASE("Pell numbers") {
    CHECK(pell(0) == 0);
    CHECK(pell(1) == 1);
    const std::vector<long> first{0, 1, 2, 5, 12, 29, 70, 169};
    for (unsigned n = 0; n < first.size(); ++n) CHECK(pell(n) == first[n]);
}

TEST_CASE("product formula") {
    CHECK(product_formula(StrictPartition({2, 1})) == 1);
    CHECK(product_formula(StrictPartition({3, 2, 1})) == 2);
    CHECK(product_formula(StrictPartition({5})) == 1);
    for (const auto& lambda : strict_partitions_up_to(12)) {
        CAPTURE(to_string(ShapeSpec(lambda)));
        CHECK(product_formula(lambda) == count_backtrack(build_shifted(lambda)));
    }
}

TEST_CASE("closed forms") {
    CHECK(closed_form({2, 5}) == BigCount(14));
    CHECK(closed_form({6, 4}) == BigCount(5741));
    CHECK_FALSE(closed_form({3, 5}).has_value());
    CHECK(closed_form({1, 9}) == BigCount(1));
    CHECK(closed_form({7, 1}) == BigCount(1));
    for (int r = 1; r <= 8; ++r) {
        for (int w = 1; w <= 6; ++w) {
            if (auto v = closed_form({r, w})) CHECK(*v == count_ideal_dp(build_strip({r, w})));
        }
    }
}

TEST_CASE("g(3,n) routes") {
    CHECK(panova_sum(2) == 1);
    CHECK(panova_sum(3) == 4);
    CHECK(panova_sum(5) == 290);

    CHECK(kotesovec_step(3, 1, 1) == 4);
    CHECK(kotesovec_step(4, 4, 1) == 29);
    CHECK(kotesovec_step(5, 29, 4) == 290);
    CHECK_THROWS_AS(kotesovec_step(4, 5, 1), ExactnessError);

    CHECK(theorem1_step(1, 1) == 1);
    CHECK(theorem1_step(2, 1) == 4);
    CHECK(theorem1_step(4, 29) == 290);
    CHECK_THROWS_AS(theorem1_step(0, 1), std::invalid_argument);

    CHECK(g3_closed14(1) == 1);
    CHECK(g3_closed14(2) == 1);
    CHECK(g3_closed14(3) == 4);
    CHECK(g3_closed14(4) == 29);

    CHECK(g3_sum13(2) == 1);
    CHECK(g3_sum13(3) == 4);
    CHECK(g3_sum13(5) == 290);
}

TEST_CASE("the factorial reading of the alternating sum is not integral") {
    CHECK(g3_sum13_value(2, Sum13Reading::Factorial) == ExactRational(173, 12));
    CHECK(g3_sum13_value(2, Sum13Reading::PlainFactor) == 1);
}

TEST_CASE("A_n") {
    CHECK(a_sequence(1) == ExactRational(1, 2));
    CHECK(a_sequence(2) == ExactRational(1, 4));
    CHECK(a_sequence(3) == ExactRational(-7, 12));
    for (unsigned n = 1; n <= 30; ++n) CHECK(a_sequence_direct(n) == a_sequence_recurrence(n));
    for (unsigned n = 2; n <= 10; ++n) {
        CHECK(a_from_g3(n, count_ideal_dp(build_strip({3, static_cast<int>(n)}))) == a_sequence_direct(n));
    }
    // a wrong count breaks the relation
    CHECK(a_from_g3(4, 30) != a_sequence_direct(4));
}

TEST_CASE("width-5 recurrence") {
    CHECK(theorem3_seq(1) == 1);
    CHECK(theorem3_seq(3) == 290);
    CHECK(theorem3_seq(4) == 6392);
    CHECK(theorem3_seq(5) == 141696);
}

TEST_CASE("empirical recurrences") {
    const std::vector<BigCount> w4{1, 5, 29, 169};
    const auto r4 = hardin_check(4, w4);
    CHECK(r4.verdict());
    CHECK(r4.rows.size() == 2);
    CHECK(r4.rows.front().index == 3);

    const std::vector<BigCount> w5{1, 14, 290, 6392};
    const auto r5 = hardin_check(5, w5);
    CHECK(r5.verdict());
    CHECK(r5.rows.size() == 1);
    CHECK(r5.rows.front().index == 4);

    const std::vector<BigCount> bad{1, 5, 30};
    const auto rb = hardin_check(4, bad);
    CHECK_FALSE(rb.verdict());
    REQUIRE(rb.first_failure() != nullptr);
    CHECK(rb.first_failure()->index == 3);
    CHECK(rb.tags == std::vector<std::string>{"empirical claim violated"});

    const std::vector<BigCount> short5{1, 14, 290};
    CHECK_THROWS_AS(hardin_check(5, short5), std::invalid_argument);
    CHECK_THROWS_AS(hardin_check(8, w4), std::invalid_argument);
    CHECK(hardin_coefficients(7).size() == 9);
    CHECK(hardin_coefficients(6).size() == 5);
}

TEST_CASE("binomial identities") {
    CHECK(alternating_binomial_sum(1) == -1);
    CHECK(alternating_binomial_closed(1) == -1);
    CHECK(alternating_binomial_sum(3) == -10);
    CHECK(alternating_binomial_closed(3) == -10);
    CHECK(frisch_sum(1) == ExactRational(1, 2));
    CHECK(frisch_closed(1) == ExactRational(1, 2));
    const auto report = identity_suite(50);
    CHECK(report.verdict());
    CHECK(report.rows.size() == 100);
}
