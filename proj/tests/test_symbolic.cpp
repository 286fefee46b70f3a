#include "sytstrip/enumerate.hpp"
#include "sytstrip/errors.hpp"
#include "sytstrip/formulas.hpp"
#include "sytstrip/symbolic.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

using namespace sytstrip;

namespace {

const std::vector<std::string> kT{"t1", "t2", "t3"};

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(SYTSTRIP_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    return line;
}

}  // namespace

TEST_CASE("J_1 is t1 (t2 - t1)(t3 - t2)") {
    const MultiPoly t1 = MultiPoly::variable(kT, "t1");
    const MultiPoly t2 = MultiPoly::variable(kT, "t2");
    const MultiPoly t3 = MultiPoly::variable(kT, "t3");
    const MultiPoly expected = t1 * (t2 - t1) * (t3 - t2);
    CHECK(j3_recursive(1) == expected);
    CHECK(j3_closed(1) == expected);
    CHECK(j3_recursive(1).to_string() == "t1^2*t2 - t1^2*t3 - t1*t2^2 + t1*t2*t3");
}

TEST_CASE("J_n: recursion equals closed form") {
    for (unsigned n = 1; n <= 5; ++n) {
        CAPTURE(n);
        const MultiPoly rec = j3_recursive(n);
        const MultiPoly closed = j3_closed(n);
        CHECK(rec == closed);
        const std::vector<ExactRational> ones(3, 1);
        CHECK(rec.evaluate(ones) == closed.evaluate(ones));
    }
    CHECK(j3_closed(2).coefficient({{"t1", 2}, {"t2", 4}}) == ExactRational(1, 24));
}

TEST_CASE("golden text of J_2") {
    CHECK(j3_closed(2).to_string() == read_golden("j3_closed_2.txt"));
    CHECK(j3_recursive(2).to_string() == read_golden("j3_closed_2.txt"));
}

TEST_CASE("remainder bracket vanishes") {
    for (unsigned n = 1; n <= 30; ++n) CHECK(lemma1_remainder_bracket(n) == 0);
}

TEST_CASE("g(3,n) by integration") {
    CHECK(g3_via_integration(2) == 1);
    CHECK(g3_via_integration(3) == 4);
    CHECK(g3_via_integration(5) == 290);
    for (int n = 2; n <= 6; ++n) {
        CHECK(g3_via_integration(static_cast<unsigned>(n)) == count_ideal_dp(build_strip({3, n})));
    }
    CHECK_THROWS_AS(g3_via_integration(9), BudgetExceeded);
    CHECK_THROWS_AS(g3_via_integration(1), std::invalid_argument);
}

TEST_CASE("width-4 kernel") {
    const std::vector<std::string> uv{"u", "v"};
    const MultiPoly k2 = MultiPoly::monomial(uv, ExactRational(10, 120), {{"u", 4}, {"v", 1}}) -
                         MultiPoly::monomial(uv, ExactRational(7, 120), {{"u", 5}});
    CHECK(width4_kernel(2) == k2);
    CHECK(width4_kernel_closed(3) == width4_kernel_recursive(3));
    CHECK(width4_kernel_closed(3).coefficient({{"u", 8}, {"v", 1}}) == ExactRational(9 * 12) / ExactRational(factorial(9)));
    CHECK(width4_count(3) == 29);
    for (unsigned n = 2; n <= 8; ++n) {
        CHECK(width4_kernel_recursive(n) == width4_kernel_closed(n));
        CHECK(width4_count(n) == pell(2 * n - 1));
    }
    CHECK(width4_count(1) == 1);
}

TEST_CASE("C_i(n) recurrence") {
    const auto cs = ci_recurrence(20);
    CHECK(cs[0] == CiQuadruple{2, 0, -1, 0, -2});
    CHECK(cs[1] == CiQuadruple{3, 5, 26, 28, 168});
    CHECK(cs[2].c1 == 110);
    CHECK(cs[2].c2 == 1140);
    CHECK(cs[2].c2 - cs[2].c3 == 2 * (cs[1].c2 - cs[1].c3));
    CHECK(cs[2].c2 - cs[2].c3 == -4);
    for (const auto& c : cs) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, c.n - 2);
        CHECK(c.c2 - c.c3 == -p);
    }
}

TEST_CASE("g(n,5) from the C_i(n)") {
    CHECK(g5_from_ci(1) == 1);
    CHECK(g5_from_ci(2) == 14);
    CHECK(g5_from_ci(3) == 290);
    // the C(n) form at n = 2 with the initial quadruple: 3*26*0 + 24 - 0 - 10
    const CiQuadruple c2 = ci_recurrence(2).front();
    CHECK(BigInt(3 * 26) * c2.c1 - BigInt(24) * c2.c2 - BigInt(22) * c2.c3 + 5 * c2.c4 == 14);
    for (unsigned n = 1; n <= 12; ++n) CHECK(g5_from_ci(n) == theorem3_seq(n));
    for (int n = 1; n <= 8; ++n) CHECK(g5_from_ci(static_cast<unsigned>(n)) == count_ideal_dp(build_strip({n, 5})));
}

TEST_CASE("width-5 polynomials") {
    const Width5Pair init = width5_initial();
    CHECK(init.a == MultiPoly::monomial({"z", "s"}, ExactRational(1, 2), {{"z", 2}}));
    CHECK(init.b == MultiPoly::monomial({"z", "s"}, ExactRational(1, 3), {{"z", 3}}));
    CHECK(width5_coefficients(init) == CiQuadruple{2, 0, -1, 0, -2});

    const Width5Pair a3 = width5_symbolic(2);
    CHECK(a3.n == 3);
    const CiQuadruple c3 = width5_coefficients(a3);
    CHECK(c3.c1 == 5);
    CHECK(c3.c2 == 26);

    const CiQuadruple c4 = width5_coefficients(width5_symbolic(3));
    CHECK(c4.c3 == ci_recurrence(4).back().c3);
    CHECK(c4.c4 == ci_recurrence(4).back().c4);

    for (unsigned n = 1; n <= 6; ++n) CHECK(width5_count(n) == theorem3_seq(n));
    CHECK_THROWS_AS(width5_symbolic(7), BudgetExceeded);
}

TEST_CASE("width-5 shape check rejects stray terms") {
    Width5Pair bad = width5_initial();
    bad.a += MultiPoly::monomial({"z", "s"}, 1, {{"s", 2}});
    CHECK_THROWS_AS(width5_coefficients(bad), ExactnessError);
}
