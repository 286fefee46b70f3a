#include "sytstrip/suites.hpp"

#include "sytstrip/errors.hpp"
#include "sytstrip/formulas.hpp"
#include "sytstrip/symbolic.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

namespace sytstrip {

namespace {

// Runs one comparison; an ExactnessError becomes a failed row instead of
// aborting the suite.
void check(SequenceReport& report, long index, const std::string& note,
           const std::function<std::pair<std::string, std::string>()>& compute) {
    try {
        auto [expected, actual] = compute();
        const bool pass = expected == actual;
        report.add(index, std::move(expected), std::move(actual), pass, note);
    } catch (const ExactnessError& e) {
        report.add(index, "-", "-", false, note + ": " + e.what());
    }
}

std::pair<std::string, std::string> pair_of(const BigInt& expected, const BigInt& actual) {
    return {expected.get_str(), actual.get_str()};
}

BigCount dp_strip(int rows, int width, const CountLimits& limits) {
    return count_ideal_dp(build_strip({rows, width}), limits);
}

SequenceReport oracle_suite(long max_cells, const CountLimits& limits) {
    SequenceReport report;
    report.family = "oracle";
    long index = 0;
    for (int rows = 1; rows <= max_cells; ++rows) {
        for (int width = 1; rows * width <= max_cells; ++width) {
            const StripSpec spec{rows, width};
            const CellPoset poset = build_strip(spec);
            const BigCount dp = count_ideal_dp(poset, limits);
            const std::string shape = to_string(ShapeSpec(spec));
            ++index;
            check(report, index, shape + " backtrack", [&] { return pair_of(dp, count_backtrack(poset, limits)); });
            check(report, index, shape + " matrix", [&] { return pair_of(dp, count_matrix_model(spec, limits)); });
        }
    }
    for (const auto& lambda : strict_partitions_up_to(static_cast<int>(max_cells))) {
        const CellPoset poset = build_shifted(lambda);
        const BigCount dp = count_ideal_dp(poset, limits);
        const std::string shape = to_string(ShapeSpec(lambda));
        ++index;
        check(report, index, shape + " backtrack", [&] { return pair_of(dp, count_backtrack(poset, limits)); });
        check(report, index, shape + " product-formula", [&] { return pair_of(dp, product_formula(lambda)); });
    }
    return report;
}

SequenceReport pell_suite(long limit, const CountLimits& limits) {
    SequenceReport report;
    report.family = "gn4-pell";
    std::vector<BigCount> g;
    for (long n = 1; n <= limit; ++n) {
        g.push_back(dp_strip(static_cast<int>(n), 4, limits));
        const BigCount expected = pell(static_cast<unsigned>(2 * n - 1));
        bool pass = expected == g.back();
        std::string note = "dp vs P(2n-1)";
        if (n >= 3) {
            const bool recurrence = g[n - 1] == 6 * g[n - 2] - g[n - 3];
            pass = pass && recurrence;
            note += recurrence ? "; a(n)=6a(n-1)-a(n-2) holds" : "; a(n)=6a(n-1)-a(n-2) FAILS";
        }
        report.add(n, expected.get_str(), g.back().get_str(), pass, note);
    }
    return report;
}

SequenceReport theorem1_suite(long limit, const CountLimits& limits) {
    SequenceReport report;
    report.family = "g3n";
    for (long n = 2; n <= limit; ++n) {
        const auto u = static_cast<unsigned>(n);
        const BigCount dp = dp_strip(3, static_cast<int>(n), limits);
        check(report, n, "panova sum", [&] { return pair_of(dp, panova_sum(u)); });
        check(report, n, "alternating sum (plain-factor reading)", [&] { return pair_of(dp, g3_sum13(u)); });
        check(report, n, "closed form via A_n", [&] { return pair_of(dp, g3_closed14(u)); });
        check(report, n, "first-order recurrence", [&] { return pair_of(dp, g3_by_theorem1(u)); });
        check(report, n, "second-order recurrence", [&] { return pair_of(dp, g3_by_kotesovec(u)); });
    }
    return report;
}

SequenceReport theorem3_suite(long limit, const CountLimits& limits) {
    SequenceReport report;
    report.family = "gn5";
    const long ci_limit = std::max(limit, 12L);
    for (long n = 1; n <= ci_limit; ++n) {
        const auto u = static_cast<unsigned>(n);
        const BigCount seq = theorem3_seq(u);
        if (n <= limit) {
            check(report, n, "dp vs order-3 recurrence", [&] { return pair_of(seq, dp_strip(static_cast<int>(n), 5, limits)); });
        }
        check(report, n, "C_i(n) forms vs order-3 recurrence", [&] { return pair_of(seq, g5_from_ci(u)); });
    }
    return report;
}

SequenceReport hardin_suite(int k, long limit, const CountLimits& limits) {
    std::vector<BigCount> g;
    for (long n = 1; n <= limit; ++n) g.push_back(dp_strip(static_cast<int>(n), k, limits));
    return hardin_check(k, g, 1);
}

SequenceReport lemma1_suite(long limit) {
    SequenceReport report;
    report.family = "lemma1";
    for (long n = 1; n <= limit; ++n) {
        const auto u = static_cast<unsigned>(n);
        check(report, n, "iterated integral vs closed form", [&] {
            return std::pair{j3_closed(u).to_string(), j3_recursive(u).to_string()};
        });
    }
    for (long n = 1; n <= std::max(limit, 30L); ++n) {
        const ExactRational bracket = lemma1_remainder_bracket(static_cast<unsigned>(n));
        report.add(n, ExactRational(0), bracket, "remainder bracket");
    }
    return report;
}

SequenceReport theorem2_suite(long limit) {
    SequenceReport report;
    report.family = "width4-kernel";
    for (long n = 2; n <= limit; ++n) {
        const auto u = static_cast<unsigned>(n);
        check(report, n, "recursive kernel vs closed kernel", [&] {
            return std::pair{width4_kernel_closed(u).to_string(), width4_kernel_recursive(u).to_string()};
        });
        check(report, n, "(4n)! * integral vs P(2n-1)", [&] { return pair_of(pell(2 * u - 1), width4_count(u)); });
    }
    return report;
}

SequenceReport width5_suite(long limit, const CountLimits& limits) {
    SequenceReport report;
    report.family = "width5-symbolic";
    const auto cs = ci_recurrence(static_cast<unsigned>(std::max(limit + 1, 20L)));
    for (long n = 2; n <= limit; ++n) {
        const auto u = static_cast<unsigned>(n);
        check(report, n + 1, "integrated (C1,C2,C3,C4) vs recurrence", [&] {
            const CiQuadruple got = width5_coefficients(width5_symbolic(u, static_cast<unsigned>(limit)));
            const CiQuadruple& want = cs[n - 1];
            auto text = [](const CiQuadruple& c) {
                return c.c1.get_str() + "," + c.c2.get_str() + "," + c.c3.get_str() + "," + c.c4.get_str();
            };
            return std::pair{text(want), text(got)};
        });
    }
    for (const auto& c : cs) {
        BigInt expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), 2, c.n - 2);
        report.add(c.n, BigInt(-expected), BigInt(c.c2 - c.c3), "doubling law C2-C3 = -2^(n-2)");
    }
    for (long n = 1; n <= limit; ++n) {
        check(report, n, "(5n)! * integral vs dp", [&] {
            return pair_of(dp_strip(static_cast<int>(n), 5, limits),
                           width5_count(static_cast<unsigned>(n), static_cast<unsigned>(limit)));
        });
    }
    return report;
}

SequenceReport identities_suite(long limit, const CountLimits& limits) {
    SequenceReport report = identity_suite(static_cast<unsigned>(limit));
    for (long n = 1; n <= std::min(limit, 30L); ++n) {
        const auto u = static_cast<unsigned>(n);
        report.add(n, a_sequence_recurrence(u), a_sequence_direct(u), "A_n direct vs recurrence");
    }
    for (long n = 2; n <= std::min(limit, 10L); ++n) {
        const auto u = static_cast<unsigned>(n);
        report.add(n, a_from_g3(u, dp_strip(3, static_cast<int>(n), limits)), a_sequence_direct(u),
                   "A_n vs relation through g(3,n)");
    }
    return report;
}

SequenceReport product_formula_suite(long limit, const CountLimits& limits) {
    SequenceReport report;
    report.family = "product-formula";
    long index = 0;
    for (const auto& lambda : strict_partitions_up_to(static_cast<int>(limit))) {
        ++index;
        check(report, index, to_string(ShapeSpec(lambda)), [&] {
            return pair_of(product_formula(lambda), count_backtrack(build_shifted(lambda), limits));
        });
    }
    return report;
}

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

SequenceReport montecarlo_suite(long max_cells, const SuiteOptions& options) {
    SequenceReport report;
    report.family = "montecarlo";
    long index = 0;
    for (int rows = 1; rows <= max_cells; ++rows) {
        for (int width = 1; rows * width <= max_cells; ++width) {
            const StripSpec spec{rows, width};
            const double exact = count_ideal_dp(build_strip(spec), options.limits).get_d();
            const VolumeEstimate est = estimate_volume_mc(spec, options.samples, options.seed);
            const double deviation = std::fabs(est.count_estimate - exact);
            const bool pass = deviation <= 4.0 * est.count_stderr;
            report.add(++index, fixed(exact), fixed(est.count_estimate) + " +- " + fixed(est.count_stderr), pass,
                       to_string(ShapeSpec(spec)) + " within 4 standard errors");
        }
    }
    return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"oracle",   "pell",   "theorem1", "theorem3",
                                                "hardin",   "lemma1", "theorem2", "width5",
                                                "identities", "product-formula", "montecarlo"};
    return names;
}

long default_suite_limit(const std::string& name, int hardin_width) {
    static const std::map<std::string, long> defaults{
        {"oracle", 12},   {"pell", 12},     {"theorem1", 8}, {"theorem3", 8},
        {"lemma1", 5},    {"theorem2", 6},  {"width5", 6},   {"identities", 50},
        {"product-formula", 12}, {"montecarlo", 12}};
    if (name == "hardin") {
        switch (hardin_width) {
            case 4: return 12;
            case 5: return 8;
            case 6: return 10;
            case 7: return 14;
            default: throw std::invalid_argument("hardin suite needs --k in 4..7");
        }
    }
    auto it = defaults.find(name);
    if (it == defaults.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    return it->second;
}

SequenceReport run_suite(const std::string& name, const SuiteOptions& options) {
    const long limit = options.limit.value_or(default_suite_limit(name, options.hardin_width));
    if (limit < 1) throw std::invalid_argument("suite limit must be positive");
    const auto& lim = options.limits;
    if (name == "oracle") return oracle_suite(limit, lim);
    if (name == "pell") return pell_suite(limit, lim);
    if (name == "theorem1") return theorem1_suite(limit, lim);
    if (name == "theorem3") return theorem3_suite(limit, lim);
    if (name == "hardin") return hardin_suite(options.hardin_width, limit, lim);
    if (name == "lemma1") return lemma1_suite(limit);
    if (name == "theorem2") return theorem2_suite(limit);
    if (name == "width5") return width5_suite(limit, lim);
    if (name == "identities") return identities_suite(limit, lim);
    if (name == "product-formula") return product_formula_suite(limit, lim);
    if (name == "montecarlo") return montecarlo_suite(limit, options);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace sytstrip
