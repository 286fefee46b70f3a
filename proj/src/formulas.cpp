#include "sytstrip/formulas.hpp"

#include "sytstrip/errors.hpp"

#include <stdexcept>
#include <string>

namespace sytstrip {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

ExactRational ratio(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

}  // namespace

BigCount pell(unsigned n) {
    BigCount prev = 0;  // P_0
    BigCount cur = 1;   // P_1
    if (n == 0) return prev;
    for (unsigned i = 1; i < n; ++i) {
        BigCount next = 2 * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigCount catalan(unsigned n) {
    return exact_divide(binomial(2 * static_cast<long>(n), n), BigInt(n + 1), "catalan");
}

BigCount product_formula(const StrictPartition& lambda) {
    const auto& parts = lambda.parts();
    ExactRational value(factorial(static_cast<unsigned>(lambda.size())));
    for (int p : parts) value /= factorial(static_cast<unsigned>(p));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            value *= ratio(parts[i] - parts[j], parts[i] + parts[j]);
        }
    }
    return require_integer(value, "product formula");
}

std::optional<BigCount> closed_form(const StripSpec& spec) {
    spec.validate();
    const auto rows = static_cast<unsigned>(spec.rows);
    const auto width = static_cast<unsigned>(spec.width);
    if (rows == 1 || width == 1 || width == 2) return BigCount(1);
    if (rows == 2) return catalan(width - 1);
    if (width == 3) {
        BigCount p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, rows - 1);
        return p;
    }
    if (width == 4) return pell(2 * rows - 1);
    return std::nullopt;
}

BigCount panova_sum(unsigned n) {
    require(n >= 2, "panova_sum needs n >= 2");
    const long m = n;
    ExactRational total = 0;
    for (long i = 0; i <= m - 2; ++i) {
        BigInt num = factorial(static_cast<unsigned>(2 * m + i - 1)) * (m - i) * (m - i - 1);
        BigInt den = factorial(n) * factorial(n - 1) * factorial(static_cast<unsigned>(i)) *
                     (2 * m - 1) * (m + i) * (m + i - 1);
        total += make_rational(num, den);
    }
    return require_integer(total, "panova_sum(" + std::to_string(n) + ")");
}

BigCount kotesovec_step(unsigned n, const BigCount& g_prev, const BigCount& g_prev2) {
    require(n >= 3, "kotesovec_step needs n >= 3");
    const long m = n;
    const BigInt lead = BigInt(2 * m - 1) * (7 * m - 13) * m * m;
    const BigInt c1 = BigInt(2) * (182 * m * m * m * m - 1185 * m * m * m + 2722 * m * m - 2625 * m + 900);
    const BigInt c2 = BigInt(3) * (2 * m - 5) * (3 * m - 5) * (3 * m - 4) * (7 * m - 6);
    return exact_divide(c1 * g_prev + c2 * g_prev2, lead, "kotesovec_step(" + std::to_string(n) + ")");
}

BigCount theorem1_step(unsigned n, const BigCount& g_n) {
    require(n >= 1, "theorem1_step needs n >= 1");
    const long m = n;
    ExactRational term = make_rational(BigInt(7 * m + 1), BigInt(m * m * (m + 1) * (m + 1)));
    term *= binomial(2 * m - 2, m - 1) * binomial(3 * m, m - 1);
    return require_integer(term - g_n, "theorem1_step(" + std::to_string(n) + ")");
}

BigCount g3_by_theorem1(unsigned n) {
    require(n >= 1, "g3_by_theorem1 needs n >= 1");
    BigCount g = 1;
    for (unsigned k = 1; k < n; ++k) g = theorem1_step(k, g);
    return g;
}

BigCount g3_by_kotesovec(unsigned n) {
    require(n >= 1, "g3_by_kotesovec needs n >= 1");
    BigCount prev2 = 1, prev = 1;  // g(3,1), g(3,2)
    if (n <= 2) return prev;
    for (unsigned k = 3; k <= n; ++k) {
        BigCount next = kotesovec_step(k, prev, prev2);
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

ExactRational a_sequence_direct(unsigned n) {
    require(n >= 1, "A_n needs n >= 1");
    const long m = n;
    ExactRational sum = 0;
    for (long i = 0; i <= m; ++i) {
        sum += make_rational(sign_power(i) * binomial(2 * m - 1, i), BigInt(m + i));
    }
    return sum;
}

ExactRational a_sequence_recurrence(unsigned n) {
    require(n >= 1, "A_n needs n >= 1");
    ExactRational a = ratio(1, 2);
    for (long m = 1; m < static_cast<long>(n); ++m) {
        const ExactRational carry = make_rational(BigInt(2 * m * (2 * m + 1)), BigInt(3 * (3 * m + 1) * (3 * m + 2)));
        const BigInt poly = BigInt(28 * m * m * m + 22 * m * m - m - 1);
        const ExactRational drive =
            make_rational(sign_power(m + 1) * poly * binomial(2 * m, m + 1),
                          BigInt(6 * m * (m + 1)) * (3 * m + 1) * (3 * m + 2));
        a = carry * a + drive;
    }
    return a;
}

ExactRational a_sequence(unsigned n) {
    ExactRational direct = a_sequence_direct(n);
    ExactRational recurrent = a_sequence_recurrence(n);
    if (direct != recurrent) {
        throw ExactnessError("A_" + std::to_string(n) + ": direct sum " + direct.get_str() +
                             " differs from recurrence " + recurrent.get_str());
    }
    return direct;
}

ExactRational a_from_g3(unsigned n, const BigCount& g3n) {
    require(n >= 1, "a_from_g3 needs n >= 1");
    const long m = n;
    const BigInt b = binomial(3 * m - 1, m);
    ExactRational out = make_rational(sign_power(m) * g3n, 4 * m * b);
    out += make_rational(BigInt(1), m * b);
    out += make_rational(sign_power(m) * BigInt(4 * m - 5) * binomial(2 * m - 1, m), BigInt(8 * m * (2 * m - 1)));
    return out;
}

BigCount g3_closed14(unsigned n) {
    require(n >= 1, "g3_closed14 needs n >= 1");
    const long m = n;
    const BigInt trinomial = factorial(3 * n) / (factorial(n) * factorial(n) * factorial(n));
    ExactRational value = make_rational(-BigInt(4 * m - 5) * trinomial, BigInt(6 * (2 * m - 1)));
    value += 4 * sign_power(m - 1);
    value += ExactRational(sign_power(m) * 4 * m * binomial(3 * m - 1, m)) * a_sequence(n);
    return require_integer(value, "g3_closed14(" + std::to_string(n) + ")");
}

ExactRational g3_sum13_value(unsigned n, Sum13Reading reading) {
    require(n >= 2, "g3_sum13 needs n >= 2");
    const long m = n;
    const BigInt nf = factorial(n);
    ExactRational value = make_rational(factorial(3 * n), 6 * nf * nf * nf);
    for (long i = 0; i <= m - 2; ++i) {
        const BigInt last = reading == Sum13Reading::PlainFactor ? BigInt(3 * m - i - 1)
                                                                 : factorial(static_cast<unsigned>(3 * m - i - 1));
        const BigInt num = sign_power(m - 1 - i) * factorial(3 * n - 1) * (5 * m - 3 * i - 3);
        const BigInt den = nf * factorial(static_cast<unsigned>(i)) * factorial(static_cast<unsigned>(2 * m - i - 1)) * last;
        value += make_rational(num, den);
    }
    return value;
}

BigCount g3_sum13(unsigned n) {
    return require_integer(g3_sum13_value(n, Sum13Reading::PlainFactor), "g3_sum13(" + std::to_string(n) + ")");
}

BigCount theorem3_seq(unsigned n) {
    require(n >= 1, "theorem3_seq needs n >= 1");
    std::vector<BigCount> g{BigCount(1), BigCount(14), BigCount(290)};
    while (g.size() < n) {
        const std::size_t k = g.size();
        g.push_back(24 * g[k - 1] - 40 * g[k - 2] - 8 * g[k - 3]);
    }
    return g[n - 1];
}

const std::vector<long long>& hardin_coefficients(int k) {
    static const std::vector<long long> w4{6, -1};
    static const std::vector<long long> w5{24, -40, -8};
    static const std::vector<long long> w6{120, -1672, 544, -6672, 256};
    static const std::vector<long long> w7{720,        -84448,    1503360,   -17912224, -318223104,
                                           564996096,  270471168, -11373824, 65536};
    switch (k) {
        case 4: return w4;
        case 5: return w5;
        case 6: return w6;
        case 7: return w7;
        default: throw std::invalid_argument("empirical recurrences exist for widths 4..7 only");
    }
}

SequenceReport hardin_check(int k, std::span<const BigCount> sequence, long first_index) {
    const auto& coeffs = hardin_coefficients(k);
    const std::size_t order = coeffs.size();
    if (sequence.size() <= order) {
        throw std::invalid_argument("width-" + std::to_string(k) + " recurrence has order " +
                                    std::to_string(order) + "; need at least " + std::to_string(order + 1) +
                                    " terms, got " + std::to_string(sequence.size()));
    }
    SequenceReport report;
    report.family = "hardin-w" + std::to_string(k);
    for (std::size_t n = order; n < sequence.size(); ++n) {
        BigInt predicted = 0;
        for (std::size_t j = 1; j <= order; ++j) {
            predicted += BigInt(static_cast<long>(coeffs[j - 1])) * sequence[n - j];
        }
        report.add(first_index + static_cast<long>(n), predicted, sequence[n]);
    }
    if (!report.verdict()) report.tags.push_back("empirical claim violated");
    return report;
}

BigInt alternating_binomial_sum(unsigned n) {
    BigInt s = 0;
    for (long i = 0; i <= static_cast<long>(n); ++i) s += sign_power(i) * binomial(2 * static_cast<long>(n), i);
    return s;
}

BigInt alternating_binomial_closed(unsigned n) {
    return sign_power(n) * binomial(2 * static_cast<long>(n) - 1, n);
}

ExactRational frisch_sum(unsigned n) {
    require(n >= 1, "frisch_sum needs n >= 1");
    const long m = n;
    ExactRational s = 0;
    for (long i = 0; i <= 2 * m - 1; ++i) s += make_rational(sign_power(i) * binomial(2 * m - 1, i), BigInt(m + i));
    return s;
}

ExactRational frisch_closed(unsigned n) {
    require(n >= 1, "frisch_closed needs n >= 1");
    return make_rational(factorial(n - 1) * factorial(2 * n - 1), factorial(3 * n - 1));
}

SequenceReport identity_suite(unsigned n_max) {
    require(n_max >= 1, "identity_suite needs n_max >= 1");
    SequenceReport report;
    report.family = "identities";
    for (unsigned n = 1; n <= n_max; ++n) {
        report.add(n, alternating_binomial_closed(n), alternating_binomial_sum(n), "eq11");
        report.add(n, frisch_closed(n), frisch_sum(n), "frisch");
    }
    return report;
}

}  // namespace sytstrip
