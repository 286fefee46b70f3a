#pragma once

// Closed forms, recurrences and identities for strip tableau counts, all in
// exact arithmetic. Every evaluator that must produce an integer checks it
// and throws ExactnessError otherwise.

#include "sytstrip/arith.hpp"
#include "sytstrip/report.hpp"
#include "sytstrip/shapes.hpp"

#include <optional>
#include <span>
#include <vector>

namespace sytstrip {

/// P_0 = 0, P_1 = 1, P_n = 2 P_{n-1} + P_{n-2}.
BigCount pell(unsigned n);

/// C_n = binom(2n, n) / (n + 1).
BigCount catalan(unsigned n);

/// Shifted product formula |l|!/prod l_i! * prod_{i<j} (l_i - l_j)/(l_i + l_j).
BigCount product_formula(const StrictPartition& lambda);

/// Count of a strip when it belongs to a family with a closed form:
/// one row or width 1 (1), two rows (Catalan), width 2 (1), width 3 (2^(rows-1)),
/// width 4 (odd-index Pell number). Empty otherwise.
std::optional<BigCount> closed_form(const StripSpec& spec);

// ---- three-row strips, g(3,n) -------------------------------------------

/// Sum over the shifted shapes (n, n-1, i), 0 <= i <= n-2. Needs n >= 2.
BigCount panova_sum(unsigned n);

/// Order-2 polynomial-coefficient recurrence: g(3,n) from g(3,n-1), g(3,n-2). Needs n >= 3.
BigCount kotesovec_step(unsigned n, const BigCount& g_prev, const BigCount& g_prev2);

/// Non-homogeneous order-1 recurrence:
/// g(3,n+1) = -g(3,n) + (7n+1)/(n^2 (n+1)^2) binom(2n-2,n-1) binom(3n,n-1). Needs n >= 1.
BigCount theorem1_step(unsigned n, const BigCount& g_n);

/// g(3,n) by iterating theorem1_step from g(3,1) = 1.
BigCount g3_by_theorem1(unsigned n);

/// g(3,n) by iterating kotesovec_step from g(3,1) = g(3,2) = 1.
BigCount g3_by_kotesovec(unsigned n);

/// A_n = sum_{i=0}^{n} (-1)^i binom(2n-1, i) / (n+i).
ExactRational a_sequence_direct(unsigned n);

/// A_n from the first-order recurrence anchored at A_1 = 1/2.
ExactRational a_sequence_recurrence(unsigned n);

/// A_n by both routes; throws ExactnessError if they disagree.
ExactRational a_sequence(unsigned n);

/// Right-hand side of the relation expressing A_n through g(3,n):
/// (-1)^n g / (4n binom(3n-1,n)) + 1/(n binom(3n-1,n)) + (-1)^n (4n-5)/(8n(2n-1)) binom(2n-1,n).
ExactRational a_from_g3(unsigned n, const BigCount& g3n);

/// g(3,n) via the closed form in (3n)!/n!^3 and A_n. Needs n >= 1.
BigCount g3_closed14(unsigned n);

/// How the last denominator factor of the alternating g(3,n) sum is read.
/// The printed form carries a factorial there; it does not give integers.
enum class Sum13Reading { PlainFactor, Factorial };

/// (3n)!/(6 n!^3) + sum_{i=0}^{n-2} (-1)^{n-1-i} (3n-1)! (5n-3i-3) / (n! i! (2n-i-1)! D_i)
/// with D_i = (3n-i-1) or (3n-i-1)! depending on `reading`. Needs n >= 2.
ExactRational g3_sum13_value(unsigned n, Sum13Reading reading);

/// Integral g(3,n) from the alternating sum, plain-factor reading. Needs n >= 2.
BigCount g3_sum13(unsigned n);

// ---- width-5 strips ------------------------------------------------------

/// g(n,5) by a_n = 24 a_{n-1} - 40 a_{n-2} - 8 a_{n-3} from 1, 14, 290. Needs n >= 1.
BigCount theorem3_seq(unsigned n);

// ---- empirical recurrences and identities --------------------------------

/// Coefficients c_1..c_r of a_n = sum c_j a_{n-j} for width k in 4..7.
const std::vector<long long>& hardin_coefficients(int k);

/// Checks the width-k empirical recurrence at every index where it applies.
/// `sequence[0]` is taken as index `first_index`. Throws std::invalid_argument
/// when the sequence is not longer than the recurrence order.
SequenceReport hardin_check(int k, std::span<const BigCount> sequence, long first_index = 1);

/// sum_{i=0}^{n} (-1)^i binom(2n, i), and its closed value (-1)^n binom(2n-1, n).
BigInt alternating_binomial_sum(unsigned n);
BigInt alternating_binomial_closed(unsigned n);

/// sum_{i=0}^{2n-1} (-1)^i binom(2n-1, i)/(n+i), and (n-1)!(2n-1)!/(3n-1)!.
ExactRational frisch_sum(unsigned n);
ExactRational frisch_closed(unsigned n);

/// Both identities for 1 <= n <= n_max; rows are tagged by note "eq11" / "frisch".
SequenceReport identity_suite(unsigned n_max);

}  // namespace sytstrip
