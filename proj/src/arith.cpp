#include "sytstrip/arith.hpp"

#include "sytstrip/errors.hpp"

#include <deque>
#include <mutex>

namespace sytstrip {

const BigInt& factorial(unsigned n) {
    // deque keeps references stable while the table grows
    static std::deque<BigInt> table{BigInt(1)};
    static std::mutex guard;
    std::lock_guard lock(guard);
    while (table.size() <= n) {
        BigInt next = table.back() * static_cast<unsigned long>(table.size());
        table.push_back(std::move(next));
    }
    return table[n];
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact at every step
    }
    return result;
}

BigInt require_integer(const ExactRational& value, const std::string& what) {
    if (value.get_den() != 1) {
        throw ExactnessError(what + ": expected an integer, got " + value.get_str());
    }
    return value.get_num();
}

BigInt exact_divide(const BigInt& numerator, const BigInt& denominator, const std::string& what) {
    if (denominator == 0) throw ExactnessError(what + ": division by zero");
    if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
        throw ExactnessError(what + ": " + numerator.get_str() + " is not divisible by " +
                             denominator.get_str());
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return q;
}

}  // namespace sytstrip
