#include "sytstrip/symbolic.hpp"

#include "sytstrip/errors.hpp"
#include "sytstrip/formulas.hpp"

#include <stdexcept>
#include <string>

namespace sytstrip {

namespace {

void check_degree(const MultiPoly& p, int expected, const std::string& what) {
    if (!p.is_zero() && p.total_degree() != expected) {
        throw ExactnessError(what + ": expected total degree " + std::to_string(expected) + ", got " +
                             std::to_string(p.total_degree()) + " in " + p.to_string());
    }
}

ExactRational inv_factorial(long k) { return ExactRational(1) / ExactRational(factorial(static_cast<unsigned>(k))); }

const std::vector<std::string> kT3{"t1", "t2", "t3"};

}  // namespace

// ---- three rows ----------------------------------------------------------

MultiPoly j3_recursive(unsigned n) {
    const std::vector<std::string> work{"t1", "t2", "t3", "x", "y", "z"};
    MultiPoly j = MultiPoly::constant(kT3, 1);
    for (unsigned k = 1; k <= n; ++k) {
        MultiPoly inner = j.rename({{"t1", "x"}, {"t2", "y"}, {"t3", "z"}}, work);
        inner = integrate(inner, "x", Bound::zero(), Bound::var("t1"));
        inner = integrate(inner, "y", Bound::var("t1"), Bound::var("t2"));
        inner = integrate(inner, "z", Bound::var("t2"), Bound::var("t3"));
        j = inner.with_variables(kT3);
        check_degree(j, 3 * static_cast<int>(k), "J_" + std::to_string(k));
    }
    return j;
}

MultiPoly j3_closed(unsigned n) {
    if (n < 1) throw std::invalid_argument("j3_closed needs n >= 1");
    const int m = static_cast<int>(n);
    const BigInt nf = factorial(n);
    MultiPoly j = MultiPoly::monomial(kT3, make_rational(BigInt(1), nf * nf * nf), {{"t1", m}, {"t2", m}, {"t3", m}});
    const ExactRational scale = make_rational(BigInt(2), nf * factorial(2 * n));
    for (int i = 0; i < m; ++i) {
        const ExactRational c = scale * ExactRational(sign_power(m - i) * binomial(2 * m, i));
        j += MultiPoly::monomial(kT3, c, {{"t1", m}, {"t2", 2 * m - i}, {"t3", i}});
        j -= MultiPoly::monomial(kT3, c, {{"t1", 2 * m - i}, {"t2", m}, {"t3", i}});
        j += MultiPoly::monomial(kT3, c, {{"t1", 2 * m - i}, {"t2", i}, {"t3", m}});
    }
    return j;
}

ExactRational lemma1_remainder_bracket(unsigned n) {
    if (n < 1) throw std::invalid_argument("remainder bracket needs n >= 1");
    const long m = n;
    const BigInt nf = factorial(n);
    BigInt alt = 0;
    for (long i = 0; i < m; ++i) alt += sign_power(m - i) * binomial(2 * m, i);
    return make_rational(BigInt(1), nf * nf * nf) + make_rational(2 * alt, nf * factorial(2 * n));
}

BigCount g3_via_integration(unsigned n, unsigned max_n) {
    if (n < 2) throw std::invalid_argument("g3_via_integration needs n >= 2");
    if (n > max_n) {
        throw BudgetExceeded("symbolic three-row integration is capped at n = " + std::to_string(max_n));
    }
    const ExactRational volume = integrate_over_unit_chain(j3_recursive(n - 1), kT3);
    return require_integer(ExactRational(factorial(3 * n)) * volume, "g3_via_integration(" + std::to_string(n) + ")");
}

// ---- width 4 -------------------------------------------------------------

namespace {
const std::vector<std::string> kUV{"u", "v"};
}

MultiPoly width4_kernel_recursive(unsigned n) {
    if (n < 1) throw std::invalid_argument("width-4 kernel needs n >= 1");
    const std::vector<std::string> work{"u", "v", "a", "b"};
    MultiPoly k = MultiPoly::variable(kUV, "u");
    for (unsigned step = 2; step <= n; ++step) {
        // previous row's pair (a, b) sits below the new pair: 0 < a < b < u
        MultiPoly inner = k.rename({{"u", "a"}, {"v", "b"}}, work);
        inner = inner * (MultiPoly::variable(work, "u") - MultiPoly::variable(work, "a"));
        inner = inner * (MultiPoly::variable(work, "v") - MultiPoly::variable(work, "b"));
        inner = integrate(inner, "a", Bound::zero(), Bound::var("b"));
        inner = integrate(inner, "b", Bound::zero(), Bound::var("u"));
        k = inner.with_variables(kUV);
        check_degree(k, 4 * static_cast<int>(step) - 3, "width-4 kernel K_" + std::to_string(step));
    }
    return k;
}

MultiPoly width4_kernel_closed(unsigned n) {
    if (n < 2) throw std::invalid_argument("width-4 closed kernel needs n >= 2");
    const int m = static_cast<int>(n);
    const ExactRational scale = inv_factorial(4 * m - 3);
    const BigInt p_even = pell(2 * n - 2);
    const BigInt p_odd = pell(2 * n - 3);
    MultiPoly k = MultiPoly::monomial(kUV, scale * ExactRational(BigInt(4 * m - 3) * p_even),
                                      {{"u", 4 * m - 4}, {"v", 1}});
    k -= MultiPoly::monomial(kUV, scale * ExactRational(BigInt(4 * m - 4) * p_even - p_odd), {{"u", 4 * m - 3}});
    return k;
}

MultiPoly width4_kernel(unsigned n) {
    MultiPoly recursive = width4_kernel_recursive(n);
    MultiPoly closed = width4_kernel_closed(n);
    if (!(recursive == closed)) {
        throw ExactnessError("width-4 kernel K_" + std::to_string(n) + ": recursion gives " + recursive.to_string() +
                             ", closed form gives " + closed.to_string());
    }
    return recursive;
}

BigCount width4_count(unsigned n) {
    if (n < 1) throw std::invalid_argument("width4_count needs n >= 1");
    const MultiPoly weight = MultiPoly::constant(kUV, 1) - MultiPoly::variable(kUV, "v");
    const ExactRational volume = integrate_over_unit_chain(weight * width4_kernel_recursive(n), {"u", "v"});
    return require_integer(ExactRational(factorial(4 * n)) * volume, "width4_count(" + std::to_string(n) + ")");
}

// ---- width 5 -------------------------------------------------------------

std::vector<CiQuadruple> ci_recurrence(unsigned n_max) {
    if (n_max < 2) throw std::invalid_argument("ci_recurrence needs n_max >= 2");
    std::vector<CiQuadruple> out{{2, 0, -1, 0, -2}};
    while (out.back().n < n_max) {
        const CiQuadruple& c = out.back();
        const long n = c.n;
        CiQuadruple next;
        next.n = c.n + 1;
        next.c1 = BigInt(10 * (n - 1) * (5 * n - 7)) * c.c1 - (10 * n - 11) * c.c2 - (10 * n - 11) * c.c3 + 2 * c.c4;
        next.c2 = BigInt((5 * n - 4) * (5 * n - 7) * (10 * n - 11)) * c.c1 - BigInt(2 * (5 * n - 4) * (5 * n - 6)) * c.c2 -
                  BigInt(50 * (n - 1) * (n - 1)) * c.c3 + (10 * n - 9) * c.c4;
        next.c3 = BigInt((5 * n - 4) * (5 * n - 7) * (10 * n - 11)) * c.c1 - BigInt(50 * (n - 1) * (n - 1)) * c.c2 -
                  BigInt(2 * (5 * n - 4) * (5 * n - 6)) * c.c3 + (10 * n - 9) * c.c4;
        next.c4 = BigInt(2 * (5 * n - 3) * (5 * n - 4) * (5 * n - 6) * (5 * n - 7)) * c.c1 -
                  BigInt((5 * n - 3) * (5 * n - 6) * (10 * n - 9)) * c.c2 -
                  BigInt((5 * n - 3) * (5 * n - 6) * (10 * n - 9)) * c.c3 + BigInt(10 * (n - 1) * (5 * n - 3)) * c.c4;
        out.push_back(std::move(next));
    }
    return out;
}

BigCount g5_from_ci(unsigned n) {
    if (n < 1) throw std::invalid_argument("g5_from_ci needs n >= 1");
    const auto cs = ci_recurrence(n + 1);
    auto at = [&](unsigned k) -> const CiQuadruple& { return cs[k - 2]; };
    const long m = n;

    const CiQuadruple& next = at(n + 1);
    const BigInt via21 = BigInt(5 * m - 2) * next.c1 - next.c2;
    if (n >= 2) {
        const CiQuadruple& c = at(n);
        const BigInt via22 = BigInt((5 * m - 7) * (25 * m - 24)) * c.c1 - BigInt(25 * m - 26) * c.c2 -
                             BigInt(25 * m - 28) * c.c3 + 5 * c.c4;
        if (via22 != via21) {
            throw ExactnessError("g(" + std::to_string(n) + ",5): C(n+1) form gives " + via21.get_str() +
                                 ", C(n) form gives " + via22.get_str());
        }
    }
    if (n >= 3) {
        const long p = m - 1;
        const CiQuadruple& c = at(n - 1);
        const BigInt via23 = BigInt((5 * p - 7) * (550 * p - 524)) * c.c1 - BigInt(550 * p - 590) * c.c2 -
                             BigInt(550 * p - 594) * c.c3 + 110 * c.c4;
        if (via23 != via21) {
            throw ExactnessError("g(" + std::to_string(n) + ",5): C(n+1) form gives " + via21.get_str() +
                                 ", C(n-1) form gives " + via23.get_str());
        }
    }
    return via21;
}

namespace {
const std::vector<std::string> kZS{"z", "s"};
}

Width5Pair width5_initial() {
    // D_1 = 1: A_2 = iint_{0<x<y<z} 1, B_2 = iint_{0<x<y<z} y
    const std::vector<std::string> work{"z", "s", "x", "y"};
    MultiPoly one = MultiPoly::constant(work, 1);
    MultiPoly y = MultiPoly::variable(work, "y");
    auto over_xy = [](MultiPoly p) {
        p = integrate(p, "x", Bound::zero(), Bound::var("y"));
        return integrate(p, "y", Bound::zero(), Bound::var("z"));
    };
    return {2, over_xy(one).with_variables(kZS), over_xy(y).with_variables(kZS)};
}

Width5Pair width5_step(const Width5Pair& current) {
    // Row n-1 contributes z' < s' < t', and row n the cell y; the outer cells of
    // row n are z < s. Integrating x_n over (y_{n-1}, y_n) and then the first
    // two cells of row n-1 leaves A_n(z',s') y - B_n(z',s') on the domain
    //   0 < z' < s' < t' < s,  s' < z,  z' < y < z   (with z < s outside).
    // Iterated as: t' in (s', s), y in (z', z), s' in (z', z), z' in (0, z).
    const std::vector<std::string> work{"z", "s", "zp", "sp", "tp", "y"};
    const MultiPoly a = current.a.rename({{"z", "zp"}, {"s", "sp"}}, work);
    const MultiPoly b = current.b.rename({{"z", "zp"}, {"s", "sp"}}, work);
    const MultiPoly y = MultiPoly::variable(work, "y");

    auto over_domain = [](MultiPoly p) {
        p = integrate(p, "tp", Bound::var("sp"), Bound::var("s"));
        p = integrate(p, "y", Bound::var("zp"), Bound::var("z"));
        p = integrate(p, "sp", Bound::var("zp"), Bound::var("z"));
        p = integrate(p, "zp", Bound::zero(), Bound::var("z"));
        return p;
    };
    const MultiPoly a_integrand = a * y - b;
    Width5Pair next{current.n + 1, over_domain(a_integrand).with_variables(kZS),
                    over_domain(a_integrand * y).with_variables(kZS)};
    const int k = static_cast<int>(next.n);
    check_degree(next.a, 5 * k - 8, "width-5 A_" + std::to_string(k));
    check_degree(next.b, 5 * k - 7, "width-5 B_" + std::to_string(k));
    return next;
}

CiQuadruple width5_coefficients(const Width5Pair& pair) {
    const int n = static_cast<int>(pair.n);
    const std::string tag = "width-5 pair at n=" + std::to_string(n);
    auto read = [&](const MultiPoly& p, int lin_power, int pure_power, const char* name) {
        // p = c_lin z^lin s / lin! - c_pure z^pure / pure!
        const ExactRational lin = p.coefficient({{"z", lin_power}, {"s", 1}});
        const ExactRational pure = p.coefficient({{"z", pure_power}});
        MultiPoly rebuilt = MultiPoly::monomial(kZS, lin, {{"z", lin_power}, {"s", 1}}) +
                            MultiPoly::monomial(kZS, pure, {{"z", pure_power}});
        if (!(rebuilt == p)) {
            throw ExactnessError(tag + ": " + name + " is not of the two-term form: " + p.to_string());
        }
        return std::pair{require_integer(lin * ExactRational(factorial(static_cast<unsigned>(lin_power))), tag),
                         require_integer(-pure * ExactRational(factorial(static_cast<unsigned>(pure_power))), tag)};
    };
    auto [c1, c2] = read(pair.a, 5 * n - 9, 5 * n - 8, "A");
    auto [c3, c4] = read(pair.b, 5 * n - 8, 5 * n - 7, "B");
    return {pair.n, c1, c2, c3, c4};
}

namespace {

Width5Pair width5_iterate(unsigned target_n) {
    const auto expected = ci_recurrence(target_n);
    Width5Pair pair = width5_initial();
    while (true) {
        const CiQuadruple got = width5_coefficients(pair);
        const CiQuadruple& want = expected[pair.n - 2];
        if (!(got == want)) {
            throw ExactnessError("width-5 coefficients at n=" + std::to_string(pair.n) + ": integration gives (" +
                                 got.c1.get_str() + ", " + got.c2.get_str() + ", " + got.c3.get_str() + ", " +
                                 got.c4.get_str() + "), recurrence gives (" + want.c1.get_str() + ", " +
                                 want.c2.get_str() + ", " + want.c3.get_str() + ", " + want.c4.get_str() + ")");
        }
        if (pair.n == target_n) return pair;
        pair = width5_step(pair);
    }
}

}  // namespace

Width5Pair width5_symbolic(unsigned n, unsigned max_n) {
    if (n < 2) throw std::invalid_argument("width5_symbolic needs n >= 2");
    if (n > max_n) throw BudgetExceeded("symbolic width-5 pipeline is capped at n = " + std::to_string(max_n));
    return width5_iterate(n + 1);
}

BigCount width5_count(unsigned n, unsigned max_n) {
    if (n < 1) throw std::invalid_argument("width5_count needs n >= 1");
    if (n > max_n) throw BudgetExceeded("symbolic width-5 count is capped at n = " + std::to_string(max_n));
    const Width5Pair pair = width5_iterate(n + 1);
    const std::vector<std::string> chain_vars{"z", "s", "t"};
    const MultiPoly a = pair.a.with_variables(chain_vars);
    const ExactRational volume = integrate_over_unit_chain(a, chain_vars);
    return require_integer(ExactRational(factorial(5 * n)) * volume, "width5_count(" + std::to_string(n) + ")");
}

}  // namespace sytstrip
