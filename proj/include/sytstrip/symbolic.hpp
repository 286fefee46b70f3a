#pragma once

// Iterated-integral mechanizations of the three-row kernel J_n(t1,t2,t3), the
// width-4 kernel, and the width-5 (A, B) polynomial pipeline with its
// integer coefficients C_1..C_4.

#include "sytstrip/arith.hpp"
#include "sytstrip/polynomial.hpp"

#include <utility>
#include <vector>

namespace sytstrip {

// ---- three rows ----------------------------------------------------------

/// J_n(t1,t2,t3) by n-fold application of
/// J_n = iiint_{0<x<t1<y<t2<z<t3} J_{n-1}(x,y,z), starting from J_0 = 1.
MultiPoly j3_recursive(unsigned n);

/// J_n(t1,t2,t3) assembled from its closed form:
/// t1^n t2^n t3^n / n!^3
///   + 2/(n!(2n)!) sum_{i<n} (-1)^(n-i) binom(2n,i) [t1^n t2^(2n-i) t3^i - t1^(2n-i) t2^n t3^i + t1^(2n-i) t2^i t3^n].
MultiPoly j3_closed(unsigned n);

/// 1/n!^3 + 2/(n!(2n)!) sum_{i<n} (-1)^(n-i) binom(2n,i); the closed form
/// of J_n is stable under the recursion exactly when this vanishes.
ExactRational lemma1_remainder_bracket(unsigned n);

/// g(3,n) = (3n)! iiint_{0<t1<t2<t3<1} J_{n-1}. Needs 2 <= n <= max_n.
BigCount g3_via_integration(unsigned n, unsigned max_n = 8);

// ---- width 4 -------------------------------------------------------------

/// Kernel K_n(u, v) with u = t_{2n-1}, v = t_{2n}, from K_1 = u and
/// K_{n+1}(u,v) = iint_{0<a<b<u} K_n(a,b) (u-a)(v-b).
MultiPoly width4_kernel_recursive(unsigned n);

/// u^(4n-4)/(4n-3)! ((4n-3) P_{2n-2} v - ((4n-4) P_{2n-2} - P_{2n-3}) u). Needs n >= 2.
MultiPoly width4_kernel_closed(unsigned n);

/// Recursive kernel, checked against the closed form. Needs n >= 2.
MultiPoly width4_kernel(unsigned n);

/// (4n)! iint_{0<u<v<1} (1 - v) K_n(u, v). Needs n >= 1.
BigCount width4_count(unsigned n);

// ---- width 5 -------------------------------------------------------------

struct CiQuadruple {
    unsigned n = 0;
    BigInt c1, c2, c3, c4;
    bool operator==(const CiQuadruple&) const = default;
};

/// C(2), C(3), ..., C(n_max) from C(2) = (0, -1, 0, -2).
std::vector<CiQuadruple> ci_recurrence(unsigned n_max);

/// g(n,5) = (5n-2) C_1(n+1) - C_2(n+1), cross-checked against
/// (5n-7)(25n-24) C_1(n) - (25n-26) C_2(n) - (25n-28) C_3(n) + 5 C_4(n) for n >= 2 and
/// (5m-7)(550m-524) C_1(m) - (550m-590) C_2(m) - (550m-594) C_3(m) + 110 C_4(m), m = n-1, for n >= 3.
BigCount g5_from_ci(unsigned n);

/// A_n(z,s) and B_n(z,s): integrals of D_{n-1} and y * D_{n-1} over the first
/// two cells of row n-1, with z = z_{n-1}, s = s_{n-1}.
struct Width5Pair {
    unsigned n = 0;
    MultiPoly a;
    MultiPoly b;
};

/// A_2 = z^2/2 and B_2 = z^3/3, from D_1 = 1.
Width5Pair width5_initial();

/// One step (A_n, B_n) -> (A_{n+1}, B_{n+1}) by direct integration.
Width5Pair width5_step(const Width5Pair& current);

/// Reads C_1..C_4 off A_n = C1 z^(5n-9)/(5n-9)! s - C2 z^(5n-8)/(5n-8)! and
/// B_n = C3 z^(5n-8)/(5n-8)! s - C4 z^(5n-7)/(5n-7)!. Throws ExactnessError
/// when either polynomial has any other term or a non-integral coefficient.
CiQuadruple width5_coefficients(const Width5Pair& pair);

/// (A_{n+1}, B_{n+1}) by integration from the initial pair; each step's
/// coefficients are checked against ci_recurrence. Needs 2 <= n <= max_n.
Width5Pair width5_symbolic(unsigned n, unsigned max_n = 6);

/// g(n,5) = (5n)! iiint_{0<z<s<t<1} A_{n+1}(z, s). Needs 1 <= n <= max_n.
BigCount width5_count(unsigned n, unsigned max_n = 8);

}  // namespace sytstrip
