#pragma once

// Sparse multivariate polynomials over the rationals, with definite
// integration between 0, 1, or another variable.

#include "sytstrip/arith.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sytstrip {

using Exponents = std::vector<int>;

/// Graded order: higher total degree first, ties broken lexicographically
/// (larger exponent on an earlier variable first).
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Integration limit: the constant 0, the constant 1, or a variable.
struct Bound {
    enum class Kind { Zero, One, Variable };
    Kind kind = Kind::Zero;
    std::string name;

    static Bound zero() { return {Kind::Zero, {}}; }
    static Bound one() { return {Kind::One, {}}; }
    static Bound var(std::string name) { return {Kind::Variable, std::move(name)}; }
};

class MultiPoly {
public:
    using TermMap = std::map<Exponents, ExactRational, GrlexDescending>;

    explicit MultiPoly(std::vector<std::string> variables);

    static MultiPoly constant(std::vector<std::string> variables, const ExactRational& c);
    static MultiPoly variable(std::vector<std::string> variables, const std::string& name);
    /// c * prod name^exp over the listed factors.
    static MultiPoly monomial(std::vector<std::string> variables, const ExactRational& c,
                              std::initializer_list<std::pair<std::string, int>> factors);

    const std::vector<std::string>& variables() const { return variables_; }
    const TermMap& terms() const { return terms_; }
    std::size_t var_index(const std::string& name) const;  // throws std::invalid_argument
    bool has_variable(const std::string& name) const;

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(const std::string& name) const;

    ExactRational coefficient(const Exponents& e) const;
    ExactRational coefficient(std::initializer_list<std::pair<std::string, int>> factors) const;
    void add_term(const Exponents& e, const ExactRational& c);

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const ExactRational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const ExactRational& c) { return a *= c; }
    friend MultiPoly operator*(const ExactRational& c, MultiPoly a) { return a *= c; }
    MultiPoly operator-() const;

    /// Requires identical variable lists; compares term by term.
    bool operator==(const MultiPoly& other) const;

    /// Replaces `name` by a bound. The variable stays declared but leaves the support.
    MultiPoly substitute(const std::string& name, const Bound& value) const;

    /// Re-expresses over `variables`. Dropped variables must not occur in any term.
    MultiPoly with_variables(std::vector<std::string> variables) const;

    /// Moves each old variable to the new name (simultaneous), over `variables`.
    MultiPoly rename(const std::vector<std::pair<std::string, std::string>>& mapping,
                     std::vector<std::string> variables) const;

    ExactRational evaluate(const std::vector<ExactRational>& point) const;

    /// Canonical text, terms in GrlexDescending order, e.g. "1/24*t1^2*t2^4 - t1*t2".
    std::string to_string() const;

private:
    void require_same_variables(const MultiPoly& other) const;

    std::vector<std::string> variables_;
    TermMap terms_;
};

/// Definite integral of `p` in `var` from `lower` to `upper`.
MultiPoly integrate(const MultiPoly& p, const std::string& var, const Bound& lower, const Bound& upper);

/// Integral over the chain 0 < chain[0] < chain[1] < ... < chain.back() < 1.
/// `p` may only depend on the chain variables; returns the number.
ExactRational integrate_over_unit_chain(const MultiPoly& p, const std::vector<std::string>& chain);

}  // namespace sytstrip
