#include "sytstrip/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sytstrip {

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        for (std::size_t j = i + 1; j < variables_.size(); ++j) {
            if (variables_[i] == variables_[j]) throw std::invalid_argument("duplicate variable " + variables_[i]);
        }
    }
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const ExactRational& c) {
    MultiPoly p(std::move(variables));
    p.add_term(Exponents(p.variables_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
    return monomial(std::move(variables), 1, {{name, 1}});
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, const ExactRational& c,
                              std::initializer_list<std::pair<std::string, int>> factors) {
    MultiPoly p(std::move(variables));
    Exponents e(p.variables_.size(), 0);
    for (const auto& [name, power] : factors) e[p.var_index(name)] += power;
    p.add_term(e, c);
    return p;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) throw std::invalid_argument("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - variables_.begin());
}

bool MultiPoly::has_variable(const std::string& name) const {
    return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;  // graded order puts the top degree first
    return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree_in(const std::string& name) const {
    const auto i = var_index(name);
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

ExactRational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ExactRational(0) : it->second;
}

ExactRational MultiPoly::coefficient(std::initializer_list<std::pair<std::string, int>> factors) const {
    Exponents e(variables_.size(), 0);
    for (const auto& [name, power] : factors) e[var_index(name)] += power;
    return coefficient(e);
}

void MultiPoly::add_term(const Exponents& e, const ExactRational& c) {
    if (e.size() != variables_.size()) throw std::invalid_argument("exponent vector length mismatch");
    ExactRational v = c;
    v.canonicalize();  // mpq_class(10, 120) is stored as given
    if (v == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::require_same_variables(const MultiPoly& other) const {
    if (variables_ != other.variables_) throw std::invalid_argument("polynomials use different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    require_same_variables(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    require_same_variables(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const ExactRational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_variables(b);
    MultiPoly out(a.variables_);
    Exponents e(a.variables_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    require_same_variables(other);
    return terms_ == other.terms_;
}

MultiPoly MultiPoly::substitute(const std::string& name, const Bound& value) const {
    const auto i = var_index(name);
    MultiPoly out(variables_);
    if (value.kind == Bound::Kind::Variable) {
        const auto j = var_index(value.name);
        for (const auto& [key, c] : terms_) {
            Exponents e = key;
            if (i != j) {
                e[j] += e[i];
                e[i] = 0;
            }
            out.add_term(e, c);
        }
        return out;
    }
    for (const auto& [key, c] : terms_) {
        Exponents e = key;
        if (value.kind == Bound::Kind::Zero && e[i] > 0) continue;
        e[i] = 0;
        out.add_term(e, c);
    }
    return out;
}

MultiPoly MultiPoly::with_variables(std::vector<std::string> variables) const {
    MultiPoly out(std::move(variables));
    std::vector<std::size_t> target(variables_.size(), out.variables_.size());
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        auto it = std::find(out.variables_.begin(), out.variables_.end(), variables_[i]);
        if (it != out.variables_.end()) target[i] = static_cast<std::size_t>(it - out.variables_.begin());
    }
    for (const auto& [e, c] : terms_) {
        Exponents f(out.variables_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (target[i] == out.variables_.size()) {
                throw std::invalid_argument("variable '" + variables_[i] + "' still occurs and cannot be dropped");
            }
            f[target[i]] += e[i];
        }
        out.add_term(f, c);
    }
    return out;
}

MultiPoly MultiPoly::rename(const std::vector<std::pair<std::string, std::string>>& mapping,
                            std::vector<std::string> variables) const {
    MultiPoly out(std::move(variables));
    std::vector<std::size_t> target(variables_.size(), out.variables_.size());
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        std::string name = variables_[i];
        for (const auto& [from, to] : mapping) {
            if (from == name) {
                name = to;
                break;
            }
        }
        auto it = std::find(out.variables_.begin(), out.variables_.end(), name);
        if (it != out.variables_.end()) target[i] = static_cast<std::size_t>(it - out.variables_.begin());
    }
    for (const auto& [e, c] : terms_) {
        Exponents f(out.variables_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (target[i] == out.variables_.size()) {
                throw std::invalid_argument("variable '" + variables_[i] + "' has no image in the new list");
            }
            f[target[i]] += e[i];
        }
        out.add_term(f, c);
    }
    return out;
}

ExactRational MultiPoly::evaluate(const std::vector<ExactRational>& point) const {
    if (point.size() != variables_.size()) throw std::invalid_argument("evaluation point has wrong dimension");
    ExactRational total = 0;
    for (const auto& [e, c] : terms_) {
        ExactRational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        }
        total += term;
    }
    return total;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const ExactRational magnitude = negative ? ExactRational(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += variables_[i];
            if (e[i] > 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            out += magnitude.get_str();
        } else if (magnitude == 1) {
            out += factors;
        } else {
            out += magnitude.get_str() + "*" + factors;
        }
    }
    return out;
}

MultiPoly integrate(const MultiPoly& p, const std::string& var, const Bound& lower, const Bound& upper) {
    const auto i = p.var_index(var);
    for (const Bound* b : {&lower, &upper}) {
        if (b->kind == Bound::Kind::Variable && (b->name == var || !p.has_variable(b->name))) {
            throw std::invalid_argument("invalid integration bound '" + b->name + "' for variable '" + var + "'");
        }
    }
    MultiPoly antiderivative(p.variables());
    for (const auto& [key, c] : p.terms()) {
        Exponents e = key;
        e[i] += 1;
        antiderivative.add_term(e, c / ExactRational(e[i]));
    }
    return antiderivative.substitute(var, upper) - antiderivative.substitute(var, lower);
}

ExactRational integrate_over_unit_chain(const MultiPoly& p, const std::vector<std::string>& chain) {
    MultiPoly acc = p;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        const Bound upper = k + 1 < chain.size() ? Bound::var(chain[k + 1]) : Bound::one();
        acc = integrate(acc, chain[k], Bound::zero(), upper);
    }
    if (acc.total_degree() > 0) {
        throw std::invalid_argument("integrand depends on variables outside the chain");
    }
    return acc.coefficient(Exponents(acc.variables().size(), 0));
}

}  // namespace sytstrip
