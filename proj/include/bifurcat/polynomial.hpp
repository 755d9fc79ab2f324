#ifndef BIFURCAT_POLYNOMIAL_HPP
#define BIFURCAT_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bifurcat/rational.hpp"

namespace bifurcat {

/// Exponent vector of one monomial; entry k is the power of variable k.
using Exponents = std::vector<unsigned>;

/// Descending lex order on exponent vectors: the leading term comes first
/// when iterating the term map.
struct ExpLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

inline unsigned exp_total_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

inline bool exp_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

inline Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
    return out;
}

inline Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
}

inline Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered by descending lex over the polynomial's
/// own variable list, so iteration starts at the leading term and printed
/// form is deterministic.  Zero coefficients are never stored.  Binary
/// operations align both operands to the union of their variable universes
/// (left operand's order first, unseen right variables appended).
class RationalPoly {
public:
    using TermMap = std::map<Exponents, Rational, ExpLexGreater>;

    RationalPoly() = default;

    explicit RationalPoly(const Rational& c, std::vector<std::string> vars = {})
        : vars_(std::move(vars)) {
        if (c != 0) terms_[Exponents(vars_.size(), 0)] = c;
    }

    static RationalPoly constant(const Rational& c) { return RationalPoly(c); }

    static RationalPoly variable(const std::string& name) {
        RationalPoly p;
        p.vars_ = {name};
        p.terms_[{1u}] = Rational(1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && exp_total_degree(terms_.begin()->first) == 0;
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::logic_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    int index_of(const std::string& var) const {
        for (std::size_t k = 0; k < vars_.size(); ++k)
            if (vars_[k] == var) return static_cast<int>(k);
        return -1;
    }

    unsigned degree(const std::string& var) const {
        int k = index_of(var);
        if (k < 0) return 0;
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(k)]);
        return d;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, exp_total_degree(e));
        return d;
    }

    /// Re-expresses the polynomial over `universe`, which must contain every
    /// variable actually used.  Extra names are fine.
    RationalPoly aligned_to(const std::vector<std::string>& universe) const {
        RationalPoly out;
        out.vars_ = universe;
        for (const auto& [e, c] : terms_) {
            Exponents ne(universe.size(), 0);
            for (std::size_t k = 0; k < vars_.size(); ++k) {
                if (e[k] == 0) continue;
                auto it = std::find(universe.begin(), universe.end(), vars_[k]);
                if (it == universe.end())
                    throw std::logic_error("aligned_to: universe misses variable " + vars_[k]);
                ne[static_cast<std::size_t>(it - universe.begin())] = e[k];
            }
            out.terms_[ne] += c;  // distinct old terms stay distinct
        }
        return out;
    }

    static std::vector<std::string> merged_universe(const RationalPoly& a, const RationalPoly& b) {
        std::vector<std::string> u = a.vars_;
        for (const auto& v : b.vars_)
            if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
        return u;
    }

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
        auto u = merged_universe(a, b);
        RationalPoly x = a.aligned_to(u), y = b.aligned_to(u);
        for (const auto& [e, c] : y.terms_) x.add_term(e, c);
        return x;
    }

    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
        auto u = merged_universe(a, b);
        RationalPoly x = a.aligned_to(u), y = b.aligned_to(u);
        for (const auto& [e, c] : y.terms_) x.add_term(e, Rational(-c));
        return x;
    }

    RationalPoly operator-() const {
        RationalPoly out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        auto u = merged_universe(a, b);
        RationalPoly x = a.aligned_to(u), y = b.aligned_to(u);
        RationalPoly out;
        out.vars_ = u;
        for (const auto& [ea, ca] : x.terms_)
            for (const auto& [eb, cb] : y.terms_) out.add_term(exp_add(ea, eb), ca * cb);
        return out;
    }

    friend RationalPoly operator*(const Rational& c, const RationalPoly& p) {
        RationalPoly out;
        out.vars_ = p.vars_;
        if (c == 0) return out;
        out.terms_ = p.terms_;
        for (auto& [e, v] : out.terms_) v *= c;
        return out;
    }

    friend RationalPoly operator*(const RationalPoly& p, const Rational& c) { return c * p; }

    RationalPoly& operator+=(const RationalPoly& o) { return *this = *this + o; }
    RationalPoly& operator-=(const RationalPoly& o) { return *this = *this - o; }
    RationalPoly& operator*=(const RationalPoly& o) { return *this = *this * o; }

    RationalPoly pow(unsigned e) const {
        RationalPoly out = RationalPoly(Rational(1), vars_);
        RationalPoly base = *this;
        while (e) {
            if (e & 1u) out = out * base;
            if (e >>= 1u) base = base * base;
        }
        return out;
    }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
        auto u = merged_universe(a, b);
        return a.aligned_to(u).terms_ == b.aligned_to(u).terms_;
    }
    friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

    RationalPoly derivative(const std::string& var) const {
        int k = index_of(var);
        RationalPoly out;
        out.vars_ = vars_;
        if (k < 0) return out;
        auto ku = static_cast<std::size_t>(k);
        for (const auto& [e, c] : terms_) {
            if (e[ku] == 0) continue;
            Exponents ne = e;
            ne[ku] -= 1;
            out.add_term(ne, c * Rational(e[ku]));
        }
        return out;
    }

    /// Substitutes a rational value for one variable (partial evaluation).
    RationalPoly substitute(const std::string& var, const Rational& value) const {
        int k = index_of(var);
        if (k < 0) return *this;
        auto ku = static_cast<std::size_t>(k);
        RationalPoly out;
        out.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            Exponents ne = e;
            unsigned p = ne[ku];
            ne[ku] = 0;
            out.add_term(ne, c * rat_pow(value, p));
        }
        return out;
    }

    template <class Map>
    Rational eval(const Map& values) const {
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t k = 0; k < vars_.size(); ++k) {
                if (e[k] == 0) continue;
                auto it = values.find(vars_[k]);
                if (it == values.end())
                    throw std::invalid_argument("eval: no value for variable " + vars_[k]);
                t *= rat_pow(it->second, e[k]);
            }
            acc += t;
        }
        return acc;
    }

    /// Same substitution, evaluated in double arithmetic.
    template <class Map>
    double eval_double(const Map& values) const {
        double acc = 0;
        for (const auto& [e, c] : terms_) {
            double t = to_double(c);
            for (std::size_t k = 0; k < vars_.size(); ++k) {
                if (e[k] == 0) continue;
                auto it = values.find(vars_[k]);
                if (it == values.end())
                    throw std::invalid_argument("eval: no value for variable " + vars_[k]);
                double base = it->second, powed = 1;
                for (unsigned q = 0; q < e[k]; ++q) powed *= base;
                t *= powed;
            }
            acc += t;
        }
        return acc;
    }

    /// Dense coefficient list in `var`, index = power; entries are polynomials
    /// in the remaining variables (with the same universe for convenience).
    std::vector<RationalPoly> coefficients_in(const std::string& var) const {
        unsigned d = degree(var);
        std::vector<RationalPoly> out(d + 1);
        for (auto& q : out) q.vars_ = vars_;
        int k = index_of(var);
        if (k < 0) {
            out[0] = *this;
            return out;
        }
        auto ku = static_cast<std::size_t>(k);
        for (const auto& [e, c] : terms_) {
            Exponents ne = e;
            unsigned p = ne[ku];
            ne[ku] = 0;
            out[p].add_term(ne, c);
        }
        return out;
    }

    /// Dense univariate coefficients, constant term first.  The polynomial
    /// may mention other variables only with exponent zero.
    std::vector<Rational> dense_univariate(const std::string& var) const {
        auto cs = coefficients_in(var);
        std::vector<Rational> out;
        out.reserve(cs.size());
        for (auto& c : cs) {
            if (!c.is_constant())
                throw std::logic_error("dense_univariate: polynomial is not univariate in " + var);
            out.push_back(c.constant_value());
        }
        return out;
    }

    const Exponents& leading_exponents() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return terms_.begin()->first;
    }
    const Rational& leading_coefficient() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return terms_.begin()->second;
    }

    /// Rational content: gcd of numerators over lcm of denominators, signed so
    /// that dividing by it leaves an integer-primitive poly with positive lead.
    Rational content() const {
        if (terms_.empty()) return Rational(1);
        Int g(0), l(1);
        for (const auto& [e, c] : terms_) {
            g = boost::multiprecision::gcd(g, rat_num(c) < 0 ? Int(-rat_num(c)) : rat_num(c));
            l = boost::multiprecision::lcm(l, rat_den(c));
        }
        Rational r(g, l);
        return leading_coefficient() < 0 ? Rational(-r) : r;
    }

    /// Integer-primitive part with positive leading coefficient.
    RationalPoly primitive() const {
        if (terms_.empty()) return *this;
        Rational c = content();
        RationalPoly out = *this;
        for (auto& [e, v] : out.terms_) v /= c;
        return out;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Canonical text form: terms in the map's descending order, coefficients
    /// always as num/den, powers with ^, e.g. `3/2*x^2*y - 1*y + 5/1`.
    std::string str() const {
        if (terms_.empty()) return "0/1";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) a = -a;
            }
            os << to_string(a);
            for (std::size_t k = 0; k < vars_.size(); ++k) {
                if (e[k] == 0) continue;
                os << "*" << vars_[k];
                if (e[k] > 1) os << "^" << e[k];
            }
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalPoly& p) { return os << p.str(); }

    /// Parses the canonical text form (inverse of str()); variable universe is
    /// the names in order of first appearance.
    static RationalPoly parse(const std::string& text);

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

inline RationalPoly operator+(const RationalPoly& a, const Rational& c) {
    return a + RationalPoly(c);
}
inline RationalPoly operator-(const RationalPoly& a, const Rational& c) {
    return a - RationalPoly(c);
}
inline RationalPoly operator+(const Rational& c, const RationalPoly& a) {
    return RationalPoly(c) + a;
}
inline RationalPoly operator-(const Rational& c, const RationalPoly& a) {
    return RationalPoly(c) - a;
}

inline RationalPoly RationalPoly::parse(const std::string& text) {
    RationalPoly acc;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    skip_ws();
    bool first = true;
    while (pos < text.size()) {
        int sgn = 1;
        skip_ws();
        if (text[pos] == '+' || text[pos] == '-') {
            sgn = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected +/- between terms in '" + text + "'");
        }
        // coefficient
        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/' || text[pos] == '.'))
            ++pos;
        Rational coeff(1);
        if (pos > start) coeff = parse_rational(text.substr(start, pos - start));
        if (sgn < 0) coeff = -coeff;
        RationalPoly term(coeff);
        // variables
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
            if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                break;
            std::size_t vstart = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(vstart, pos - vstart);
            unsigned e = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                std::size_t estart = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                e = static_cast<unsigned>(std::stoul(text.substr(estart, pos - estart)));
            }
            term = term * RationalPoly::variable(name).pow(e);
        }
        acc = first ? term : acc + term;
        first = false;
        skip_ws();
    }
    return acc;
}

/// Exact multivariate division: returns q with a = q*b, throws if b does not
/// divide a in the polynomial ring.
inline RationalPoly exact_divide(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    auto u = RationalPoly::merged_universe(a, b);
    RationalPoly rem = a.aligned_to(u), div = b.aligned_to(u);
    RationalPoly q(Rational(0), u);
    const Exponents& lb = div.leading_exponents();
    const Rational& cb = div.leading_coefficient();
    while (!rem.is_zero()) {
        const Exponents& la = rem.leading_exponents();
        if (!exp_divides(lb, la)) throw std::domain_error("exact_divide: not divisible");
        Exponents shift = exp_sub(la, lb);
        Rational factor = rem.leading_coefficient() / cb;
        RationalPoly mono(Rational(0), u);
        mono.add_term(shift, factor);
        q += mono;
        rem -= mono * div;
    }
    return q;
}

}  // namespace bifurcat

#endif
