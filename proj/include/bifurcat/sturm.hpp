#ifndef BIFURCAT_STURM_HPP
#define BIFURCAT_STURM_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "bifurcat/polynomial.hpp"

namespace bifurcat {

/// Dense univariate polynomial over the rationals, constant term first.
using DensePoly = std::vector<Rational>;

inline void dense_trim(DensePoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int dense_degree(const DensePoly& p) { return static_cast<int>(p.size()) - 1; }

inline Rational dense_eval(const DensePoly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline double dense_eval_double(const DensePoly& p, double x) {
    double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

inline DensePoly dense_derivative(const DensePoly& p) {
    DensePoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<unsigned>(k)));
    dense_trim(d);
    return d;
}

inline DensePoly dense_scale(DensePoly p, const Rational& c) {
    for (auto& a : p) a *= c;
    dense_trim(p);
    return p;
}

inline DensePoly dense_sub(const DensePoly& a, const DensePoly& b) {
    DensePoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
    dense_trim(out);
    return out;
}

inline DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
    if (a.empty() || b.empty()) return {};
    DensePoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    dense_trim(out);
    return out;
}

/// Normalizes to an integer-primitive polynomial with positive leading
/// coefficient; a positive rescale, so signs and roots are untouched.
inline DensePoly dense_primitive(DensePoly p) {
    dense_trim(p);
    if (p.empty()) return p;
    Int g(0), l(1);
    for (const auto& c : p) {
        Int n = rat_num(c);
        g = boost::multiprecision::gcd(g, n < 0 ? Int(-n) : n);
        l = boost::multiprecision::lcm(l, rat_den(c));
    }
    Rational scale = p.back() < 0 ? Rational(-g, l) : Rational(g, l);
    for (auto& c : p) c /= scale;
    return p;
}

/// Euclidean remainder of a by b.
inline DensePoly dense_rem(DensePoly a, const DensePoly& b) {
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    dense_trim(a);
    const Rational lead = b.back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
        a.pop_back();
        dense_trim(a);
        if (a.empty()) break;
    }
    return a;
}

/// Exact quotient; throws if the division leaves a remainder.
inline DensePoly dense_exact_div(DensePoly a, const DensePoly& b) {
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    dense_trim(a);
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::domain_error("dense_exact_div: not divisible");
    DensePoly q(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        Rational f = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
        dense_trim(a);
    }
    if (!a.empty()) throw std::domain_error("dense_exact_div: not divisible");
    return q;
}

inline DensePoly dense_gcd(DensePoly a, DensePoly b) {
    a = dense_primitive(std::move(a));
    b = dense_primitive(std::move(b));
    while (!b.empty()) {
        DensePoly r = dense_primitive(dense_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return a;
}

/// Squarefree part p / gcd(p, p').
inline DensePoly dense_squarefree(const DensePoly& p) {
    DensePoly d = dense_derivative(p);
    if (d.empty()) return dense_primitive(p);  // constant
    DensePoly g = dense_gcd(p, d);
    if (dense_degree(g) <= 0) return dense_primitive(p);
    return dense_primitive(dense_exact_div(dense_primitive(p), g));
}

/// Yun's squarefree decomposition: p ~ prod out[k-1]^k (k = multiplicity).
inline std::vector<DensePoly> squarefree_decomposition(DensePoly p) {
    p = dense_primitive(std::move(p));
    std::vector<DensePoly> out;
    if (dense_degree(p) <= 0) return out;
    DensePoly dp = dense_derivative(p);
    DensePoly g = dense_gcd(p, dp);
    if (dense_degree(g) <= 0) {
        out.push_back(p);
        return out;
    }
    DensePoly w = dense_exact_div(p, g);
    DensePoly y = dense_exact_div(dp, g);
    DensePoly z = dense_sub(y, dense_derivative(w));
    while (!(dense_degree(w) <= 0)) {
        DensePoly gi = dense_gcd(w, z);
        out.push_back(gi);
        w = dense_exact_div(w, gi);
        y = dense_exact_div(z, gi);
        z = dense_sub(y, dense_derivative(w));
    }
    return out;
}

/// An interval (low, high] isolating exactly one distinct real root.
struct RootInterval {
    Rational low;
    Rational high;
    unsigned multiplicity_hint = 1;

    Rational midpoint() const { return (low + high) / 2; }
    double midpoint_double() const { return to_double(midpoint()); }
};

namespace detail {

/// Rescale by a positive constant only: keeps every sign, so the Sturm chain
/// property survives (a positive-lead normalization would not).
inline DensePoly dense_positive_scale(DensePoly p) {
    dense_trim(p);
    if (p.empty()) return p;
    Int g(0), l(1);
    for (const auto& c : p) {
        Int n = rat_num(c);
        g = boost::multiprecision::gcd(g, n < 0 ? Int(-n) : n);
        l = boost::multiprecision::lcm(l, rat_den(c));
    }
    Rational scale(g, l);
    for (auto& c : p) c /= scale;
    return p;
}

inline std::vector<DensePoly> sturm_chain(const DensePoly& p) {
    std::vector<DensePoly> chain;
    chain.push_back(dense_positive_scale(p));
    DensePoly d = dense_derivative(p);
    dense_trim(d);
    if (d.empty()) return chain;
    chain.push_back(dense_positive_scale(d));
    for (;;) {
        DensePoly r = dense_rem(chain[chain.size() - 2], chain.back());
        dense_trim(r);
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(dense_positive_scale(r));
        if (dense_degree(chain.back()) == 0) break;
    }
    return chain;
}

inline int sign_variations(const std::vector<DensePoly>& chain, const Rational& x) {
    int count = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_of(dense_eval(q, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace detail

/// Number of distinct real roots of p in (lo, hi].
inline int sturm_count(const DensePoly& p, const Rational& lo, const Rational& hi) {
    DensePoly sf = dense_squarefree(p);
    if (dense_degree(sf) <= 0) return 0;
    auto chain = detail::sturm_chain(sf);
    return detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
}

/// Isolates all distinct real roots of p in (lo, hi], refining each enclosure
/// to width <= tol by bisection.  Multiplicity hints come from the Yun
/// decomposition, so repeated roots are counted once but labelled.
inline std::vector<RootInterval> sturm_real_roots(const DensePoly& p, Rational lo, Rational hi,
                                                  const Rational& tol) {
    DensePoly trimmed = p;
    dense_trim(trimmed);
    if (trimmed.empty()) throw std::invalid_argument("sturm_real_roots: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_real_roots: empty range");
    if (!(tol > 0)) throw std::invalid_argument("sturm_real_roots: tol must be positive");

    auto parts = squarefree_decomposition(trimmed);
    DensePoly sf = dense_squarefree(trimmed);
    if (dense_degree(sf) <= 0) return {};
    auto chain = detail::sturm_chain(sf);
    // Sign variations with zeros skipped equal the count just right of the
    // evaluation point, so V(lo) - V(hi) counts the half-open (lo, hi] even
    // when an endpoint is itself a root.

    struct Work {
        Rational a, b;
        int count;
    };
    std::vector<RootInterval> out;
    std::vector<Work> stack;
    int total = detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
    if (total <= 0) return {};
    stack.push_back({lo, hi, total});

    auto multiplicity_at = [&](const Rational& a, const Rational& b) -> unsigned {
        for (std::size_t k = parts.size(); k-- > 0;) {
            if (dense_degree(parts[k]) <= 0) continue;
            int va = sign_of(dense_eval(parts[k], a));
            int vb = sign_of(dense_eval(parts[k], b));
            if (va == 0) va = -vb;  // endpoint collision: treat as crossing
            if (vb == 0 || va != vb) return static_cast<unsigned>(k + 1);
        }
        return 1;
    };

    while (!stack.empty()) {
        Work w = stack.back();
        stack.pop_back();
        if (w.count == 0) continue;
        if (w.count == 1 && w.b - w.a <= tol) {
            out.push_back({w.a, w.b, multiplicity_at(w.a, w.b)});
            continue;
        }
        if (w.count == 1) {
            // Refine by plain bisection on the squarefree part.  If a is an
            // (excluded) root, the sign just right of it is the derivative's.
            Rational a = w.a, b = w.b;
            int sa = sign_of(dense_eval(sf, a));
            if (sa == 0) sa = sign_of(dense_eval(dense_derivative(sf), a));
            while (b - a > tol) {
                Rational m = (a + b) / 2;
                int sm = sign_of(dense_eval(sf, m));
                if (sm == 0) {
                    // Exact hit: return a tight enclosure with the root at its right end.
                    a = m - tol / 2;
                    b = m;
                    break;
                }
                if (sm == sa)
                    a = m;
                else
                    b = m;
            }
            out.push_back({a, b, multiplicity_at(a, b)});
            continue;
        }
        Rational m = (w.a + w.b) / 2;
        while (dense_eval(sf, m) == 0) m = (w.a + m) / 2;  // keep split point off roots
        int left = detail::sign_variations(chain, w.a) - detail::sign_variations(chain, m);
        stack.push_back({w.a, m, left});
        stack.push_back({m, w.b, w.count - left});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.low < y.low; });
    return out;
}

/// Convenience overload for a univariate RationalPoly.
inline std::vector<RootInterval> sturm_real_roots(const RationalPoly& p, const std::string& var,
                                                  const Rational& lo, const Rational& hi,
                                                  const Rational& tol) {
    return sturm_real_roots(p.dense_univariate(var), lo, hi, tol);
}

}  // namespace bifurcat

#endif
