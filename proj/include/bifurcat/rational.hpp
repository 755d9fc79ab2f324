#ifndef BIFURCAT_RATIONAL_HPP
#define BIFURCAT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bifurcat {

// Exact arithmetic carrier for the whole algebra lane.  The rational adaptor
// keeps values in lowest terms with a positive denominator, which is exactly
// the invariant we need; no arithmetic here ever rounds.  Expression
// templates are off so every operation yields a plain value.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Int rat_num(const Rational& r) { return numerator(r); }
inline Int rat_den(const Rational& r) { return denominator(r); }

inline int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational rat_pow(Rational base, unsigned e) {
    Rational out(1);
    while (e) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

/// Canonical text form `num/den` (always shows the denominator).
inline std::string to_string(const Rational& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Parses `p/q`, an integer, or a plain decimal literal.  Decimals convert by
/// their literal digits (0.12 -> 12/100), never through binary floating point.
inline Rational parse_rational(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rational(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        bool neg = false;
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            neg = head[0] == '-';
            head.erase(head.begin());
        }
        for (char c : head + tail)
            if (c < '0' || c > '9') throw std::invalid_argument("bad rational literal '" + text + "'");
        Int num = head.empty() ? Int(0) : Int(head);
        Int den(1);
        for (char c : tail) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        Rational r(num, den);
        return neg ? Rational(-r) : r;
    }
    return Rational(Int(s));
}

}  // namespace bifurcat

#endif
