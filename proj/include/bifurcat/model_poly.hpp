#ifndef BIFURCAT_MODEL_POLY_HPP
#define BIFURCAT_MODEL_POLY_HPP

#include <string>
#include <vector>

#include "bifurcat/groebner.hpp"
#include "bifurcat/model.hpp"
#include "bifurcat/polynomial.hpp"

namespace bifurcat {

/// Which treatment coordinates stay symbolic when building polynomial forms
/// of the model: (omega, alpha = eta*omega) or (omega, eta).
enum class SymbolPlane { omega_alpha, omega_eta };

/// Polynomial building blocks of the reduced planar model.  Every rational
/// expression is cleared of denominators (the cleared factors 1 + xi*i and
/// omega + i never vanish on the relevant domain), so zero sets are
/// preserved.  All parameters except the chosen plane symbols come from `p`
/// as exact rationals.
struct ModelPolys {
    RationalPoly f_s;       // numerator of s'                    in (s, i, ...)
    RationalPoly f_i;       // numerator of i'/i                  in (s, i, ...)
    RationalPoly trace_num; // numerator of Tr J                  in (s, i, ...)
    RationalPoly det_num;   // numerator of det J                 in (s, i, ...)
    std::vector<std::string> plane;  // the two symbolic names, (omega, alpha|eta)
};

namespace detail {
inline RationalPoly rp(const Rational& c) { return RationalPoly(c); }
}  // namespace detail

/// Treatment terms eta*omega^2 and eta*omega as polynomials in the chosen
/// plane symbols.
struct TreatmentSymbols {
    RationalPoly omega;        // the symbol omega
    RationalPoly eta_omega;    // eta*omega   (= alpha in the alpha plane)
    RationalPoly eta_omega2;   // eta*omega^2 (= alpha*omega)
    RationalPoly eta;          // eta itself; only valid in the eta plane
    bool eta_is_symbol;
};

inline TreatmentSymbols treatment_symbols(SymbolPlane plane) {
    TreatmentSymbols t;
    t.omega = RationalPoly::variable("omega");
    if (plane == SymbolPlane::omega_alpha) {
        RationalPoly alpha = RationalPoly::variable("alpha");
        t.eta_omega = alpha;
        t.eta_omega2 = alpha * t.omega;
        t.eta_is_symbol = false;
    } else {
        t.eta = RationalPoly::variable("eta");
        t.eta_omega = t.eta * t.omega;
        t.eta_omega2 = t.eta * t.omega * t.omega;
        t.eta_is_symbol = true;
    }
    return t;
}

/// Builds the cleared stationarity / trace / determinant polynomials of the
/// reduced planar model with (omega, alpha-or-eta) symbolic.
inline ModelPolys model_polys(const ModelParams& p, SymbolPlane plane) {
    require_reduced(p);
    using detail::rp;
    auto t = treatment_symbols(plane);
    RationalPoly s = RationalPoly::variable("s");
    RationalPoly i = RationalPoly::variable("i");
    RationalPoly one = rp(Rational(1));
    Rational v_i = p.gamma + p.mu + p.delta;
    Rational v_s = p.beta + p.xi * p.mu;

    RationalPoly q = one + rp(p.xi) * i;   // 1 + xi*i
    RationalPoly w = t.omega + i;          // omega + i

    ModelPolys m;
    m.plane = {"omega", t.eta_is_symbol ? "eta" : "alpha"};

    // s' = b - s(mu + beta i/(1+xi i)); cleared by (1+xi i):
    m.f_s = rp(p.b) * q - s * (rp(p.mu) * q + rp(p.beta) * i);

    // i'/i = s beta/(1+xi i) - eta omega/(omega+i) - v_i; cleared by q*w:
    m.f_i = s * rp(p.beta) * w - t.eta_omega * q - rp(v_i) * q * w;

    // Tr J = beta s/q^2 - beta i/q - mu - eta omega^2/w^2 - v_i;
    // cleared by q^2 w^2 (grouping mu + v_i):
    m.trace_num = rp(p.beta) * s * w * w - rp(p.beta) * i * q * w * w -
                  rp(p.mu + v_i) * q * q * w * w - t.eta_omega2 * q * q;

    // det J with the general-form entries, cleared by q^3 w^2:
    // (-beta i - mu q)(beta s w^2 - eta omega^2 q^2 - v_i q^2 w^2) + beta^2 s i w^2
    m.det_num = (-(rp(p.beta) * i) - rp(p.mu) * q) *
                    (rp(p.beta) * s * w * w - t.eta_omega2 * q * q - rp(v_i) * q * q * w * w) +
                rp(p.beta * p.beta) * s * i * w * w;
    return m;
}

/// The endemic quadratic p(i) = A i^2 + B i + C as a polynomial in i and the
/// plane symbols, obtained by clearing denominators of
/// b beta/(mu + v_s i) - eta omega/(omega + i) - v_i = 0.
inline RationalPoly endemic_poly(const ModelParams& p, SymbolPlane plane) {
    require_reduced(p);
    using detail::rp;
    auto t = treatment_symbols(plane);
    RationalPoly i = RationalPoly::variable("i");
    Rational v_i = p.gamma + p.mu + p.delta;
    Rational v_s = p.beta + p.xi * p.mu;
    RationalPoly mu_vsi = rp(p.mu) + rp(v_s) * i;  // mu + v_s i
    RationalPoly w = t.omega + i;
    // -(b beta w - eta omega (mu + v_s i) - v_i (mu + v_s i) w) = A i^2 + B i + C
    return -(rp(p.b * p.beta) * w - t.eta_omega * mu_vsi - rp(v_i) * mu_vsi * w);
}

/// Numerator of the endemic trace tr(i) (s eliminated through the second
/// stationarity equation), over the denominator (1+xi i)(omega+i)^2.
inline RationalPoly endemic_trace_poly(const ModelParams& p, SymbolPlane plane) {
    require_reduced(p);
    using detail::rp;
    auto t = treatment_symbols(plane);
    RationalPoly i = RationalPoly::variable("i");
    RationalPoly one = rp(Rational(1));
    Rational v_i = p.gamma + p.mu + p.delta;
    RationalPoly q = one + rp(p.xi) * i;
    RationalPoly w = t.omega + i;
    // (eta omega + v_i w) w - beta i w^2 - (mu + v_i) q w^2 - eta omega^2 q
    return (t.eta_omega + rp(v_i) * w) * w - rp(p.beta) * i * w * w -
           rp(p.mu + v_i) * q * w * w - t.eta_omega2 * q;
}

/// Numerator i * Psi(i) of the endemic determinant, over (1+xi i)(omega+i)^2,
/// with Psi(i) = v_s v_i (i+omega)^2 + alpha (omega v_s - mu).
inline RationalPoly endemic_det_poly(const ModelParams& p, SymbolPlane plane) {
    require_reduced(p);
    using detail::rp;
    auto t = treatment_symbols(plane);
    RationalPoly i = RationalPoly::variable("i");
    Rational v_i = p.gamma + p.mu + p.delta;
    Rational v_s = p.beta + p.xi * p.mu;
    RationalPoly w = t.omega + i;
    RationalPoly psi = rp(v_s * v_i) * w * w + t.eta_omega * (rp(v_s) * t.omega - rp(p.mu));
    return i * psi;
}

/// Psi(i) evaluated numerically.
template <class T>
T psi(const Params<T>& p, const T& i) {
    DerivedRates<T> d = derived_rates(p);
    T w = i + p.omega;
    return d.v_s * d.v_i * w * w + d.alpha * (p.omega * d.v_s - p.mu);
}

/// Cleared stationarity polynomials of the general model in (s, r, i), all
/// parameters numeric rationals.  f_i keeps the overall factor i, so the
/// scalarized system retains the disease-free branch.
struct GeneralStationarity {
    RationalPoly f_s;  // s' * (1 + xi i)
    RationalPoly f_i;  // i' * (1 + xi i)(omega + i)
    RationalPoly f_r;  // r' * (omega + i)
};

inline GeneralStationarity general_stationarity(const ModelParams& p) {
    using detail::rp;
    RationalPoly s = RationalPoly::variable("s");
    RationalPoly r = RationalPoly::variable("r");
    RationalPoly i = RationalPoly::variable("i");
    RationalPoly one = rp(Rational(1));
    Rational v_i = p.gamma + p.mu + p.delta;
    RationalPoly q = one + rp(p.xi) * i;
    RationalPoly w = rp(p.omega) + i;

    GeneralStationarity g;
    g.f_s = rp(p.b) * q - s * (rp(p.gamma_s + p.mu) * q + rp(p.beta) * i) + rp(p.i_s) * i * q +
            rp(p.gamma_r) * r * q;
    g.f_i = i * (s * rp(p.beta) * w - rp(p.eta * p.omega) * q - rp(v_i) * q * w);
    g.f_r = rp(p.gamma_s) * s * w + rp(p.i_r) * i * w + rp(p.eta * p.omega) * i -
            rp(p.mu + p.gamma_r) * r * w;
    return g;
}

/// Result of collapsing the general model's stationarity system to one
/// polynomial in i.
struct GeneralScalarization {
    RationalPoly quartic;            // i * linear * quadratic, primitive
    RationalPoly factor_i;           // the disease-free branch factor
    RationalPoly factor_linear;      // cleared-denominator factor, root -1/xi
    RationalPoly factor_quadratic;   // endemic branch
    // Substitution map recovering the eliminated variables: s = s_num/den,
    // r = r_num/den as rational functions of i.
    RationalPoly sub_s_num, sub_r_num, sub_den;
};

/// Reduces the general stationarity system to a scalar polynomial in i by
/// lex Groebner elimination of (s, r), then splits off the structural
/// factors.  Throws EliminationBudgetError if the elimination outgrows the
/// budget.
inline GeneralScalarization scalarize_general(const ModelParams& p,
                                              const GroebnerOptions& options = {}) {
    validate(p);
    GeneralStationarity g = general_stationarity(p);
    std::vector<std::string> order{"s", "r", "i"};
    auto basis = groebner_lex({g.f_s, g.f_i, g.f_r}, order, options);
    auto elim = elimination_ideal(basis, order, 2);
    if (elim.empty())
        throw std::runtime_error("scalarize_general: elimination ideal came out empty");
    // Smallest-degree univariate generator.
    RationalPoly quartic = elim.front();
    for (const auto& q : elim)
        if (q.degree("i") < quartic.degree("i")) quartic = q;
    quartic = quartic.primitive();

    GeneralScalarization out;
    out.quartic = quartic;
    RationalPoly i = RationalPoly::variable("i");
    out.factor_i = i;
    RationalPoly rest = exact_divide(quartic, i);
    RationalPoly lin = RationalPoly(Rational(1)) + RationalPoly(p.xi) * i;
    if (p.xi > 0 && rest.degree("i") == 3) {
        out.factor_linear = lin;
        out.factor_quadratic = exact_divide(rest, lin).primitive();
    } else if (rest.degree("i") == 2) {
        out.factor_linear = RationalPoly(Rational(1));
        out.factor_quadratic = rest.primitive();
    } else {
        throw std::runtime_error("scalarize_general: unexpected factor structure, degree " +
                                 std::to_string(rest.degree("i")));
    }

    // Cramer solve of the two equations linear in (s, r).
    using detail::rp;
    RationalPoly one = rp(Rational(1));
    RationalPoly q = one + rp(p.xi) * i;
    RationalPoly w = rp(p.omega) + i;
    RationalPoly a11 = -(rp(p.gamma_s + p.mu) * q + rp(p.beta) * i);
    RationalPoly a12 = rp(p.gamma_r) * q;
    RationalPoly c1 = rp(p.b) * q + rp(p.i_s) * i * q;
    RationalPoly a21 = rp(p.gamma_s) * w;
    RationalPoly a22 = -rp(p.mu + p.gamma_r) * w;
    RationalPoly c2 = rp(p.i_r) * i * w + rp(p.eta * p.omega) * i;
    RationalPoly det = a11 * a22 - a12 * a21;
    out.sub_den = det;
    out.sub_s_num = -c1 * a22 + c2 * a12;
    out.sub_r_num = -c2 * a11 + c1 * a21;
    return out;
}

}  // namespace bifurcat

#endif
