#ifndef BIFURCAT_EQUILIBRIA_HPP
#define BIFURCAT_EQUILIBRIA_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bifurcat/errors.hpp"
#include "bifurcat/groebner.hpp"
#include "bifurcat/model.hpp"
#include "bifurcat/model_poly.hpp"
#include "bifurcat/resultant.hpp"

namespace bifurcat {

enum class FixedPointLabel { E0, E1, E2, merged };

inline const char* to_string(FixedPointLabel l) {
    switch (l) {
        case FixedPointLabel::E0: return "E0";
        case FixedPointLabel::E1: return "E1";
        case FixedPointLabel::E2: return "E2";
        case FixedPointLabel::merged: return "merged";
    }
    return "?";
}

struct FixedPointReport {
    FixedPointLabel label;
    double s = 0, i = 0;
    std::complex<double> eig1, eig2;
    double det = 0, trace = 0;
    Stability classification = Stability::center_degenerate;
    // Root within the positivity dead band (-1e-12, 1e-9): a numerically
    // boundary-degenerate equilibrium colliding with the DFE.
    bool boundary_degenerate = false;
};

struct FixedPointOptions {
    double positivity_floor = -1e-12;   // roots above this count as nonnegative
    double degenerate_band = 1e-9;      // roots below this are flagged
    double merge_rel = 1e-10;           // Delta below merge_rel*scale(B^2) collides E1=E2
    double classify_tol = 1e-9;         // dead band for trace/det sign calls
};

namespace detail {

inline FixedPointReport make_report(const ParamsD& p, FixedPointLabel label, double s, double i,
                                    const FixedPointOptions& opt) {
    FixedPointReport r;
    r.label = label;
    r.s = s;
    r.i = i;
    auto J = jacobian2(p, State<double>{s, i, 0});
    r.trace = J[0][0] + J[1][1];
    r.det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    auto [e1, e2] = eigenvalues2(r.trace, r.det);
    r.eig1 = e1;
    r.eig2 = e2;
    r.classification = classify2(r.trace, r.det, opt.classify_tol);
    return r;
}

}  // namespace detail

/// All fixed points of the reduced planar model: the DFE plus whichever
/// endemic roots are real and nonnegative, ordered by infection level
/// (E1 below E2).  A discriminant within merge_rel of zero yields a single
/// `merged` point at the double root.
inline std::vector<FixedPointReport> fixed_points(const ModelParams& p,
                                                  const FixedPointOptions& opt = {}) {
    require_reduced(p);
    auto pd = to_double(p);
    std::vector<FixedPointReport> out;
    out.push_back(detail::make_report(pd, FixedPointLabel::E0, pd.b / pd.mu, 0.0, opt));

    auto q = endemic_quadratic(p);
    const double A = to_double(q.A), B = to_double(q.B), C = to_double(q.C);
    const double Delta = to_double(q.Delta);
    const double scale = std::max(B * B, std::abs(4 * A * C));

    auto push_endemic = [&](FixedPointLabel label, double i_root) {
        if (i_root <= opt.positivity_floor) return;
        double i_eff = std::max(i_root, 0.0);
        FixedPointReport r =
            detail::make_report(pd, label, s_of_i(pd, i_eff), i_eff, opt);
        r.boundary_degenerate = i_root < opt.degenerate_band;
        out.push_back(r);
    };

    if (std::abs(Delta) <= opt.merge_rel * scale && scale > 0) {
        push_endemic(FixedPointLabel::merged, -B / (2 * A));
        return out;
    }
    if (Delta < 0) return out;
    double root = std::sqrt(Delta);
    // Numerically stable quadratic roots.
    double q0 = -(B + (B >= 0 ? root : -root)) / 2;
    double i_a = q0 / A, i_b = (q0 != 0) ? C / q0 : -B / A - q0 / A;
    double i1 = std::min(i_a, i_b), i2 = std::max(i_a, i_b);
    push_endemic(FixedPointLabel::E1, i1);
    push_endemic(FixedPointLabel::E2, i2);
    return out;
}

inline std::optional<FixedPointReport> find_point(const std::vector<FixedPointReport>& pts,
                                                  FixedPointLabel label) {
    for (const auto& r : pts)
        if (r.label == label) return r;
    return std::nullopt;
}

struct SaddleCheck {
    double det_E1;
    double det_E2;
    bool holds;  // det(J(E1)) < 0 < det(J(E2))
};

/// Checks the saddle property of the lower endemic point.  Requires both
/// interior equilibria to exist.
inline SaddleCheck saddle_check(const ModelParams& p) {
    auto pts = fixed_points(p);
    auto e1 = find_point(pts, FixedPointLabel::E1);
    auto e2 = find_point(pts, FixedPointLabel::E2);
    if (!e1 || !e2) throw NumericError("no interior equilibria");
    SaddleCheck c{e1->det, e2->det, e1->det < 0 && 0 < e2->det};
    return c;
}

/// Trace of the Jacobian at the requested endemic point, with s obtained
/// from the second stationarity equation s = (1+xi i)(eta w + v_i(i+w))/(beta(i+w)).
inline double trace_at_endemic(const ModelParams& p, FixedPointLabel which,
                               const FixedPointOptions& opt = {}) {
    if (which != FixedPointLabel::E1 && which != FixedPointLabel::E2)
        throw std::invalid_argument("trace_at_endemic: which must be E1 or E2");
    auto pts = fixed_points(p, opt);
    auto pt = find_point(pts, which);
    if (!pt) throw NumericError(std::string("endemic point ") + to_string(which) + " absent");
    auto pd = to_double(p);
    double i = pt->i;
    double v_i = pd.gamma + pd.mu + pd.delta;
    double s = (1 + pd.xi * i) * (pd.eta * pd.omega + v_i * (i + pd.omega)) /
               (pd.beta * (i + pd.omega));
    auto J = jacobian2(pd, State<double>{s, i, 0});
    return J[0][0] + J[1][1];
}

enum class VarietyKind { traceG, detG };
enum class VarietyMethod { groebner, resultant };

/// A bifurcation-plane variety obtained by eliminating the state variables:
/// the zero set of `poly` is where some fixed point has zero trace (traceG)
/// or zero determinant (detG).  `spurious` holds structural factors of the
/// raw elimination output that vanish on no fixed-point locus (cleared
/// denominators, the alpha = 0 axis, omega v_s = mu); they are stripped
/// from `poly` and reported.
struct EliminatedVariety {
    VarietyKind kind;
    RationalPoly poly;
    std::vector<RationalPoly> factors;
    std::vector<RationalPoly> spurious;
    RationalPoly raw;
};

namespace detail {

inline RationalPoly strip_factor(RationalPoly& poly, const RationalPoly& f,
                                 std::vector<RationalPoly>& into) {
    for (;;) {
        try {
            RationalPoly q = exact_divide(poly, f);
            poly = q;
            into.push_back(f);
        } catch (const std::domain_error&) {
            break;
        }
    }
    return poly;
}

inline RationalPoly rhs_poly(const ModelParams& p, VarietyKind kind, SymbolPlane plane) {
    return kind == VarietyKind::traceG ? endemic_trace_poly(p, plane)
                                       : endemic_det_poly(p, plane);
}

}  // namespace detail

/// Computes traceG/detG with the two plane coordinates symbolic.
///
/// The resultant route eliminates i from the endemic quadratic and the
/// trace (resp. determinant) numerator.  The groebner route eliminates the
/// state variables from the cleared stationarity system in two lex stages,
/// saturating away the cleared-denominator component in between (without
/// the saturation the elimination ideal is zero).  Both routes agree after
/// primitive normalization.
inline EliminatedVariety eliminated_variety(const ModelParams& p, VarietyKind kind,
                                            VarietyMethod method,
                                            SymbolPlane plane = SymbolPlane::omega_alpha,
                                            const GroebnerOptions& options = {}) {
    require_reduced(p);
    EliminatedVariety out;
    out.kind = kind;

    RationalPoly raw;
    if (method == VarietyMethod::resultant) {
        raw = sylvester_resultant(endemic_poly(p, plane), detail::rhs_poly(p, kind, plane), "i");
    } else {
        auto m = model_polys(p, plane);
        RationalPoly f3 = kind == VarietyKind::traceG ? m.trace_num : m.det_num;
        std::vector<std::string> stage1{"s", "i", m.plane[0], m.plane[1]};
        auto basis1 = groebner_lex({m.f_s, m.f_i, f3}, stage1, options);
        auto gens = elimination_ideal(basis1, stage1, 1);
        if (gens.empty()) throw NumericError("eliminated_variety: no generators free of s");
        // Saturate away the cleared denominators 1 + xi*i and omega + i
        // (their zero sets carry no actual equilibria) by the Rabinowitsch
        // trick, then eliminate i and the saturation variable together.
        RationalPoly q = RationalPoly(Rational(1)) + RationalPoly(p.xi) * RationalPoly::variable("i");
        RationalPoly w = RationalPoly::variable("omega") + RationalPoly::variable("i");
        for (auto& g : gens) {
            std::vector<RationalPoly> dump;
            detail::strip_factor(g, q, dump);
            detail::strip_factor(g, w, dump);
            g = g.primitive();
        }
        gens.push_back(RationalPoly::variable("t") * q - Rational(1));
        std::vector<std::string> stage2{"t", "i", m.plane[0], m.plane[1]};
        auto basis2 = groebner_lex(gens, stage2, options);
        auto elim = elimination_ideal(basis2, stage2, 2);
        if (elim.empty()) throw NumericError("eliminated_variety: empty elimination ideal");
        raw = elim.front();
        for (const auto& e : elim)
            if (e.total_degree() < raw.total_degree()) raw = e;
    }
    raw = raw.primitive();
    out.raw = raw;

    const bool alpha_plane = plane == SymbolPlane::omega_alpha;
    const std::string second = alpha_plane ? "alpha" : "eta";
    RationalPoly omega = RationalPoly::variable("omega");
    RationalPoly sec = RationalPoly::variable(second);
    Rational v_s = p.beta + p.xi * p.mu;
    Rational v_i = p.gamma + p.mu + p.delta;

    RationalPoly poly = raw;
    // Structural factors that never correspond to a zero trace/determinant
    // of an actual fixed point.
    detail::strip_factor(poly, sec, out.spurious);
    detail::strip_factor(poly, omega, out.spurious);
    detail::strip_factor(poly, RationalPoly(v_s) * omega - RationalPoly(p.mu), out.spurious);

    // Known variety components: the R0 = 1 locus and the fold locus.
    RationalPoly r0m1 = alpha_plane
                            ? RationalPoly(eta_critical(p)) * omega - sec
                            : RationalPoly(eta_critical(p)) - sec;
    RationalPoly alpha_expr = alpha_plane ? sec : sec * omega;
    RationalPoly k = RationalPoly(v_s * v_i) * omega;
    RationalPoly m_ = RationalPoly(p.mu * v_i);
    RationalPoly h = RationalPoly(p.beta * p.b);
    RationalPoly disc = alpha_expr * alpha_expr * Rational(v_s * v_s) +
                        Rational(2) * alpha_expr * Rational(v_s) * (k - m_ - h) +
                        (k - m_ + h) * (k - m_ + h);
    detail::strip_factor(poly, r0m1.primitive(), out.factors);
    detail::strip_factor(poly, disc.primitive(), out.factors);
    poly = poly.primitive();
    if (!poly.is_constant()) out.factors.push_back(poly);
    out.poly = RationalPoly(Rational(1));
    for (const auto& f : out.factors) out.poly = out.poly * f;
    out.poly = out.poly.primitive();
    if (out.factors.empty()) out.poly = poly;
    return out;
}

/// Ratio diagnostics for the open relation between the product-over-points
/// objects and the eliminated ones: evaluates the variety polynomial and
/// the literal product of per-fixed-point traces (or determinants) at a
/// sample point.
struct VarietyRatioSample {
    double omega, alpha;
    double variety_value;
    double product_value;  // product over existing interior points
    int n_points;
};

inline VarietyRatioSample variety_ratio_sample(const ModelParams& p_base,
                                               const EliminatedVariety& v, double omega,
                                               double alpha) {
    VarietyRatioSample s;
    s.omega = omega;
    s.alpha = alpha;
    std::map<std::string, double> at{{"omega", omega}, {"alpha", alpha}};
    s.variety_value = v.poly.eval_double(at);
    auto p = with_omega_alpha(p_base, Rational(omega), Rational(alpha));
    auto pts = fixed_points(p);
    s.product_value = 1.0;
    s.n_points = 0;
    for (const auto& r : pts) {
        if (r.label == FixedPointLabel::E0) continue;
        s.product_value *= (v.kind == VarietyKind::traceG ? r.trace : r.det);
        ++s.n_points;
    }
    if (s.n_points == 0) s.product_value = 0.0;
    return s;
}

/// Evaluation report for the published closed-form trace-variety factors
/// and for this implementation's own factorization, at the parameter point
/// (omega, eta) carried by p.  `scaled` values divide by the sum of
/// absolute monomial contributions, a conditioning-free relative residual.
struct Tr3Report {
    double f1_scaled;             // published factor omega*V_i*(beta eta + xi S) - v_i S
    double f2_scaled;             // published quadratic factor
    std::vector<double> own_factors_scaled;  // factors of the computed traceG
    double min_own;               // min |own_factors_scaled|
};

namespace detail {

inline double scaled_eval(const RationalPoly& f, const std::map<std::string, double>& at) {
    double value = 0, scale = 0;
    for (const auto& [e, c] : f.terms()) {
        double t = bifurcat::to_double(c);
        for (std::size_t k = 0; k < f.vars().size(); ++k) {
            if (e[k] == 0) continue;
            double b = at.at(f.vars()[k]), powed = 1;
            for (unsigned j = 0; j < e[k]; ++j) powed *= b;
            t *= powed;
        }
        value += t;
        scale += std::abs(t);
    }
    return scale > 0 ? value / scale : 0.0;
}

}  // namespace detail

/// Evaluates the published trace-variety factors and the factors of the
/// computed traceG at (p.omega, p.eta).
inline Tr3Report tr3_factor_check(const ModelParams& p, const EliminatedVariety& traceG_eta) {
    require_reduced(p);
    Rational g = p.gamma, d = p.delta, mu = p.mu, beta = p.beta, xi = p.xi;
    RationalPoly w = RationalPoly::variable("omega");
    RationalPoly e = RationalPoly::variable("eta");
    RationalPoly gde = RationalPoly(g + d) + e;
    RationalPoly S = Rational(2) * mu * gde + Rational(g + d) * gde + RationalPoly(mu * mu);
    RationalPoly V_i = RationalPoly(g + d + mu) + e;
    RationalPoly F1 = w * V_i * (RationalPoly(beta) * e + RationalPoly(xi) * S) -
                      RationalPoly(g + d + mu) * S;
    Rational v_s = beta + xi * mu;
    RationalPoly F2 =
        RationalPoly(xi * v_s * v_s) * w * w * V_i -
        w * RationalPoly(v_s) *
            (RationalPoly(beta) * e + RationalPoly(mu * xi) * (RationalPoly(2 * (g + d) + 2 * mu) + e)) +
        RationalPoly(mu * mu * xi) * RationalPoly(g + d + mu);

    std::map<std::string, double> at{{"omega", to_double(p.omega)}, {"eta", to_double(p.eta)}};
    Tr3Report rep;
    rep.f1_scaled = detail::scaled_eval(F1, at);
    rep.f2_scaled = detail::scaled_eval(F2, at);
    rep.min_own = std::numeric_limits<double>::infinity();
    for (const auto& f : traceG_eta.factors) {
        double v = detail::scaled_eval(f, at);
        rep.own_factors_scaled.push_back(v);
        rep.min_own = std::min(rep.min_own, std::abs(v));
    }
    return rep;
}

}  // namespace bifurcat

#endif
