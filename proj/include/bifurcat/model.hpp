#ifndef BIFURCAT_MODEL_HPP
#define BIFURCAT_MODEL_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bifurcat/rational.hpp"

namespace bifurcat {

/// Which right-hand side to evaluate: the full 12-parameter model, its
/// 3-equation special case, or the planar (s, i) system that drives all of
/// the bifurcation analysis (r decouples from the first two equations).
enum class Variant { general, reduced3d, reduced2d };

/// The 12 rate parameters.  gamma is the total infected outflow rate
/// gamma = i_s + i_r; the reduced model has gamma_r = gamma_s = i_s = 0.
template <class T>
struct Params {
    T b{};        // birth inflow (individuals/time)
    T mu{};       // natural death rate (1/time)
    T beta{};     // transmission coefficient (1/(individuals*time))
    T gamma{};    // recovery rate i_s + i_r (1/time)
    T delta{};    // disease-induced death rate (1/time)
    T xi{};       // psychological-saturation coefficient (1/individuals)
    T eta{};      // per-capita treatment rate (1/time)
    T omega{};    // treatment capacity (individuals)
    T gamma_r{};  // immunity-loss rate (1/time)
    T gamma_s{};  // vaccination rate (1/time)
    T i_s{};      // infected -> susceptible rate (1/time)
    T i_r{};      // infected -> recovered rate (1/time)
};

using ModelParams = Params<Rational>;
using ParamsD = Params<double>;

template <class T>
struct State {
    T s{};
    T i{};
    T r{};
};

using StateD = State<double>;

/// Aggregates recomputed from the parameters, never set independently.
template <class T>
struct DerivedRates {
    T v_i;    // gamma + mu + delta
    T v_s;    // beta + xi*mu
    T V_i;    // v_i + eta
    T eta0;   // beta*b/mu - v_i (critical treatment rate on R0 = 1)
    T alpha;  // eta*omega
};

template <class T>
DerivedRates<T> derived_rates(const Params<T>& p) {
    DerivedRates<T> d;
    d.v_i = p.gamma + p.mu + p.delta;
    d.v_s = p.beta + p.xi * p.mu;
    d.V_i = d.v_i + p.eta;
    d.eta0 = p.beta * p.b / p.mu - d.v_i;
    d.alpha = p.eta * p.omega;
    return d;
}

inline void validate(const ModelParams& p) {
    auto nonneg = [](const Rational& v, const char* name) {
        if (v < 0) throw std::domain_error(std::string("parameter ") + name + " must be >= 0");
    };
    nonneg(p.b, "b");
    nonneg(p.mu, "mu");
    nonneg(p.beta, "beta");
    nonneg(p.gamma, "gamma");
    nonneg(p.delta, "delta");
    nonneg(p.xi, "xi");
    nonneg(p.eta, "eta");
    nonneg(p.omega, "omega");
    nonneg(p.gamma_r, "gamma_r");
    nonneg(p.gamma_s, "gamma_s");
    nonneg(p.i_s, "i_s");
    nonneg(p.i_r, "i_r");
    if (p.mu <= 0) throw std::domain_error("parameter mu must be > 0");
    if (p.b <= 0) throw std::domain_error("parameter b must be > 0");
    if (p.eta > 0 && p.omega <= 0)
        throw std::domain_error("omega must be > 0 when treatment is active");
    if (p.gamma != p.i_s + p.i_r)
        throw std::domain_error("gamma must equal i_s + i_r");
}

inline bool is_reduced(const ModelParams& p) {
    return p.gamma_r == 0 && p.gamma_s == 0 && p.i_s == 0;
}

inline void require_reduced(const ModelParams& p) {
    if (!is_reduced(p)) throw std::domain_error("operation requires the reduced model");
}

/// The corrected base parameter set used throughout the two-parameter map:
/// b=16, mu=12/100, delta=2/10, gamma=12/100, beta=1/100, xi=1/1000, with
/// treatment (eta, omega) left to the caller.
inline ModelParams base_params() {
    ModelParams p;
    p.b = 16;
    p.mu = Rational(12, 100);
    p.beta = Rational(1, 100);
    p.gamma = Rational(12, 100);
    p.delta = Rational(2, 10);
    p.xi = Rational(1, 1000);
    p.i_r = Rational(12, 100);
    p.i_s = 0;
    p.gamma_r = 0;
    p.gamma_s = 0;
    p.eta = 0;
    p.omega = 1;
    return p;
}

/// Builds a reduced-model parameter set, enforcing gamma = i_r and zero
/// vaccination / immunity-loss / reversion rates.
inline ModelParams reduced_params(Rational b, Rational mu, Rational beta, Rational gamma,
                                  Rational delta, Rational xi, Rational eta, Rational omega) {
    ModelParams p;
    p.b = std::move(b);
    p.mu = std::move(mu);
    p.beta = std::move(beta);
    p.gamma = gamma;
    p.delta = std::move(delta);
    p.xi = std::move(xi);
    p.eta = std::move(eta);
    p.omega = std::move(omega);
    p.i_r = gamma;
    p.i_s = 0;
    p.gamma_r = 0;
    p.gamma_s = 0;
    validate(p);
    return p;
}

/// Selects the treatment point (omega, alpha) in the bifurcation plane;
/// eta = alpha/omega.  omega = 0 is rejected: eta would be undefined.
template <class T>
Params<T> with_omega_alpha(Params<T> p, const T& omega, const T& alpha) {
    if (!(omega > 0)) throw std::domain_error("omega must be > 0 in the (omega, alpha) plane");
    if (alpha < 0) throw std::domain_error("alpha must be >= 0");
    p.omega = omega;
    p.eta = alpha / omega;
    return p;
}

inline ParamsD to_double(const ModelParams& p) {
    ParamsD d;
    d.b = to_double(p.b);
    d.mu = to_double(p.mu);
    d.beta = to_double(p.beta);
    d.gamma = to_double(p.gamma);
    d.delta = to_double(p.delta);
    d.xi = to_double(p.xi);
    d.eta = to_double(p.eta);
    d.omega = to_double(p.omega);
    d.gamma_r = to_double(p.gamma_r);
    d.gamma_s = to_double(p.gamma_s);
    d.i_s = to_double(p.i_s);
    d.i_r = to_double(p.i_r);
    return d;
}

/// Disease-free equilibrium.  General model:
/// (b(mu+gamma_r)/(mu(mu+gamma_r+gamma_s)), 0, b gamma_s/(mu(mu+gamma_r+gamma_s))).
template <class T>
State<T> dfe(const Params<T>& p) {
    State<T> x;
    T denom = p.mu * (p.mu + p.gamma_r + p.gamma_s);
    x.s = p.b * (p.mu + p.gamma_r) / denom;
    x.i = T(0);
    x.r = p.b * p.gamma_s / denom;
    return x;
}

/// Basic reproduction number R0 = s_dfe * beta / (v_i + eta).
template <class T>
T r0(const Params<T>& p) {
    DerivedRates<T> d = derived_rates(p);
    return dfe(p).s * p.beta / d.V_i;
}

/// Critical treatment rate eta0 with R0 = 1 exactly at eta = eta0 (reduced
/// model).  May be negative: then R0 < 1 already without treatment.
template <class T>
T eta_critical(const Params<T>& p) {
    return derived_rates(p).eta0;
}

template <class T>
void require_nonnegative(const State<T>& x, Variant variant) {
    bool bad = x.s < 0 || x.i < 0 || (variant != Variant::reduced2d && x.r < 0);
    if (bad) throw std::domain_error("state outside nonnegative octant");
}

/// Right-hand side of the chosen variant; reduced2d fills only (s, i).
template <class T>
std::vector<T> vector_field(const Params<T>& p, const State<T>& x, Variant variant) {
    require_nonnegative(x, variant);
    const T one(1);
    T infect = p.beta * x.i / (one + p.xi * x.i);   // force of infection * s
    T treat_rate = p.eta * p.omega / (p.omega + x.i);
    if (variant == Variant::general) {
        T v_i = p.gamma + p.mu + p.delta;
        T ds = p.b - x.s * (p.gamma_s + p.mu + infect) + p.i_s * x.i + p.gamma_r * x.r;
        T di = x.i * (x.s * p.beta / (one + p.xi * x.i) - treat_rate - v_i);
        T dr = p.gamma_s * x.s + p.i_r * x.i + treat_rate * x.i - (p.mu + p.gamma_r) * x.r;
        return {ds, di, dr};
    }
    // reduced: gamma_r = gamma_s = i_s = 0
    T v_i = p.gamma + p.mu + p.delta;
    T ds = p.b - x.s * (p.mu + infect);
    T di = x.i * (x.s * p.beta / (one + p.xi * x.i) - treat_rate - v_i);
    if (variant == Variant::reduced2d) return {ds, di};
    T dr = p.gamma * x.i + treat_rate * x.i - p.mu * x.r;
    return {ds, di, dr};
}

template <class T>
using Mat2 = std::array<std::array<T, 2>, 2>;
template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

/// Planar Jacobian, general form of the matrix (valid everywhere, not just
/// at fixed points).
template <class T>
Mat2<T> jacobian2(const Params<T>& p, const State<T>& x) {
    const T one(1);
    T v_i = p.gamma + p.mu + p.delta;
    T q = one + p.xi * x.i;       // psychological denominator
    T w = p.omega + x.i;          // treatment denominator
    Mat2<T> J;
    J[0][0] = -p.beta * x.i / q - p.mu;
    J[0][1] = -p.beta * x.s / (q * q);
    J[1][0] = p.beta * x.i / q;
    J[1][1] = p.beta * x.s / (q * q) - p.eta * p.omega * p.omega / (w * w) - v_i;
    return J;
}

/// Second form of the planar Jacobian; equals jacobian2 only at endemic
/// points, and is used purely as a cross-check there.
template <class T>
Mat2<T> jacobian2_endemic_form(const Params<T>& p, const State<T>& x) {
    const T one(1);
    T q = one + p.xi * x.i;
    T w = p.omega + x.i;
    Mat2<T> J;
    J[0][0] = -p.b / x.s;
    J[0][1] = -p.beta * x.s / (q * q);
    J[1][0] = p.beta * x.i / q;
    J[1][1] = p.eta * p.omega * x.i / (w * w) - p.beta * p.xi * x.s * x.i / (q * q);
    return J;
}

/// Full 3x3 Jacobian of the general (or reduced3d) vector field.
template <class T>
Mat3<T> jacobian3(const Params<T>& p, const State<T>& x, Variant variant) {
    const T one(1);
    T v_i = p.gamma + p.mu + p.delta;
    T q = one + p.xi * x.i;
    T w = p.omega + x.i;
    T gs = variant == Variant::general ? p.gamma_s : T(0);
    T gr = variant == Variant::general ? p.gamma_r : T(0);
    T is = variant == Variant::general ? p.i_s : T(0);
    T ir = variant == Variant::general ? p.i_r : p.gamma;
    Mat3<T> J;
    J[0][0] = -(gs + p.mu + p.beta * x.i / q);
    J[0][1] = -p.beta * x.s / (q * q) + is;
    J[0][2] = gr;
    J[1][0] = p.beta * x.i / q;
    J[1][1] = p.beta * x.s / (q * q) - p.eta * p.omega * p.omega / (w * w) - v_i;
    J[1][2] = T(0);
    J[2][0] = gs;
    J[2][1] = ir + p.eta * p.omega * p.omega / (w * w);
    J[2][2] = -(p.mu + gr);
    return J;
}

/// Quadratic A i^2 + B i + C whose positive roots are the endemic infection
/// levels, with the discriminant.
template <class T>
struct EndemicQuadratic {
    T A, B, C, Delta;
};

template <class T>
EndemicQuadratic<T> endemic_quadratic(const Params<T>& p) {
    DerivedRates<T> d = derived_rates(p);
    EndemicQuadratic<T> q;
    q.A = d.v_s * d.v_i;
    q.B = d.V_i * d.v_s * p.omega - p.mu * d.eta0;
    q.C = p.omega * (p.mu * d.V_i - p.beta * p.b);  // = omega*mu*V_i*(1 - R0)
    q.Delta = q.B * q.B - T(4) * q.A * q.C;
    return q;
}

/// The discriminant written out directly in alpha = eta*omega; must agree
/// with EndemicQuadratic::Delta identically.
template <class T>
T delta_explicit(const Params<T>& p) {
    DerivedRates<T> d = derived_rates(p);
    T alpha = d.alpha;
    T k = p.omega * d.v_s * d.v_i;
    T m = p.mu * d.v_i;
    T h = p.beta * p.b;
    return alpha * alpha * d.v_s * d.v_s + T(2) * alpha * d.v_s * (k - m - h) + (k - m + h) * (k - m + h);
}

/// Susceptible level of a stationary point with infection level i, from the
/// first stationarity equation: s = b(1 + xi i)/(mu + v_s i).
template <class T>
T s_of_i(const Params<T>& p, const T& i) {
    DerivedRates<T> d = derived_rates(p);
    return p.b * (T(1) + p.xi * i) / (p.mu + d.v_s * i);
}

/// Eigenvalues of a 2x2 matrix in closed form from (trace, det).
inline std::pair<std::complex<double>, std::complex<double>> eigenvalues2(double tr, double det) {
    double disc = tr * tr / 4 - det;
    if (disc >= 0) {
        double root = std::sqrt(disc);
        return {std::complex<double>(tr / 2 - root, 0), std::complex<double>(tr / 2 + root, 0)};
    }
    double im = std::sqrt(-disc);
    return {std::complex<double>(tr / 2, -im), std::complex<double>(tr / 2, im)};
}

enum class Stability {
    stable_node,
    stable_spiral,
    unstable_node,
    unstable_spiral,
    saddle,
    center_degenerate,
};

inline const char* to_string(Stability s) {
    switch (s) {
        case Stability::stable_node: return "stable node";
        case Stability::stable_spiral: return "stable spiral";
        case Stability::unstable_node: return "unstable node";
        case Stability::unstable_spiral: return "unstable spiral";
        case Stability::saddle: return "saddle";
        case Stability::center_degenerate: return "center/degenerate";
    }
    return "?";
}

/// Sign-based planar classification; `tol` is the absolute dead band around
/// zero for the trace and determinant.
inline Stability classify2(double tr, double det, double tol = 1e-9) {
    if (det < -tol) return Stability::saddle;
    if (std::abs(det) <= tol || std::abs(tr) <= tol) return Stability::center_degenerate;
    bool spiral = tr * tr / 4 < det;
    if (tr < 0) return spiral ? Stability::stable_spiral : Stability::stable_node;
    return spiral ? Stability::unstable_spiral : Stability::unstable_node;
}

}  // namespace bifurcat

#endif
