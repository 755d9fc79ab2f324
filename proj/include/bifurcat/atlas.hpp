#ifndef BIFURCAT_ATLAS_HPP
#define BIFURCAT_ATLAS_HPP

#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bifurcat/equilibria.hpp"
#include "bifurcat/model.hpp"
#include "bifurcat/model_poly.hpp"
#include "bifurcat/resultant.hpp"
#include "bifurcat/sturm.hpp"

namespace bifurcat {

enum class CurveKind { r0_eq_1, delta_eq_0, trE2_eq_0, B_eq_0 };

inline const char* to_string(CurveKind k) {
    switch (k) {
        case CurveKind::r0_eq_1: return "R0=1";
        case CurveKind::delta_eq_0: return "Delta=0";
        case CurveKind::trE2_eq_0: return "TrE2=0";
        case CurveKind::B_eq_0: return "B=0";
    }
    return "?";
}

enum class RegionName { I, II, III, IV, V, VI, VIa, boundary, corner };

/// Classification of one (omega, alpha) point: a region, a boundary curve,
/// or a corner, plus the sign quadruple that produced the call.
struct RegionLabel {
    RegionName name = RegionName::V;
    CurveKind boundary_kind = CurveKind::r0_eq_1;  // valid when name == boundary
    std::string corner_name;                       // valid when name == corner
    int sign_delta = 0;
    int sign_r0m1 = 0;
    int sign_trE2 = 0;   // 0 when E2 does not exist
    bool tr_defined = false;
    int sign_B = 0;

    std::string str() const {
        switch (name) {
            case RegionName::I: return "I";
            case RegionName::II: return "II";
            case RegionName::III: return "III";
            case RegionName::IV: return "IV";
            case RegionName::V: return "V";
            case RegionName::VI: return "VI";
            case RegionName::VIa: return "VIa";
            case RegionName::boundary: return std::string("boundary:") + to_string(boundary_kind);
            case RegionName::corner: return "corner:" + corner_name;
        }
        return "?";
    }
};

struct CurvePolyline {
    CurveKind kind;
    std::string branch;  // "", "lower", "upper"
    std::vector<std::pair<double, double>> points;  // (omega, alpha), ordered by omega
    double resolution = 0;
};

struct CornerPoint {
    std::string name;  // H, B1, B2, BT
    double omega = 0;
    double alpha = 0;
    std::pair<CurveKind, CurveKind> defining;
    std::pair<double, double> residuals{0, 0};
};

namespace detail {

/// Double-precision scalar evaluations used all over the atlas; eta/omega in
/// the cached ParamsD are ignored, the plane point is always explicit.
struct PlaneEval {
    double b, mu, beta, xi, v_i, v_s, eta0;

    explicit PlaneEval(const ModelParams& p) {
        b = bifurcat::to_double(p.b);
        mu = bifurcat::to_double(p.mu);
        beta = bifurcat::to_double(p.beta);
        xi = bifurcat::to_double(p.xi);
        // Derived rates rounded from their exact rational values.
        v_i = bifurcat::to_double(Rational(p.gamma + p.mu + p.delta));
        v_s = bifurcat::to_double(Rational(p.beta + p.xi * p.mu));
        eta0 = bifurcat::to_double(eta_critical(p));
    }

    struct Quad {
        double A, B, C, Delta;
    };
    Quad quad(double w, double a) const {
        Quad q;
        double V_i = v_i + a / w;
        q.A = v_s * v_i;
        q.B = V_i * v_s * w - mu * eta0;
        q.C = w * (mu * V_i - beta * b);
        q.Delta = q.B * q.B - 4 * q.A * q.C;
        return q;
    }
    double r0(double w, double a) const { return beta * b / (mu * (v_i + a / w)); }
    double s_of_i(double i) const { return b * (1 + xi * i) / (mu + v_s * i); }
    double trace_at(double w, double a, double i) const {
        double eta = a / w;
        double q1 = 1 + xi * i, q2 = w + i;
        double s = s_of_i(i);
        return -beta * i / q1 - mu + beta * s / (q1 * q1) - eta * w * w / (q2 * q2) - v_i;
    }
    /// Upper endemic root; NaN when Delta < 0.
    double i2(double w, double a) const {
        Quad q = quad(w, a);
        if (q.Delta < 0) return std::nan("");
        return (-q.B + std::sqrt(q.Delta)) / (2 * q.A);
    }
    /// Trace at the would-be double root -B/2A; smooth in (w, a) and equal
    /// to the E2 trace exactly on the fold, which is all the corner Newton
    /// needs.
    double trace_at_double_root(double w, double a) const {
        Quad q = quad(w, a);
        return trace_at(w, a, -q.B / (2 * q.A));
    }
};

}  // namespace detail

/// Closed-form corner H where both endemic points collide with the DFE:
/// eta_H = eta0, omega_H = mu^2 eta0 / (beta b v_s).  Exact in rational
/// arithmetic; the returned residuals are of the R0=1 and B=0 equations.
struct HPoint {
    Rational omega, alpha;
    CornerPoint corner;
    Rational trace_at_collision;  // = -mu
};

inline HPoint solve_H(const ModelParams& p) {
    require_reduced(p);
    Rational eta0 = eta_critical(p);
    if (eta0 <= 0) throw NumericError("no H point (disease-free regime)");
    Rational v_s = p.beta + p.xi * p.mu;
    HPoint h;
    h.omega = p.mu * p.mu * eta0 / (p.beta * p.b * v_s);
    h.alpha = eta0 * h.omega;
    auto at = with_omega_alpha(p, h.omega, h.alpha);
    auto q = endemic_quadratic(at);
    if (q.B != 0 || q.C != 0 || q.Delta != 0)
        throw NumericError("H point closed form failed the collision identities");
    // The collided point sits at the DFE; its trace is -mu.
    auto J = jacobian2(at, State<Rational>{p.b / p.mu, Rational(0), Rational(0)});
    h.trace_at_collision = J[0][0] + J[1][1];
    h.corner.name = "H";
    h.corner.omega = to_double(h.omega);
    h.corner.alpha = to_double(h.alpha);
    h.corner.defining = {CurveKind::r0_eq_1, CurveKind::B_eq_0};
    h.corner.residuals = {std::abs(to_double(r0(at)) - 1.0), std::abs(to_double(q.B))};
    return h;
}

/// The B points: intersections of R0 = 1 with the trace-zero variety, found
/// as real roots of the resultant of the endemic quadratic and the trace
/// numerator under eta = eta0, then filtered to the branch where the
/// interior point (not the one merged with the DFE) carries the zero trace.
struct BPointSolve {
    RationalPoly resultant_in_omega;  // full resultant, content/power stripped
    DensePoly cubic;                  // squarefree core whose roots are scanned
    std::vector<CornerPoint> kept;    // B1, B2
    std::vector<CornerPoint> excluded;
};

inline BPointSolve solve_B_points(const ModelParams& p, Rational omega_hi = Rational(20),
                                  Rational tol = Rational(1, Int(1000000000000))) {
    require_reduced(p);
    Rational eta0 = eta_critical(p);
    if (eta0 <= 0) throw NumericError("no B points (disease-free regime)");
    auto pi_ = endemic_poly(p, SymbolPlane::omega_eta).substitute("eta", eta0);
    auto trn = endemic_trace_poly(p, SymbolPlane::omega_eta).substitute("eta", eta0);
    if (pi_.degree("i") == 0 || trn.degree("i") == 0)
        throw NumericError("B-point resultant degenerate: nothing to eliminate");
    auto res = sylvester_resultant(pi_, trn, "i").primitive();

    BPointSolve out;
    out.resultant_in_omega = res;
    DensePoly dense = res.dense_univariate("omega");
    // Strip omega^k (roots at omega = 0 are parameter-plane artifacts).
    while (!dense.empty() && dense.front() == 0) dense.erase(dense.begin());
    if (dense.size() <= 1) throw NumericError("B-point resultant degenerate after stripping");
    out.cubic = dense_squarefree(dense);

    detail::PlaneEval ev(p);
    for (const auto& iv : sturm_real_roots(out.cubic, Rational(0), omega_hi, tol)) {
        double w = iv.midpoint_double();
        double a = ev.eta0 * w;
        auto q = ev.quad(w, a);
        CornerPoint c;
        c.omega = w;
        c.alpha = a;
        c.defining = {CurveKind::r0_eq_1, CurveKind::trE2_eq_0};
        // On R0=1 the roots are {0, -B/A}; the genuine branch has the
        // interior root positive and carrying the zero trace.
        double i2 = -q.B / q.A;
        double tr = i2 > 0 ? ev.trace_at(w, a, i2) : std::nan("");
        c.residuals = {0.0, std::abs(tr)};
        if (i2 > 0 && std::abs(tr) < 1e-6) {
            c.name = "B";
            out.kept.push_back(c);
        } else {
            c.name = "B(excluded)";
            out.excluded.push_back(c);
        }
    }
    for (std::size_t k = 0; k < out.kept.size(); ++k)
        out.kept[k].name = "B" + std::to_string(k + 1);
    return out;
}

/// Bogdanov-Takens corner: Newton iteration on (Delta, trace-at-double-root)
/// from a sign-change grid seed.
struct BTSolve {
    CornerPoint corner;
    std::vector<std::array<double, 4>> iterates;  // omega, alpha, Delta, trace
};

inline BTSolve solve_BT(const ModelParams& p,
                        std::optional<std::pair<double, double>> seed = std::nullopt,
                        int max_iter = 100) {
    require_reduced(p);
    detail::PlaneEval ev(p);
    double w0 = 0, a0 = 0;
    if (seed) {
        w0 = seed->first;
        a0 = seed->second;
    } else {
        // Deterministic coarse scan for a cell where both Delta and the
        // extended trace change sign.
        const double step = 0.05;
        const double wmax = ev.mu / ev.v_s;  // Delta = 0 exists only below this
        bool found = false;
        for (double w = step; w + step < wmax && !found; w += step) {
            for (double a = step; a < ev.eta0 * wmax * 1.5 && !found; a += step) {
                double d00 = ev.quad(w, a).Delta, d11 = ev.quad(w + step, a + step).Delta;
                double d01 = ev.quad(w, a + step).Delta, d10 = ev.quad(w + step, a).Delta;
                bool dsign = std::min({d00, d01, d10, d11}) < 0 && std::max({d00, d01, d10, d11}) > 0;
                if (!dsign) continue;
                double t00 = ev.trace_at_double_root(w, a);
                double t11 = ev.trace_at_double_root(w + step, a + step);
                double t01 = ev.trace_at_double_root(w, a + step);
                double t10 = ev.trace_at_double_root(w + step, a);
                bool tsign = std::min({t00, t01, t10, t11}) < 0 && std::max({t00, t01, t10, t11}) > 0;
                if (!tsign) continue;
                w0 = w + step / 2;
                a0 = a + step / 2;
                found = true;
            }
        }
        if (!found) throw NumericError("solve_BT: no sign-change seed found");
    }

    BTSolve out;
    double w = w0, a = a0;
    auto F = [&](double ww, double aa, double& f1, double& f2) {
        f1 = ev.quad(ww, aa).Delta;
        f2 = ev.trace_at_double_root(ww, aa);
    };
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
        double f1, f2;
        F(w, a, f1, f2);
        out.iterates.push_back({w, a, f1, f2});
        if (std::abs(f1) < 1e-14 && std::abs(f2) < 1e-12) {
            converged = true;
            break;
        }
        // Central-difference Jacobian; both components are smooth rationals.
        double hw = 1e-6 * std::max(1.0, std::abs(w));
        double ha = 1e-6 * std::max(1.0, std::abs(a));
        double f1p, f2p, f1m, f2m;
        F(w + hw, a, f1p, f2p);
        F(w - hw, a, f1m, f2m);
        double j11 = (f1p - f1m) / (2 * hw), j21 = (f2p - f2m) / (2 * hw);
        F(w, a + ha, f1p, f2p);
        F(w, a - ha, f1m, f2m);
        double j12 = (f1p - f1m) / (2 * ha), j22 = (f2p - f2m) / (2 * ha);
        double det = j11 * j22 - j12 * j21;
        if (det == 0) throw NumericError("solve_BT: singular Newton system");
        double dw = (-f1 * j22 + f2 * j12) / det;
        double da = (-f2 * j11 + f1 * j21) / det;
        // Damped step: halve until the residual norm does not grow.
        double n0 = std::hypot(f1, f2), lambda = 1.0;
        for (int cut = 0; cut < 30; ++cut) {
            double g1, g2;
            F(w + lambda * dw, a + lambda * da, g1, g2);
            if (std::hypot(g1, g2) <= n0) break;
            lambda /= 2;
        }
        w += lambda * dw;
        a += lambda * da;
    }
    if (!converged) {
        double f1, f2;
        F(w, a, f1, f2);
        if (!(std::abs(f1) < 1e-14 && std::abs(f2) < 1e-12)) {
            std::ostringstream os;
            os << "solve_BT: Newton did not converge; iterates:";
            for (const auto& r : out.iterates)
                os << " (" << r[0] << "," << r[1] << ";" << r[2] << "," << r[3] << ")";
            throw NumericError(os.str());
        }
    }
    double f1, f2;
    F(w, a, f1, f2);
    out.corner.name = "BT";
    out.corner.omega = w;
    out.corner.alpha = a;
    out.corner.defining = {CurveKind::delta_eq_0, CurveKind::trE2_eq_0};
    auto q = ev.quad(w, a);
    double delta_scale = std::max(q.B * q.B, std::abs(4 * q.A * q.C));
    out.corner.residuals = {std::abs(f1) / delta_scale, std::abs(f2)};
    if (out.corner.residuals.first > 1e-10 || out.corner.residuals.second > 1e-10)
        throw NumericError("solve_BT: converged point fails the residual gate");
    return out;
}

/// Context for classification: the base parameters plus the solved BT
/// corner, whose omega separates the two connected components that share
/// the VI sign pattern (VIa lives right of BT inside the thin triangle).
struct AtlasContext {
    ModelParams base;
    detail::PlaneEval ev;
    double omega_bt;
    double alpha_bt;

    explicit AtlasContext(const ModelParams& p) : base(p), ev(p) {
        auto bt = solve_BT(p);
        omega_bt = bt.corner.omega;
        alpha_bt = bt.corner.alpha;
    }
};

/// Classifies one plane point.  Quantities within tol (after per-quantity
/// normalization) of zero produce boundary/corner labels; otherwise the sign
/// pattern picks the region.  The trace sign enters only where E2 exists.
inline RegionLabel classify_region(const AtlasContext& ctx, double omega, double alpha,
                                   double tol = 1e-4) {
    if (!(omega > 0) || alpha < 0)
        throw std::domain_error("classify_region: need omega > 0, alpha >= 0");
    const auto& ev = ctx.ev;
    auto q = ev.quad(omega, alpha);
    double delta_scale = std::max({q.B * q.B, std::abs(4 * q.A * q.C), 1e-300});
    double delta_norm = q.Delta / delta_scale;
    double r0m1 = ev.r0(omega, alpha) - 1.0;
    double b_norm = q.B / (std::abs((ev.v_i + alpha / omega) * ev.v_s * omega) + ev.mu * ev.eta0);

    RegionLabel out;
    out.sign_delta = delta_norm > 0 ? 1 : (delta_norm < 0 ? -1 : 0);
    out.sign_r0m1 = r0m1 > 0 ? 1 : (r0m1 < 0 ? -1 : 0);
    out.sign_B = b_norm > 0 ? 1 : (b_norm < 0 ? -1 : 0);

    double i2 = ev.i2(omega, alpha);
    double tr = std::nan("");
    if (!std::isnan(i2) && i2 > 0) {
        tr = ev.trace_at(omega, alpha, i2);
        out.tr_defined = true;
        out.sign_trE2 = tr > 0 ? 1 : (tr < 0 ? -1 : 0);
    }

    struct Hit {
        CurveKind kind;
        double value;
    };
    std::vector<Hit> hits;
    if (std::abs(r0m1) < tol) hits.push_back({CurveKind::r0_eq_1, r0m1});
    if (std::abs(delta_norm) < tol) hits.push_back({CurveKind::delta_eq_0, delta_norm});
    if (out.tr_defined && std::abs(tr) < tol) hits.push_back({CurveKind::trE2_eq_0, tr});
    if (std::abs(b_norm) < tol) hits.push_back({CurveKind::B_eq_0, b_norm});

    if (hits.size() >= 2) {
        out.name = RegionName::corner;
        auto has = [&](CurveKind k) {
            for (const auto& h : hits)
                if (h.kind == k) return true;
            return false;
        };
        if (has(CurveKind::r0_eq_1) && has(CurveKind::B_eq_0))
            out.corner_name = "H";
        else if (has(CurveKind::delta_eq_0) && has(CurveKind::trE2_eq_0))
            out.corner_name = "BT";
        else if (has(CurveKind::r0_eq_1) && has(CurveKind::trE2_eq_0))
            out.corner_name = omega < ctx.omega_bt ? "B1" : "B2";
        else
            out.corner_name = "unnamed";
        return out;
    }
    if (hits.size() == 1) {
        out.name = RegionName::boundary;
        out.boundary_kind = hits[0].kind;
        return out;
    }

    if (out.sign_delta < 0) {
        out.name = RegionName::V;
        return out;
    }
    if (out.sign_r0m1 > 0) {
        out.name = out.sign_trE2 > 0 ? RegionName::II : RegionName::III;
        return out;
    }
    if (out.sign_B > 0) {
        out.name = RegionName::IV;
        return out;
    }
    if (!out.tr_defined)
        throw NumericError("classify_region: unclassified sign pattern");
    if (out.sign_trE2 > 0) {
        out.name = RegionName::I;
        return out;
    }
    out.name = omega > ctx.omega_bt ? RegionName::VIa : RegionName::VI;
    return out;
}

/// Samples one bifurcation curve as (omega, alpha) pairs ordered by omega
/// (and by alpha within a column where the curve has several sheets).
inline CurvePolyline trace_curve(const AtlasContext& ctx, CurveKind kind, double omega_lo,
                                 double omega_hi, int n_samples, const std::string& branch = "") {
    if (!(omega_lo > 0) || !(omega_hi > omega_lo) || n_samples < 2)
        throw std::invalid_argument("trace_curve: bad range");
    const auto& ev = ctx.ev;
    CurvePolyline out;
    out.kind = kind;
    out.branch = branch;
    out.resolution = (omega_hi - omega_lo) / (n_samples - 1);

    auto polish_trace = [&](double w, double alo, double ahi) {
        // Bisection to a sign flip, then secant refinement.
        double flo = ev.trace_at(w, alo, ev.i2(w, alo));
        for (int k = 0; k < 80; ++k) {
            double mid = (alo + ahi) / 2;
            double i = ev.i2(w, mid);
            double fm = std::isnan(i) || i <= 0 ? std::nan("") : ev.trace_at(w, mid, i);
            if (std::isnan(fm)) {
                ahi = mid;  // fell off the existence set; shrink towards alo
                continue;
            }
            if ((fm > 0) == (flo > 0)) {
                alo = mid;
                flo = fm;
            } else {
                ahi = mid;
            }
        }
        return (alo + ahi) / 2;
    };

    for (int k = 0; k < n_samples; ++k) {
        double w = omega_lo + k * out.resolution;
        switch (kind) {
            case CurveKind::r0_eq_1:
                out.points.emplace_back(w, ev.eta0 * w);
                break;
            case CurveKind::B_eq_0: {
                double a = ev.mu * ev.eta0 / ev.v_s - ev.v_i * w;
                if (a >= 0) out.points.emplace_back(w, a);
                break;
            }
            case CurveKind::delta_eq_0: {
                double kk = w * ev.v_s * ev.v_i, m = ev.mu * ev.v_i, h = ev.beta * ev.b;
                double disc = h * (m - kk);
                if (disc < 0) break;
                double a = branch == "upper" ? (-(kk - m - h) + 2 * std::sqrt(disc)) / ev.v_s
                                             : (-(kk - m - h) - 2 * std::sqrt(disc)) / ev.v_s;
                if (a >= 0) out.points.emplace_back(w, a);
                break;
            }
            case CurveKind::trE2_eq_0: {
                // Scan alpha for sign changes of trace(E2) where E2 exists.
                const double a_max = ev.eta0 * (ev.mu / ev.v_s) * 1.5;
                const int scan = 400;
                double prev = std::nan("");
                double prev_a = 0;
                for (int j = 0; j <= scan; ++j) {
                    double a = a_max * j / scan;
                    if (a <= 0) continue;
                    double i = ev.i2(w, a);
                    double f = (std::isnan(i) || i <= 0) ? std::nan("") : ev.trace_at(w, a, i);
                    if (!std::isnan(prev) && !std::isnan(f) && (prev > 0) != (f > 0))
                        out.points.emplace_back(w, polish_trace(w, prev_a, a));
                    prev = f;
                    prev_a = a;
                }
                break;
            }
        }
    }
    return out;
}

/// Paper-anchored sample points: curve samples (R on R0=1, T on TrE2=0) and
/// region interior representatives.  R and T alphas are recomputed from the
/// defining curves rather than trusted.
struct NamedPoint {
    std::string name;
    double omega;
    double alpha;
    std::string description;
};

struct MapWindow {
    double omega_lo = 0, omega_hi = 14, alpha_lo = 0, alpha_hi = 14;
};

struct MapResult {
    MapWindow window;
    int nx = 0, ny = 0;
    std::vector<RegionLabel> cells;  // row-major, alpha rows from low to high
    std::vector<CurvePolyline> curves;
    std::vector<CornerPoint> corners;

    const RegionLabel& at(int ix, int iy) const {
        return cells[static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx) +
                     static_cast<std::size_t>(ix)];
    }
};

/// Rasterizes the region partition over a window and attaches all curves
/// and corner points.  Cell labels are pure sign classifications (tol = 0
/// semantics, no boundary dead band).  `threads` = 0 reads BIFURCAT_THREADS,
/// falling back to the hardware count.
inline MapResult build_map(const AtlasContext& ctx, const MapWindow& window, int nx, int ny,
                           int threads = 0) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("build_map: resolution too small");
    MapResult out;
    out.window = window;
    out.nx = nx;
    out.ny = ny;
    out.cells.resize(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));

    if (threads <= 0) {
        if (const char* env = std::getenv("BIFURCAT_THREADS")) threads = std::atoi(env);
        if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }

    auto classify_column = [&](int ix) {
        double w = window.omega_lo + (window.omega_hi - window.omega_lo) * (ix + 0.5) / nx;
        if (w <= 0) w = 1e-12;
        for (int iy = 0; iy < ny; ++iy) {
            double a = window.alpha_lo + (window.alpha_hi - window.alpha_lo) * (iy + 0.5) / ny;
            if (a < 0) a = 0;
            out.cells[static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx) +
                      static_cast<std::size_t>(ix)] = classify_region(ctx, w, a, 0.0);
        }
    };
    if (threads == 1) {
        for (int ix = 0; ix < nx; ++ix) classify_column(ix);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        auto worker = [&] {
            for (;;) {
                int ix = next.fetch_add(1);
                if (ix >= nx) return;
                classify_column(ix);
            }
        };
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    const int n_curve = std::max(nx, 200);
    double wlo = std::max(window.omega_lo, 1e-6);
    out.curves.push_back(trace_curve(ctx, CurveKind::r0_eq_1, wlo, window.omega_hi, n_curve));
    out.curves.push_back(trace_curve(ctx, CurveKind::B_eq_0, wlo, window.omega_hi, n_curve));
    out.curves.push_back(trace_curve(ctx, CurveKind::delta_eq_0, wlo, window.omega_hi, n_curve, "lower"));
    out.curves.push_back(trace_curve(ctx, CurveKind::delta_eq_0, wlo, window.omega_hi, n_curve, "upper"));
    out.curves.push_back(trace_curve(ctx, CurveKind::trE2_eq_0, wlo, window.omega_hi, n_curve));

    auto h = solve_H(ctx.base);
    out.corners.push_back(h.corner);
    auto bs = solve_B_points(ctx.base);
    for (const auto& c : bs.kept) out.corners.push_back(c);
    auto bt = solve_BT(ctx.base);
    out.corners.push_back(bt.corner);
    return out;
}

/// The named sample points of the corrected map: computed corners plus the
/// published curve samples and region representatives at the base rates.
inline std::vector<NamedPoint> named_points(const AtlasContext& ctx) {
    std::vector<NamedPoint> out;
    const auto& ev = ctx.ev;
    auto on_line = [&](const std::string& nm, double w, const std::string& d) {
        out.push_back({nm, w, ev.eta0 * w, d});
    };
    auto h = solve_H(ctx.base);
    auto bs = solve_B_points(ctx.base);
    auto bt = solve_BT(ctx.base);

    on_line("R1", 4.62051, "on R0=1, downward from B1");
    if (!bs.kept.empty()) out.push_back({"B1", bs.kept[0].omega, bs.kept[0].alpha, "R0=1 meets TrE2=0"});
    on_line("R2", 6.258, "on R0=1, upward from B1");
    out.push_back({"BT", bt.corner.omega, bt.corner.alpha, "double-zero corner"});
    if (bs.kept.size() > 1) out.push_back({"B2", bs.kept[1].omega, bs.kept[1].alpha, "R0=1 meets TrE2=0"});
    on_line("R3", 7.652, "on R0=1, between B2 and H");
    out.push_back({"H", h.corner.omega, h.corner.alpha, "triple collision with the DFE"});

    // T points: polish alpha onto the trace curve from the published values.
    auto polish_T = [&](const std::string& nm, double w, double a_guess) {
        double lo = a_guess - 0.05, hi = a_guess + 0.05;
        auto f = [&](double a) {
            double i = ev.i2(w, a);
            return (std::isnan(i) || i <= 0) ? std::nan("") : ev.trace_at(w, a, i);
        };
        double flo = f(lo), fhi = f(hi);
        if (std::isnan(flo) || std::isnan(fhi) || (flo > 0) == (fhi > 0)) {
            out.push_back({nm, w, a_guess, "on TrE2=0 (unpolished)"});
            return;
        }
        for (int k = 0; k < 80; ++k) {
            double mid = (lo + hi) / 2, fm = f(mid);
            if ((fm > 0) == (flo > 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        out.push_back({nm, w, (lo + hi) / 2, "on TrE2=0"});
    };
    polish_T("T1", 6.0, 5.00625);
    polish_T("T2", 2.93233, 3.69658);

    out.push_back({"Q_I", 2.156, 3.468, "region I"});
    out.push_back({"Q_II", 6.375, 5.375, "region II"});
    out.push_back({"Q_III", 6.0, 0.15625, "region III"});
    out.push_back({"Q_IV", 11.75, 11.75, "region IV"});
    out.push_back({"Q_V", 6.0, 6.0, "region V"});
    out.push_back({"Q_VI", 0.078125, 0.15625, "region VI"});
    out.push_back({"Q_VIa", 502.0 / 67.0, 41102.0 / 6131.0, "region VIa"});
    return out;
}

}  // namespace bifurcat

#endif
