#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <random>

#include "bifurcat/equilibria.hpp"

using namespace bifurcat;
using Catch::Approx;

namespace {

ModelParams base_at(const Rational& omega, const Rational& alpha) {
    return with_omega_alpha(base_params(), omega, alpha);
}

// Bisects trace_at_endemic(E2) = 0 in alpha at fixed omega.
double solve_trace_zero_alpha(double omega, double alo, double ahi) {
    auto tr = [&](double a) {
        return trace_at_endemic(base_at(Rational(omega), Rational(a)), FixedPointLabel::E2);
    };
    double flo = tr(alo), fhi = tr(ahi);
    REQUIRE(flo * fhi < 0);
    for (int k = 0; k < 200; ++k) {
        double mid = (alo + ahi) / 2;
        double fm = tr(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) {
            alo = mid;
            flo = fm;
        } else {
            ahi = mid;
        }
    }
    return (alo + ahi) / 2;
}

}  // namespace

TEST_CASE("fixed points in region II") {
    auto pts = fixed_points(base_at(Rational(51, 8), Rational(43, 8)));
    auto e0 = find_point(pts, FixedPointLabel::E0);
    REQUIRE(e0);
    CHECK(e0->classification == Stability::saddle);
    CHECK(e0->eig1.real() == Approx(-0.12).margin(1e-9));
    CHECK(e0->eig2.real() == Approx(0.0501961).margin(1e-6));

    auto e2 = find_point(pts, FixedPointLabel::E2);
    REQUIRE(e2);
    CHECK(e2->s == Approx(85.4965).margin(1e-2));
    CHECK(e2->i == Approx(6.75961).margin(1e-3));
    CHECK(e2->classification == Stability::unstable_spiral);
    CHECK(e2->eig2.real() == Approx(0.00887972).margin(1e-5));
    CHECK(std::abs(e2->eig2.imag()) == Approx(0.13495).margin(1e-4));

    CHECK(!find_point(pts, FixedPointLabel::E1));
}

TEST_CASE("fixed points in the bistability region") {
    auto pts = fixed_points(base_at(Rational(5, 64), Rational(5, 32)));
    auto e0 = find_point(pts, FixedPointLabel::E0);
    auto e1 = find_point(pts, FixedPointLabel::E1);
    auto e2 = find_point(pts, FixedPointLabel::E2);
    REQUIRE((e0 && e1 && e2));
    CHECK(e0->classification == Stability::stable_node);
    CHECK(e0->eig1.real() == Approx(-1.1).margin(1e-2));
    CHECK(e0->eig2.real() == Approx(-0.12).margin(1e-9));

    CHECK(e2->s == Approx(45.712).margin(1e-2));
    CHECK(e2->i == Approx(23.542).margin(1e-2));
    CHECK(e2->classification == Stability::stable_spiral);
    CHECK(e2->eig2.real() == Approx(-0.176845).margin(1e-5));
    CHECK(std::abs(e2->eig2.imag()) == Approx(0.265287).margin(1e-5));

    CHECK(e1->s == Approx(132.24).margin(1e-1));
    CHECK(e1->i == Approx(0.098).margin(1e-2));
    CHECK(e1->classification == Stability::saddle);
    CHECK(e1->eig2.real() == Approx(0.4908).margin(1e-3));
    CHECK(e1->eig1.real() == Approx(-0.1188).margin(1e-3));
}

TEST_CASE("near-collision at the double-zero corner") {
    // At the printed (rounded) corner coordinates the discriminant is only
    // zero to ~1e-7, so collision detection needs the loosened band.
    FixedPointOptions opt;
    opt.merge_rel = 1e-3;
    auto pts = fixed_points(base_at(Rational(684183, 100000), Rational(620319, 100000)), opt);
    auto m = find_point(pts, FixedPointLabel::merged);
    REQUIRE(m);
    CHECK(m->s == Approx(117.951).margin(5e-2));
    CHECK(m->i == Approx(1.56737).margin(5e-3));
    CHECK(std::abs(m->eig1) < 1e-2);
    CHECK(std::abs(m->eig2) < 1e-2);
}

TEST_CASE("every returned equilibrium satisfies the stationarity equations") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> uo(0.05, 10.0), ua(0.01, 12.0);
    for (int t = 0; t < 200; ++t) {
        auto p = base_at(Rational(uo(rng)), Rational(ua(rng)));
        auto pd = to_double(p);
        for (const auto& r : fixed_points(p)) {
            auto f = vector_field(pd, State<double>{r.s, r.i, 0}, Variant::reduced2d);
            CHECK(std::abs(f[0]) < 1e-8 * std::max(1.0, r.s));
            CHECK(std::abs(f[1]) < 1e-8 * std::max(1.0, r.s));
        }
    }
}

TEST_CASE("Vieta consistency of the endemic roots") {
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> uo(0.05, 10.0), ua(0.01, 12.0);
    int seen = 0;
    for (int t = 0; t < 300 && seen < 60; ++t) {
        auto p = base_at(Rational(uo(rng)), Rational(ua(rng)));
        auto q = endemic_quadratic(to_double(p));
        if (q.Delta <= 0) continue;
        double i1 = (-q.B - std::sqrt(q.Delta)) / (2 * q.A);
        double i2 = (-q.B + std::sqrt(q.Delta)) / (2 * q.A);
        CHECK(i1 + i2 == Approx(-q.B / q.A).epsilon(1e-12));
        CHECK(i1 * i2 == Approx(q.C / q.A).epsilon(1e-11).margin(1e-13));
        ++seen;
    }
    CHECK(seen >= 60);
}

TEST_CASE("both Jacobian forms agree at endemic points only") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> uo(0.05, 10.0), ua(0.01, 12.0);
    int seen = 0;
    for (int t = 0; t < 200 && seen < 40; ++t) {
        auto p = base_at(Rational(uo(rng)), Rational(ua(rng)));
        auto pd = to_double(p);
        auto pts = fixed_points(p);
        for (const auto& r : pts) {
            if (r.label == FixedPointLabel::E0 || r.boundary_degenerate) continue;
            auto J1 = jacobian2(pd, State<double>{r.s, r.i, 0});
            auto J2 = jacobian2_endemic_form(pd, State<double>{r.s, r.i, 0});
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    double scale = std::abs(J1[a][b]) + 1e-12;
                    CHECK(std::abs(J1[a][b] - J2[a][b]) / scale < 1e-8);
                }
            ++seen;
        }
    }
    CHECK(seen >= 40);
}

TEST_CASE("E2 is never a saddle") {
    std::mt19937 rng(73);
    std::uniform_real_distribution<double> uo(0.05, 10.0), ua(0.01, 12.0);
    int seen = 0;
    for (int t = 0; t < 400; ++t) {
        auto p = base_at(Rational(uo(rng)), Rational(ua(rng)));
        auto e2 = find_point(fixed_points(p), FixedPointLabel::E2);
        if (!e2 || e2->boundary_degenerate) continue;
        CHECK(e2->det > 0);
        CHECK(e2->classification != Stability::saddle);
        ++seen;
    }
    CHECK(seen > 100);
}

TEST_CASE("psi positivity and the determinant identity") {
    auto p = base_at(Rational(51, 8), Rational(43, 8));
    auto pd = to_double(p);
    auto p_large = to_double(base_at(Rational(20), Rational(5)));
    REQUIRE(p_large.omega * (p_large.beta + p_large.xi * p_large.mu) > p_large.mu);
    for (double i = 0; i < 50; i += 0.5) CHECK(psi(p_large, i) > 0);

    // det(J(E2)) = i2 * Psi(i2) / ((1 + xi i2)(i2 + omega)^2)
    auto e2 = find_point(fixed_points(p), FixedPointLabel::E2);
    REQUIRE(e2);
    double i2 = e2->i;
    double pred = i2 * psi(pd, i2) / ((1 + pd.xi * i2) * std::pow(i2 + pd.omega, 2));
    CHECK(pred == Approx(e2->det).epsilon(1e-9));

    // i = 0 kills the prefactor.
    CHECK(0.0 * psi(pd, 0.0) == 0.0);
}

TEST_CASE("saddle check at the reported points") {
    auto c = saddle_check(base_at(Rational(5, 64), Rational(5, 32)));
    CHECK(c.holds);
    CHECK(c.det_E1 < 0);
    CHECK(c.det_E2 > 0);

    // T2 = (2.93233, 3.69658): E1 is a saddle with eigenvalues (0.229, -0.0664).
    auto pts = fixed_points(base_at(Rational(293233, 100000), Rational(369658, 100000)));
    auto e1 = find_point(pts, FixedPointLabel::E1);
    REQUIRE(e1);
    CHECK(e1->classification == Stability::saddle);
    CHECK(e1->det < 0);
    CHECK(e1->eig2.real() == Approx(0.229).margin(2e-3));
    CHECK(e1->eig1.real() == Approx(-0.0664).margin(2e-3));

    CHECK_THROWS_AS(saddle_check(base_at(Rational(6), Rational(6))), NumericError);
}

TEST_CASE("saddle inequality holds across the admissible box") {
    std::mt19937 rng(79);
    std::uniform_real_distribution<double> uo(0.05, 9.0), ua(0.01, 12.0);
    int seen = 0, tries = 0;
    while (seen < 150 && ++tries < 20000) {
        auto p = base_at(Rational(uo(rng)), Rational(ua(rng)));
        auto pts = fixed_points(p);
        auto e1 = find_point(pts, FixedPointLabel::E1);
        auto e2 = find_point(pts, FixedPointLabel::E2);
        if (!e1 || !e2 || e1->boundary_degenerate) continue;
        auto c = saddle_check(p);
        CHECK(c.holds);
        ++seen;
    }
    CHECK(seen == 150);
}

TEST_CASE("trace at endemic points against reported values") {
    // T1: Hopf boundary, trace ~ 0 (coordinates printed to ~6 digits).
    double trT1 = trace_at_endemic(base_at(6, Rational(801, 160)), FixedPointLabel::E2);
    CHECK(std::abs(trT1) < 1e-4);
    // Region II: twice the reported real part.
    double trII = trace_at_endemic(base_at(Rational(51, 8), Rational(43, 8)), FixedPointLabel::E2);
    CHECK(trII == Approx(2 * 0.00887972).margin(1e-4));
    // Region III: stable.
    CHECK(trace_at_endemic(base_at(6, Rational(5, 32)), FixedPointLabel::E2) < 0);
    // Direct Jacobian trace agrees to 1e-9.
    auto pts = fixed_points(base_at(Rational(51, 8), Rational(43, 8)));
    auto e2 = find_point(pts, FixedPointLabel::E2);
    REQUIRE(e2);
    CHECK(trII == Approx(e2->trace).epsilon(1e-9));
    CHECK_THROWS_AS(trace_at_endemic(base_at(6, 6), FixedPointLabel::E2), NumericError);
}

TEST_CASE("eliminated varieties: methods agree and factor as expected") {
    auto p = base_params();
    for (auto kind : {VarietyKind::traceG, VarietyKind::detG}) {
        auto via_res = eliminated_variety(p, kind, VarietyMethod::resultant);
        GroebnerOptions opt;
        opt.term_budget = 500000;
        auto via_gb = eliminated_variety(p, kind, VarietyMethod::groebner,
                                         SymbolPlane::omega_alpha, opt);
        CHECK(via_res.poly == via_gb.poly);
    }

    auto detg = eliminated_variety(p, VarietyKind::detG, VarietyMethod::resultant);
    // Factors: the R0=1 line and the discriminant.
    REQUIRE(detg.factors.size() >= 2);
    auto omega = RationalPoly::variable("omega");
    auto alpha = RationalPoly::variable("alpha");
    auto r0m1 = (RationalPoly(eta_critical(p)) * omega - alpha).primitive();
    bool has_line = false;
    for (const auto& f : detg.factors)
        if (f == r0m1 || f == -r0m1) has_line = true;
    CHECK(has_line);
    // The spurious strip includes structural factors.
    CHECK(!detg.spurious.empty());
}

TEST_CASE("detG sign matches (R0-1)*Delta") {
    auto p = base_params();
    auto detg = eliminated_variety(p, VarietyKind::detG, VarietyMethod::resultant);
    std::mt19937 rng(83);
    std::uniform_real_distribution<double> uo(0.1, 13.0), ua(0.05, 13.0);
    int global_sign = 0;
    for (int t = 0; t < 50; ++t) {
        double w = uo(rng), a = ua(rng);
        std::map<std::string, double> at{{"omega", w}, {"alpha", a}};
        double dg = detg.poly.eval_double(at);
        auto pp = to_double(base_at(Rational(w), Rational(a)));
        auto q = endemic_quadratic(pp);
        double rhs = (bifurcat::r0(pp) - 1.0) * q.Delta;
        int s1 = dg > 0 ? 1 : -1, s2 = rhs > 0 ? 1 : -1;
        if (global_sign == 0) global_sign = s1 * s2;
        CHECK(s1 * s2 == global_sign);
    }
}

TEST_CASE("traceG vanishes on the Hopf branch after polishing") {
    auto p = base_params();
    auto trg = eliminated_variety(p, VarietyKind::traceG, VarietyMethod::resultant);
    double a_star = solve_trace_zero_alpha(6.0, 4.9, 5.1);
    CHECK(a_star == Approx(5.00625).margin(1e-4));
    std::map<std::string, double> at{{"omega", 6.0}, {"alpha", a_star}};
    double rel = detail::scaled_eval(trg.poly, at);
    CHECK(std::abs(rel) < 1e-9);
    // Off the curve the normalized value is far from zero.
    std::map<std::string, double> off{{"omega", 5.0}, {"alpha", 3.0}};
    CHECK(std::abs(detail::scaled_eval(trg.poly, off)) > 1e-3);
}

TEST_CASE("tr3 report: own factorization vanishes on the curve") {
    auto p = base_params();
    auto trg_eta = eliminated_variety(p, VarietyKind::traceG, VarietyMethod::resultant,
                                      SymbolPlane::omega_eta);
    double a_star = solve_trace_zero_alpha(6.0, 4.9, 5.1);
    auto at_curve = with_omega_alpha(base_params(), Rational(6), Rational(a_star));
    auto rep = tr3_factor_check(at_curve, trg_eta);
    CHECK(rep.min_own < 1e-9);

    auto off_curve = with_omega_alpha(base_params(), Rational(5), Rational(3));
    auto rep_off = tr3_factor_check(off_curve, trg_eta);
    CHECK(rep_off.min_own > 1e-3);
}

TEST_CASE("variety ratio sample reports the product-over-points comparison") {
    auto p = base_params();
    auto detg = eliminated_variety(p, VarietyKind::detG, VarietyMethod::resultant);
    auto s = variety_ratio_sample(p, detg, 0.078125, 0.15625);
    CHECK(s.n_points == 2);
    CHECK(s.product_value < 0);  // saddle * stable: negative product
}
