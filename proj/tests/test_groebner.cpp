#include <catch2/catch_amalgamated.hpp>

#include "bifurcat/groebner.hpp"

using namespace bifurcat;

namespace {
RationalPoly var(const std::string& n) { return RationalPoly::variable(n); }
}  // namespace

TEST_CASE("linear elimination") {
    auto x = var("x"), y = var("y");
    auto basis = groebner_lex({x - Rational(1), y - x}, {"x", "y"});
    bool found = false;
    for (const auto& g : basis)
        if (g == y - Rational(1)) found = true;
    CHECK(found);
    CHECK(is_groebner_basis(basis, {"x", "y"}));
    auto elim = elimination_ideal(basis, {"x", "y"}, 1);
    REQUIRE(elim.size() == 1);
    CHECK(elim[0] == y - Rational(1));
}

TEST_CASE("circle and line intersection") {
    auto x = var("x"), y = var("y");
    auto basis = groebner_lex({x * x + y * y - Rational(1), x - y}, {"x", "y"});
    CHECK(is_groebner_basis(basis, {"x", "y"}));
    auto elim = elimination_ideal(basis, {"x", "y"}, 1);
    REQUIRE(elim.size() == 1);
    // 2y^2 - 1 up to normalization
    CHECK(elim[0] == Rational(2) * y * y - Rational(1));
}

TEST_CASE("katsura-2 style system stays within budget and verifies") {
    auto a = var("a"), b = var("b"), c = var("c");
    std::vector<RationalPoly> sys{
        a + Rational(2) * b + Rational(2) * c - Rational(1),
        a * a + Rational(2) * b * b + Rational(2) * c * c - a,
        Rational(2) * a * b + Rational(2) * b * c - b,
    };
    auto basis = groebner_lex(sys, {"a", "b", "c"});
    CHECK(is_groebner_basis(basis, {"a", "b", "c"}));
    // All input polynomials must reduce to zero modulo the basis.
    for (const auto& p : sys) {
        std::size_t work = 0;
        auto aligned = p.aligned_to(std::vector<std::string>{"a", "b", "c"});
        CHECK(detail::reduce_full(aligned, basis, work, 1u << 20).is_zero());
    }
}

TEST_CASE("budget exhaustion raises the dedicated error") {
    auto x = var("x"), y = var("y"), z = var("z");
    GroebnerOptions opts;
    opts.term_budget = 3;
    CHECK_THROWS_AS(groebner_lex({x * x + y * y + z * z - Rational(1),
                                  x * y + y * z - Rational(1), x * z * z - y},
                                 {"x", "y", "z"}, opts),
                    EliminationBudgetError);
}
