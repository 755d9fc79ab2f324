#ifndef BIFURCAT_GROEBNER_HPP
#define BIFURCAT_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "bifurcat/errors.hpp"
#include "bifurcat/polynomial.hpp"

namespace bifurcat {

struct GroebnerOptions {
    /// Cumulative number of intermediate terms allowed across all S-polynomial
    /// reductions before the run aborts with EliminationBudgetError.
    std::size_t term_budget = 50000;
};

namespace detail {

/// Full normal form of f modulo the basis (lex order over f's own universe).
/// `work` accumulates intermediate term counts against the budget.
inline RationalPoly reduce_full(RationalPoly f, const std::vector<RationalPoly>& basis,
                                std::size_t& work, std::size_t budget) {
    RationalPoly remainder(Rational(0), f.vars());
    while (!f.is_zero()) {
        work += f.terms().size();
        if (work > budget) throw EliminationBudgetError("elimination budget exceeded");
        bool reduced = false;
        const Exponents& lt = f.leading_exponents();
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const Exponents& gl = g.leading_exponents();
            if (!exp_divides(gl, lt)) continue;
            RationalPoly mono(Rational(0), f.vars());
            mono.add_term(exp_sub(lt, gl), f.leading_coefficient() / g.leading_coefficient());
            f -= mono * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lt, f.leading_coefficient());
            RationalPoly mono(Rational(0), f.vars());
            mono.add_term(lt, f.leading_coefficient());
            f -= mono;
        }
    }
    return remainder;
}

inline RationalPoly s_polynomial(const RationalPoly& f, const RationalPoly& g) {
    const Exponents lcm = exp_lcm(f.leading_exponents(), g.leading_exponents());
    RationalPoly mf(Rational(0), f.vars()), mg(Rational(0), g.vars());
    mf.add_term(exp_sub(lcm, f.leading_exponents()), Rational(1) / f.leading_coefficient());
    mg.add_term(exp_sub(lcm, g.leading_exponents()), Rational(1) / g.leading_coefficient());
    return mf * f - mg * g;
}

}  // namespace detail

/// Reduced lex Groebner basis by Buchberger's algorithm.
///
/// `order` lists every variable, most significant first; variables meant to
/// be eliminated go in front, parameters kept symbolic at the back.  Pairs
/// are processed smallest lcm first, with the coprime-lead and chain
/// criteria.  Intended for small eliminations (a few variables) with numeric
/// rational coefficients; larger runs trip the term budget instead of
/// hanging.
inline std::vector<RationalPoly> groebner_lex(const std::vector<RationalPoly>& system,
                                              const std::vector<std::string>& order,
                                              const GroebnerOptions& options = {}) {
    if (system.empty()) throw std::invalid_argument("groebner_lex: empty system");
    for (const auto& p : system)
        for (const auto& v : p.vars())
            if (p.degree(v) > 0 && std::find(order.begin(), order.end(), v) == order.end())
                throw std::invalid_argument("groebner_lex: order misses variable " + v);

    std::vector<RationalPoly> basis;
    for (const auto& p : system) {
        RationalPoly q = p.aligned_to(order).primitive();
        if (!q.is_zero()) basis.push_back(q);
    }
    if (basis.empty()) return {};

    struct Pair {
        std::size_t i, j;
        Exponents lcm;
        unsigned sugar;
    };
    auto make_pair = [&](std::size_t i, std::size_t j) {
        Pair pr;
        pr.i = i;
        pr.j = j;
        pr.lcm = exp_lcm(basis[i].leading_exponents(), basis[j].leading_exponents());
        pr.sugar = exp_total_degree(pr.lcm);
        return pr;
    };

    std::deque<Pair> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.push_back(make_pair(i, j));

    std::size_t work = 0;
    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            return ExpLexGreater{}(b.lcm, a.lcm);
        });
        Pair pr = *best;
        pairs.erase(best);

        const Exponents& li = basis[pr.i].leading_exponents();
        const Exponents& lj = basis[pr.j].leading_exponents();
        // Coprime leads: S-polynomial reduces to zero.
        if (pr.lcm == exp_add(li, lj)) continue;
        // Chain criterion: some other basis lead divides the lcm and both
        // companion pairs were already handled (not queued anymore).
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!exp_divides(basis[k].leading_exponents(), pr.lcm)) continue;
            bool pending = false;
            for (const auto& other : pairs) {
                if ((other.i == std::min(pr.i, k) && other.j == std::max(pr.i, k)) ||
                    (other.i == std::min(pr.j, k) && other.j == std::max(pr.j, k))) {
                    pending = true;
                    break;
                }
            }
            if (!pending) chained = true;
        }
        if (chained) continue;

        RationalPoly s = detail::s_polynomial(basis[pr.i], basis[pr.j]);
        RationalPoly r = detail::reduce_full(std::move(s), basis, work, options.term_budget);
        if (r.is_zero()) continue;
        r = r.primitive();
        basis.push_back(r);
        const std::size_t idx = basis.size() - 1;
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.push_back(make_pair(k, idx));
    }

    // Minimalize: drop generators whose lead is divisible by another lead.
    std::vector<RationalPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!exp_divides(basis[j].leading_exponents(), basis[i].leading_exponents())) continue;
            if (basis[j].leading_exponents() == basis[i].leading_exponents() && j > i) continue;
            redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Inter-reduce to the reduced basis.
    std::vector<RationalPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<RationalPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        std::size_t local_work = 0;
        RationalPoly r = detail::reduce_full(minimal[i], others, local_work, options.term_budget);
        if (!r.is_zero()) reduced.push_back(r.primitive());
    }
    std::sort(reduced.begin(), reduced.end(), [](const RationalPoly& a, const RationalPoly& b) {
        return ExpLexGreater{}(b.leading_exponents(), a.leading_exponents());
    });
    return reduced;
}

/// True when every S-polynomial of the set reduces to zero modulo the set.
inline bool is_groebner_basis(const std::vector<RationalPoly>& basis,
                              const std::vector<std::string>& order,
                              std::size_t budget = 1u << 22) {
    std::vector<RationalPoly> aligned;
    for (const auto& p : basis)
        if (!p.is_zero()) aligned.push_back(p.aligned_to(order));
    for (std::size_t i = 0; i < aligned.size(); ++i)
        for (std::size_t j = i + 1; j < aligned.size(); ++j) {
            std::size_t work = 0;
            RationalPoly r = detail::reduce_full(detail::s_polynomial(aligned[i], aligned[j]),
                                                 aligned, work, budget);
            if (!r.is_zero()) return false;
        }
    return true;
}

/// Members of the basis free of the first `n_eliminated` order variables:
/// the elimination ideal generators.
inline std::vector<RationalPoly> elimination_ideal(const std::vector<RationalPoly>& basis,
                                                   const std::vector<std::string>& order,
                                                   std::size_t n_eliminated) {
    std::vector<RationalPoly> out;
    for (const auto& p : basis) {
        bool free = true;
        for (std::size_t k = 0; k < n_eliminated && free; ++k)
            if (p.degree(order[k]) > 0) free = false;
        if (free) out.push_back(p);
    }
    return out;
}

}  // namespace bifurcat

#endif
