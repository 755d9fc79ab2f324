#ifndef BIFURCAT_RESULTANT_HPP
#define BIFURCAT_RESULTANT_HPP

#include <stdexcept>
#include <vector>

#include "bifurcat/polynomial.hpp"

namespace bifurcat {

/// Determinant of a square matrix of polynomials by Bareiss fraction-free
/// elimination; every division is exact in the polynomial ring.
inline RationalPoly poly_determinant(std::vector<std::vector<RationalPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return RationalPoly(Rational(1));
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("poly_determinant: matrix not square");

    int sign = 1;
    RationalPoly prev(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return RationalPoly();  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                RationalPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = exact_divide(num, prev);
            }
            m[i][k] = RationalPoly();
        }
        prev = m[k][k];
    }
    RationalPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

/// Sylvester resultant of p and q with respect to `eliminate`.
///
/// Convention: the matrix has deg(q) rows of p's coefficients on top, then
/// deg(p) rows of q's, highest power leftmost; the determinant is
/// sign-adjusted by (-1)^(deg p * deg q) so that the resultant of p against
/// a monic linear q = x - a equals p(a) for every p.  The result vanishes
/// exactly when p and q share a root in the eliminated variable over the
/// algebraic closure, and is a polynomial in the remaining variables.
inline RationalPoly sylvester_resultant(const RationalPoly& p, const RationalPoly& q,
                                        const std::string& eliminate) {
    const unsigned dp = p.degree(eliminate);
    const unsigned dq = q.degree(eliminate);
    if (dp == 0 || dq == 0)
        throw std::invalid_argument("sylvester_resultant: nothing to eliminate in '" + eliminate + "'");

    auto u = RationalPoly::merged_universe(p, q);
    auto pc = p.aligned_to(u).coefficients_in(eliminate);  // pc[k] multiplies x^k
    auto qc = q.aligned_to(u).coefficients_in(eliminate);

    const std::size_t n = dp + dq;
    std::vector<std::vector<RationalPoly>> m(n, std::vector<RationalPoly>(n, RationalPoly(Rational(0), u)));
    for (std::size_t r = 0; r < dq; ++r)
        for (std::size_t k = 0; k <= dp; ++k) m[r][r + dp - k] = pc[k];
    for (std::size_t r = 0; r < dp; ++r)
        for (std::size_t k = 0; k <= dq; ++k) m[dq + r][r + dq - k] = qc[k];
    RationalPoly det = poly_determinant(std::move(m));
    return (static_cast<std::size_t>(dp) * dq) % 2 == 1 ? -det : det;
}

}  // namespace bifurcat

#endif
