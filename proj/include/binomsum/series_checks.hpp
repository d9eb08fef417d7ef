#pragma once

#include <cstdlib>

#include "binomial.hpp"
#include "bipoly.hpp"
#include "biseries.hpp"
#include "errors.hpp"
#include "identities.hpp"
#include "laurent.hpp"
#include "rat.hpp"

namespace binomsum {

/**
 * Compositional inverse for the substitution family x = t/(1+t)^expo:
 * returns t(x) with t(0) = 0, t'(0) = 1, satisfying t = x (1+t)^expo
 * modulo x^(N+1). Plain fixed-point iteration on t -> x (1+t)^expo; each
 * pass fixes one more coefficient, so N passes suffice. The Lagrange
 * closed forms are used as checks elsewhere, never as the construction.
 */
inline LaurentSeries revert_series(const Rat& expo, long n) {
    if (n < 1)
        throw domain_error("revert_series: order must be >= 1");
    LaurentSeries t = LaurentSeries::zero(n);
    for (long pass = 0; pass < n; ++pass)
        t = binomial_power(t, expo).shifted(1).truncated(n);
    return t;
}

/// u(x) - 1 for the substitution x = (u-1)/u^(1+alpha).
inline LaurentSeries revert_u(const Rat& alpha, long n) {
    if (alpha.is_zero())
        throw domain_error("revert_u: alpha must be nonzero");
    return revert_series(Rat(1) + alpha, n);
}

namespace detail {

// u/(1+alpha-alpha u) = (1+t)/(1-alpha t) built from a precomputed t.
inline LaurentSeries central_series_from(const LaurentSeries& t, const Rat& alpha) {
    const long n = t.trunc_order();
    const LaurentSeries one = LaurentSeries::constant(Rat(1), n);
    return ((one + t) * (one - alpha * t).inverse()).truncated(n);
}

} // namespace detail

/// The series sum_m C((1+alpha)m, m) x^m == u/(1+alpha-alpha u).
inline LaurentSeries central_binomial_series(const Rat& alpha, long n) {
    if (alpha.is_zero())
        throw domain_error("central_binomial_series: alpha must be nonzero");
    return detail::central_series_from(revert_u(alpha, n), alpha);
}

/// u/(1+alpha-alpha u) * (u-1)^k, whose coefficient of x^m is
/// C((1+alpha)m, m-k); Laurent with principal depth |k| for k < 0.
inline LaurentSeries shifted_binomial_series(const Rat& alpha, long k, long n) {
    const LaurentSeries t = revert_u(alpha, n + std::labs(k) + 2);
    return detail::central_series_from(t, alpha) * t.pow(k);
}

/**
 * Checks the classical coefficient formula
 *   sum_n C(aa + beta n, n) w^n = z^(aa+1) / ((1-beta) z + beta),
 *   w = (z-1)/z^beta,
 * for n = 0..N, constructing z(w) by reversion.
 */
inline bool classical_gf_check(const Rat& aa, const Rat& beta, long n) {
    if (beta.is_zero())
        throw domain_error("classical_gf_check: beta must be nonzero");
    if (n < 1)
        throw domain_error("classical_gf_check: order must be >= 1");
    const LaurentSeries s = revert_series(beta, n);  // z - 1
    const LaurentSeries num = binomial_power(s, aa + 1);
    const LaurentSeries one = LaurentSeries::constant(Rat(1), n);
    const LaurentSeries den = one + (Rat(1) - beta) * s;
    const LaurentSeries ratio = (num * den.inverse()).truncated(n);
    for (long j = 0; j <= n; ++j)
        if (ratio.coeff(j) != binomial_gen(aa + beta * j, j))
            return false;
    return true;
}

enum class KernelPath {
    division,   // (u-1)(v-1) / (uv-u-v)^2 by series division
    geometric,  // sum_k k w^k with w = (u-1)(v-1), since uv-u-v = w-1
};

namespace detail {

inline BiSeries coupling_kernel(const LaurentSeries& tx, const LaurentSeries& ty,
                                KernelPath path) {
    const long wx = tx.trunc_order();
    const long wy = ty.trunc_order();
    const BiSeries w = BiSeries::from_x(tx, wy) * BiSeries::from_y(ty, wx);
    if (path == KernelPath::division) {
        const BiSeries k = w - BiSeries::constant(Rat(1), w.trunc_x(), w.trunc_y());
        return w * (k * k).inverse();
    }
    BiSeries acc = w;
    BiSeries p = w;
    const long kmax = std::min(w.trunc_x(), w.trunc_y());
    for (long k = 2; k <= kmax; ++k) {
        p = (p * w).truncated(w.trunc_x(), w.trunc_y());
        if (p.is_zero_grid())
            break;
        acc = acc + Rat(k) * p;
    }
    return acc;
}

struct Theorem1Kernel {
    LaurentSeries tx;
    LaurentSeries ty;
    LaurentSeries a_series;  // u/(1+alpha-alpha u)
    LaurentSeries b_series;  // v/(1+1/alpha-(1/alpha) v)

    Theorem1Kernel(const Rat& alpha, long order)
        : tx(revert_u(alpha, order)),
          ty(revert_u(alpha.inv(), order)),
          a_series(central_series_from(tx, alpha)),
          b_series(central_series_from(ty, alpha.inv())) {}
};

} // namespace detail

/**
 * The generating function F(x, y) of the Theorem 1 double sums:
 *   uv (u-1)(v-1) / ((1+a-au)(1+1/a-v/a)(uv-u-v)^2)
 * expanded to order M in both variables. Its (m, n) coefficient equals
 * the Theorem 1 closed form, and vanishes when mn = 0.
 */
inline BiSeries F_closed_form(const Rat& alpha, long m,
                              KernelPath path = KernelPath::division) {
    if (m < 1)
        throw domain_error("F_closed_form: order must be >= 1");
    if (alpha.is_zero() || alpha == Rat(-1))
        throw domain_error("F_closed_form: alpha outside domain");
    const long w = m + 2;
    const detail::Theorem1Kernel k(alpha, w);
    const BiSeries f = BiSeries::from_x(k.a_series, w) * BiSeries::from_y(k.b_series, w) *
                       detail::coupling_kernel(k.tx, k.ty, path);
    return f.truncated(m, m);
}

/**
 * The depth-r kernel uv (u-1)^(-r) (v-1)^(-r) / ((1+a-au)(1+1/a-v/a)(uv-u-v)^2)
 * as a Laurent BiSeries with principal parts of depth r, valid through
 * order M in both variables. Negative powers r may be supplied as
 * -(r+2) <= -2 to produce the companion kernel with (u-1)^(r+2) factors.
 */
inline BiSeries g_r_series(const Rat& alpha, long r, long m) {
    if (alpha.is_zero() || alpha == Rat(-1))
        throw domain_error("g_r_series: alpha outside domain");
    const long depth = std::labs(r);
    const long w = m + 2 * depth + 4;
    const detail::Theorem1Kernel k(alpha, w);
    // The coupling kernel is w/(uv-u-v)^2 with w = (u-1)(v-1), so each side
    // contributes (u-1)^(-r-1) to leave a net (u-1)^(-r).
    const LaurentSeries ux = k.a_series * k.tx.pow(-r - 1);
    const LaurentSeries uy = k.b_series * k.ty.pow(-r - 1);
    const BiSeries g = BiSeries::from_x(ux, w) * BiSeries::from_y(uy, w) *
                       detail::coupling_kernel(k.tx, k.ty, KernelPath::division);
    return g.truncated(m, m);
}

/// Direct double-sum oracle for the (m, n) coefficient of g_r_series;
/// accepts negative r (the G_{-r-2} companion) and negative m, n >= -r.
inline Rat g_r_direct_coeff(const Rat& alpha, long r, long m, long n) {
    const Rat ai = alpha.inv();
    const Rat tx = (Rat(1) + alpha) * m;
    const Rat ty = (Rat(1) + ai) * n;
    Rat sum = 0;
    for (long a = 0; a <= m + r; ++a)
        for (long b = 0; b <= n + r; ++b)
            sum += binomial_gen(tx + Rat(b - a - 1), m + r - a) *
                   binomial_gen(ty + Rat(a - b - 1), n + r - b);
    return sum;
}

/**
 * Verifies the depth-r kernel against the direct double sums for all
 * (m, n) in [-r..M]^2, and likewise the companion kernel with exponent
 * -(r+2) (whose coefficients vanish below m, n = r+2, matching the empty
 * sums).
 */
inline bool g_r_check(const Rat& alpha, long r, long m) {
    if (r < 0)
        throw domain_error("g_r_check: r must be >= 0");
    if (m < r + 1)
        throw domain_error("g_r_check: order must be >= r+1");
    const BiSeries g = g_r_series(alpha, r, m);
    for (long i = -r; i <= m; ++i)
        for (long j = -r; j <= m; ++j)
            if (g.coeff(i, j) != g_r_direct_coeff(alpha, r, i, j))
                return false;
    const BiSeries gm = g_r_series(alpha, -r - 2, m);
    for (long i = -r; i <= m; ++i)
        for (long j = -r; j <= m; ++j)
            if (gm.coeff(i, j) != g_r_direct_coeff(alpha, -r - 2, i, j))
                return false;
    return true;
}

/**
 * The differential identity equivalent to Theorem 1:
 *   ((1+a) x d/dx + (1+1/a) y d/dy) F(x, y)
 *     = x y (d/dx u/(1+a-au)) (d/dy v/(1+1/a-v/a)),
 * checked coefficient-wise through order M. All derivatives are formal,
 * term-by-term operations.
 */
inline bool pde_check(const Rat& alpha, long m) {
    if (m < 2)
        throw domain_error("pde_check: order must be >= 2");
    if (alpha.is_zero() || alpha == Rat(-1))
        throw domain_error("pde_check: alpha outside domain");
    const long w = m + 2;
    const detail::Theorem1Kernel k(alpha, w);
    const BiSeries f = BiSeries::from_x(k.a_series, w) * BiSeries::from_y(k.b_series, w) *
                       detail::coupling_kernel(k.tx, k.ty, KernelPath::division);
    const BiSeries lhs = (Rat(1) + alpha) * f.derivative_x().shifted(1, 0) +
                         (Rat(1) + alpha.inv()) * f.derivative_y().shifted(0, 1);
    const BiSeries rhs = (BiSeries::from_x(k.a_series.derivative(), w) *
                          BiSeries::from_y(k.b_series.derivative(), w))
                             .shifted(1, 1);
    for (long i = 0; i <= m; ++i)
        for (long j = 0; j <= m; ++j)
            if (lhs.coeff(i, j) != rhs.coeff(i, j))
                return false;
    return true;
}

/**
 * The rational-function identity behind Theorem 2,
 *   G_r + G_(-r-2) = 2 F-kernel
 *     + sum_{k=-r}^{r} (r-|k|+1) uv (u-1)^k (v-1)^k / ((1+a-au)(1+1/a-v/a)),
 * cleared of denominators by (u-1)^r (v-1)^r (uv-u-v)^2 and compared as
 * exact polynomials in u and v. The factors uv and (1+a-au)(1+1/a-v/a)
 * are common to every term, so they cancel from the cleared form and the
 * comparison is parameter-free:
 *   1 + w^(2r+2)  ==  2 w^(r+1) + (uv-u-v)^2 sum_k (r-|k|+1) w^(k+r),
 * with w = (u-1)(v-1).
 */
inline bool routine_identity_check(const Rat& alpha, long r) {
    if (r < 0)
        throw domain_error("routine_identity_check: r must be >= 0");
    if (alpha.is_zero() || alpha == Rat(-1))
        throw domain_error("routine_identity_check: alpha outside domain");
    const BiPoly u = BiPoly::u();
    const BiPoly v = BiPoly::v();
    const BiPoly one = BiPoly::constant(Rat(1));
    const BiPoly w = (u - one) * (v - one);
    const BiPoly kernel = u * v - u - v;
    const BiPoly lhs = one + w.pow(2 * r + 2);
    BiPoly ksum;
    for (long k = -r; k <= r; ++k)
        ksum = ksum + Rat(r - std::labs(k) + 1) * w.pow(k + r);
    const BiPoly rhs = Rat(2) * w.pow(r + 1) + kernel * kernel * ksum;
    return lhs == rhs;
}

} // namespace binomsum
