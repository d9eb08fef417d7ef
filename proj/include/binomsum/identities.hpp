#pragma once

#include <algorithm>
#include <vector>

#include "binomial.hpp"
#include "errors.hpp"
#include "poly_certify.hpp"
#include "rat.hpp"

namespace binomsum {

// Double sums here are evaluated by direct nested summation, term by term,
// with no rearrangement: the direct sum is the oracle the closed forms are
// checked against, and its simplicity is its correctness argument.

namespace detail {

inline void require_alpha(const Rat& alpha) {
    if (alpha.is_zero() || alpha == Rat(-1))
        throw domain_error("alpha = " + alpha.str() + " outside domain (must not be 0 or -1)");
}

inline void require_nonneg(long v, const char* name) {
    if (v < 0)
        throw domain_error(std::string(name) + " must be >= 0");
}

inline void require_positive(long v, const char* name) {
    if (v < 1)
        throw domain_error(std::string(name) + " must be >= 1");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Theorem 1 family: the (m, n, alpha) double sum and its closed form.
// ---------------------------------------------------------------------------

inline Rat lhs_theorem1(long m, long n, const Rat& alpha) {
    detail::require_nonneg(m, "m");
    detail::require_nonneg(n, "n");
    detail::require_alpha(alpha);
    const Rat ai = alpha.inv();
    const Rat tx = (Rat(1) + alpha) * m;  // (1+alpha) m
    const Rat ty = (Rat(1) + ai) * n;     // (1+1/alpha) n
    Rat sum = 0;
    for (long a = 1; a <= m; ++a)
        for (long b = 1; b <= n; ++b)
            sum += binomial_gen(tx + Rat(b - a - 1), m - a) *
                   binomial_gen(ty + Rat(a - b - 1), n - b);
    return sum;
}

inline Rat rhs_theorem1(long m, long n, const Rat& alpha) {
    detail::require_nonneg(m, "m");
    detail::require_nonneg(n, "n");
    detail::require_alpha(alpha);
    if (m == 0 && n == 0)
        throw degenerate_error("rhs_theorem1: 0/0 at m = n = 0");
    const Rat ai = alpha.inv();
    const Rat denom = (Rat(1) + alpha) * (Rat(m) + ai * n);
    if (denom.is_zero())
        throw degenerate_error("rhs_theorem1: m + n/alpha vanishes");
    return Rat(m) * n / denom * binomial_gen((Rat(1) + alpha) * m, m) *
           binomial_gen((Rat(1) + ai) * n, n);
}

/// Single-sum form the generating function reduces Theorem 1 to:
/// sum_k k C((1+a)m, m-k) C((1+1/a)n, n-k) over k = 0..min(m,n).
inline Rat single_sum_k(long m, long n, const Rat& alpha) {
    detail::require_nonneg(m, "m");
    detail::require_nonneg(n, "n");
    detail::require_alpha(alpha);
    const Rat ai = alpha.inv();
    const Rat tx = (Rat(1) + alpha) * m;
    const Rat ty = (Rat(1) + ai) * n;
    Rat sum = 0;
    for (long k = 0; k <= std::min(m, n); ++k)
        sum += Rat(k) * binomial_gen(tx, m - k) * binomial_gen(ty, n - k);
    return sum;
}

namespace detail {

// The antidifference s(k) of the telescoping proof.
inline Rat telescope_s(long m, long n, const Rat& alpha, long k) {
    const Rat ai = alpha.inv();
    const Rat denom = (Rat(1) + alpha) * (Rat(m) + ai * n);
    return (Rat(m) + ai * k) * (Rat(n) + alpha * k) / denom *
           binomial_gen((Rat(1) + alpha) * m, m - k) *
           binomial_gen((Rat(1) + ai) * n, n - k);
}

} // namespace detail

/// Checks one step of the telescoping proof:
/// k C((1+a)m, m-k) C((1+1/a)n, n-k) == s(k) - s(k+1).
inline bool telescope_certificate(long m, long n, const Rat& alpha, long k) {
    detail::require_nonneg(m, "m");
    detail::require_nonneg(n, "n");
    detail::require_alpha(alpha);
    if (k < 0 || k > std::min(m, n))
        throw domain_error("telescope_certificate: k outside [0, min(m,n)]");
    const Rat ai = alpha.inv();
    if (((Rat(1) + alpha) * (Rat(m) + ai * n)).is_zero())
        throw degenerate_error("telescope_certificate: m + n/alpha vanishes");
    const Rat summand = Rat(k) * binomial_gen((Rat(1) + alpha) * m, m - k) *
                        binomial_gen((Rat(1) + ai) * n, n - k);
    return summand == detail::telescope_s(m, n, alpha, k) - detail::telescope_s(m, n, alpha, k + 1);
}

// ---------------------------------------------------------------------------
// Theorem 2 family: two double sums against the weighted diagonal k-sum.
// ---------------------------------------------------------------------------

inline Rat lhs_theorem2(long m, long n, long r, const Rat& alpha) {
    detail::require_nonneg(m, "m");
    detail::require_nonneg(n, "n");
    detail::require_nonneg(r, "r");
    detail::require_alpha(alpha);
    const Rat ai = alpha.inv();
    const Rat tx = (Rat(1) + alpha) * m;
    const Rat ty = (Rat(1) + ai) * n;
    Rat sum = 0;
    for (long a = 0; a <= m - r - 2; ++a)
        for (long b = 0; b <= n - r - 2; ++b)
            sum += binomial_gen(tx + Rat(b - a - 1), m - r - 2 - a) *
                   binomial_gen(ty + Rat(a - b - 1), n - r - 2 - b);
    for (long a = 0; a <= m + r; ++a)
        for (long b = 0; b <= n + r; ++b)
            sum += binomial_gen(tx + Rat(b - a - 1), m + r - a) *
                   binomial_gen(ty + Rat(a - b - 1), n + r - b);
    return sum;
}

inline Rat rhs_theorem2(long m, long n, long r, const Rat& alpha) {
    detail::require_nonneg(m, "m");
    detail::require_nonneg(n, "n");
    detail::require_nonneg(r, "r");
    detail::require_alpha(alpha);
    const Rat ai = alpha.inv();
    const Rat tx = (Rat(1) + alpha) * m;
    const Rat ty = (Rat(1) + ai) * n;
    Rat sum = 0;
    if (m != 0 && n != 0) {
        const Rat denom = (Rat(1) + alpha) * (Rat(m) + ai * n);
        if (denom.is_zero())
            throw degenerate_error("rhs_theorem2: m + n/alpha vanishes");
        sum = Rat(2) * m * n / denom * binomial_gen(tx, m) * binomial_gen(ty, n);
    }
    for (long k = -r; k <= r; ++k)
        sum += Rat(r - std::abs(k) + 1) * binomial_gen(tx, m - k) * binomial_gen(ty, n - k);
    return sum;
}

// ---------------------------------------------------------------------------
// The two seed identities.
// ---------------------------------------------------------------------------

inline Rat lhs_s3(long m, long n) {
    Rat sum = 0;
    for (long a = 1; a <= m; ++a)
        for (long b = 1; b <= n; ++b)
            sum += binomial_gen(Rat(m + n - a + b - 1), m - a) *
                   binomial_gen(Rat(m + n + a - b - 1), n - b);
    return sum;
}

inline Rat rhs_s3(long m, long n) {
    if (m + n == 0)
        throw degenerate_error("rhs_s3: 0/0 at m = n = 0");
    const Rat c = binomial_gen(Rat(m + n), m);
    return Rat(m) * n / Rat(2 * (m + n)) * c * c;
}

inline Rat lhs_s4(long m, long n) {
    Rat sum = 0;
    for (long a = 1; a <= m - 2; ++a)
        for (long b = 1; b <= n - 2; ++b)
            sum += binomial_gen(Rat(m + n + a - b - 1), m + a + 1) *
                   binomial_gen(Rat(m + n - a + b - 1), n + b + 1);
    return sum;
}

inline Rat rhs_s4(long m, long n) {
    if (m + n == 0)
        throw degenerate_error("rhs_s4: 0/0 at m = n = 0");
    const Rat c = binomial_gen(Rat(m + n), m);
    return c * c + binomial_gen(Rat(m + n), m - 1) * binomial_gen(Rat(m + n), n - 1) +
           Rat(m) * n / Rat(2 * (m + n)) * c * c - binomial_gen(Rat(2 * m + 2 * n), 2 * n);
}

// ---------------------------------------------------------------------------
// Consequences of Theorem 1 (p, q substitutions and the x family).
// ---------------------------------------------------------------------------

inline Rat lhs_cor1(long p, long q, long m, long n) {
    Rat sum = 0;
    for (long a = 1; a <= p * m; ++a)
        for (long b = 1; b <= q * n; ++b)
            sum += binomial_gen(Rat(p * m + q * m - a + b - 1), p * m - a) *
                   binomial_gen(Rat(p * n + q * n + a - b - 1), q * n - b);
    return sum;
}

inline Rat rhs_cor1(long p, long q, long m, long n) {
    return Rat(p * q * m * n) / Rat((p + q) * (m + n)) *
           binomial_gen(Rat(p * m + q * m), p * m) * binomial_gen(Rat(p * n + q * n), p * n);
}

// Corollary 1 with (p, m) and (q, n) exchanged.
inline Rat lhs_cor1_exchanged(long p, long q, long m, long n) {
    Rat sum = 0;
    for (long a = 1; a <= p * m; ++a)
        for (long b = 1; b <= q * n; ++b)
            sum += binomial_gen(Rat(p * m + q * m - a + b - 1), b - 1) *
                   binomial_gen(Rat(p * n + q * n + a - b - 1), a - 1);
    return sum;
}

inline Rat rhs_cor1_exchanged(long p, long q, long m, long n) {
    return Rat(p * q * m * n) / Rat((p + q) * (m + n)) *
           binomial_gen(Rat(p * m + p * n), p * m) * binomial_gen(Rat(q * m + q * n), q * m);
}

// Extending a over [1-pn, pm] closes the inner Vandermonde convolution.
inline Rat lhs_cv_full(long p, long q, long m, long n) {
    Rat sum = 0;
    for (long a = 1 - p * n; a <= p * m; ++a)
        for (long b = 1; b <= q * n; ++b)
            sum += binomial_gen(Rat(p * m + q * m - a + b - 1), p * m - a) *
                   binomial_gen(Rat(p * n + q * n + a - b - 1), q * n - b);
    return sum;
}

inline Rat rhs_cv_full(long p, long q, long m, long n) {
    return Rat(p * q * n) / Rat(p + q) * binomial_gen(Rat((p + q) * (m + n)), p * m + p * n);
}

// The a in [1-pn, 0] band of the extended sum, rewritten with a -> 1-a.
inline Rat lhs_cv_tail(long p, long q, long m, long n) {
    Rat sum = 0;
    for (long a = 1; a <= p * n; ++a)
        for (long b = 1; b <= q * n; ++b)
            sum += binomial_gen(Rat(p * m + q * m + a + b - 2), p * m + a - 1) *
                   binomial_gen(Rat(p * n + q * n - a - b), q * n - b);
    return sum;
}

inline Rat rhs_cv_tail(long p, long q, long m, long n) {
    return rhs_cv_full(p, q, m, n) - rhs_cor1(p, q, m, n);
}

// The free-parameter corollary (p,q,m,n -> m,n,x,1 in Corollary 1).
inline Rat lhs_cor2(long m, long n, const Rat& x) {
    Rat sum = 0;
    for (long a = 1; a <= m; ++a)
        for (long b = 1; b <= n; ++b) {
            const Rat pa = pochhammer(Rat(m) * x + 1, a - 1);
            const Rat pb = pochhammer(Rat(n) * x + 1, b - 1);
            if (pa.is_zero() || pb.is_zero())
                throw domain_error("lhs_cor2: Pochhammer denominator vanishes at x = " + x.str());
            sum += pochhammer(Rat(m + n) * x + 1, a + b - 2) / (pa * pb) *
                   binomial_gen(Rat(m + n - a - b), m - a);
        }
    return sum;
}

inline Rat rhs_cor2(long m, long n, const Rat& x) {
    const Rat pm = pochhammer(Rat(m) * x + 1, m);
    const Rat pn = pochhammer(Rat(n) * x + 1, n);
    if (pm.is_zero() || pn.is_zero() || x == Rat(-1))
        throw domain_error("rhs_cor2: denominator vanishes at x = " + x.str());
    return Rat(m) * n * pochhammer(Rat(m + n) * x + 1, m + n) / (Rat(m + n) * pm * pn) -
           Rat(m) * n * x / (Rat(m + n) * (Rat(1) + x)) * binomial_gen(Rat(m + n), m);
}

// The x -> infinity limit of the previous corollary.
inline Rat lhs_cor3(long m, long n) {
    Rat sum = 0;
    for (long a = 1; a <= m; ++a)
        for (long b = 1; b <= n; ++b)
            sum += binomial_gen(Rat(m + n - a - b), m - a) * pow(Rat(m + n), a + b - 2) /
                   (pow(Rat(m), a - 1) * pow(Rat(n), b - 1));
    return sum;
}

inline Rat rhs_cor3(long m, long n) {
    return pow(Rat(m + n), m + n - 1) / (pow(Rat(m), m - 1) * pow(Rat(n), n - 1)) -
           Rat(m) * n / Rat(m + n) * binomial_gen(Rat(m + n), m);
}

// ---------------------------------------------------------------------------
// Consequences of Theorem 2 (the r family).
// ---------------------------------------------------------------------------

// Theorem 2 under alpha -> q/p, m -> pm, n -> qn, first sum reindexed from 1.
inline Rat lhs_cor4(long p, long q, long m, long n, long r) {
    Rat sum = 0;
    for (long a = 1; a <= p * m - r - 1; ++a)
        for (long b = 1; b <= q * n - r - 1; ++b)
            sum += binomial_gen(Rat(p * m + q * m - a + b - 1), p * m - r - 1 - a) *
                   binomial_gen(Rat(p * n + q * n + a - b - 1), q * n - r - 1 - b);
    for (long a = 0; a <= p * m + r; ++a)
        for (long b = 0; b <= q * n + r; ++b)
            sum += binomial_gen(Rat(p * m + q * m - a + b - 1), p * m + r - a) *
                   binomial_gen(Rat(p * n + q * n + a - b - 1), q * n + r - b);
    return sum;
}

inline Rat rhs_cor4(long p, long q, long m, long n, long r) {
    Rat sum = 0;
    if (m != 0 && n != 0)
        sum = Rat(2 * p * q * m * n) / Rat((p + q) * (m + n)) *
              binomial_gen(Rat(p * m + q * m), p * m) * binomial_gen(Rat(p * n + q * n), p * n);
    for (long k = -r; k <= r; ++k)
        sum += Rat(r - std::abs(k) + 1) * binomial_gen(Rat(p * m + q * m), p * m - k) *
               binomial_gen(Rat(p * n + q * n), q * n - k);
    return sum;
}

namespace detail {

inline Rat pm_r_summand(long p, long q, long m, long n, long r, long a, long b) {
    return binomial_gen(Rat(p * m + q * m + a - b - 1), p * m + r + a) *
           binomial_gen(Rat(p * n + q * n - a + b - 1), q * n + r + b);
}

} // namespace detail

// lhs_cor4 with the second double sum reflected to a, b <= 0.
inline Rat lhs_pm_r1(long p, long q, long m, long n, long r) {
    Rat sum = 0;
    for (long a = 1; a <= p * m - r - 1; ++a)
        for (long b = 1; b <= q * n - r - 1; ++b)
            sum += binomial_gen(Rat(p * m + q * m - a + b - 1), p * m - r - 1 - a) *
                   binomial_gen(Rat(p * n + q * n + a - b - 1), q * n - r - 1 - b);
    for (long a = -p * m - r; a <= 0; ++a)
        for (long b = -q * n - r; b <= 0; ++b)
            sum += detail::pm_r_summand(p, q, m, n, r, a, b);
    return sum;
}

inline Rat rhs_pm_r1(long p, long q, long m, long n, long r) {
    return rhs_cor4(p, q, m, n, r);
}

// First Chu-Vandermonde range split. Valid for r <= pn-1 and r <= qm-1
// (beyond that the convolution range sheds nonvanishing terms).
inline Rat lhs_pm_r2(long p, long q, long m, long n, long r) {
    Rat sum = 0;
    for (long a = -p * m - r; a <= 0; ++a)
        for (long b = 1; b <= q * m - r - 1; ++b)
            sum += detail::pm_r_summand(p, q, m, n, r, a, b);
    for (long a = -p * m - r; a <= 0; ++a)
        for (long b = -q * n - r; b <= 0; ++b)
            sum += detail::pm_r_summand(p, q, m, n, r, a, b);
    return sum;
}

inline Rat rhs_pm_r2(long p, long q, long m, long n, long r) {
    return Rat((p * m + r + 1) * q) / Rat(p + q) *
           binomial_gen(Rat((p + q) * (m + n)), p * m + p * n);
}

// Second Chu-Vandermonde range split. Valid for r <= qm-1.
inline Rat lhs_pm_r3(long p, long q, long m, long n, long r) {
    Rat sum = 0;
    for (long a = -p * m - r; a <= 0; ++a)
        for (long b = 1; b <= q * m - r - 1; ++b)
            sum += detail::pm_r_summand(p, q, m, n, r, a, b);
    for (long a = 1; a <= p * n - r - 1; ++a)
        for (long b = 1; b <= q * m - r - 1; ++b)
            sum += detail::pm_r_summand(p, q, m, n, r, a, b);
    return sum;
}

inline Rat rhs_pm_r3(long p, long q, long m, long n, long r) {
    return Rat((q * m - r - 1) * p) / Rat(p + q) *
           binomial_gen(Rat((p + q) * (m + n)), p * m + p * n);
}

// Combination of the three previous displays with r+1 -> r.
inline Rat lhs_cor5(long p, long q, long m, long n, long r) {
    Rat sum = 0;
    for (long a = 1; a <= p * m - r; ++a)
        for (long b = 1; b <= q * n - r; ++b)
            sum += binomial_gen(Rat(p * m + q * m - a + b - 1), p * m - r - a) *
                   binomial_gen(Rat(p * n + q * n + a - b - 1), q * n - r - b);
    for (long a = 1; a <= p * n - r; ++a)
        for (long b = 1; b <= q * m - r; ++b)
            sum += binomial_gen(Rat(p * n + q * n - a + b - 1), p * n - r - a) *
                   binomial_gen(Rat(p * m + q * m + a - b - 1), q * m - r - b);
    return sum;
}

inline Rat rhs_cor5(long p, long q, long m, long n, long r) {
    Rat sum = Rat(2 * p * q * m * n) / Rat((p + q) * (m + n)) *
                  binomial_gen(Rat(p * m + q * m), p * m) *
                  binomial_gen(Rat(p * n + q * n), p * n) -
              Rat(r) * binomial_gen(Rat((p + q) * (m + n)), p * m + p * n);
    for (long k = 1 - r; k <= r - 1; ++k)
        sum += Rat(r - std::abs(k)) * binomial_gen(Rat(p * m + q * m), p * m - k) *
               binomial_gen(Rat(p * n + q * n), q * n - k);
    return sum;
}

// p = q = 1 case of the previous corollary.
inline Rat lhs_cor6(long m, long n, long r) {
    Rat sum = 0;
    for (long a = 1; a <= m - r; ++a)
        for (long b = 1; b <= n - r; ++b)
            sum += binomial_gen(Rat(2 * m - a + b - 1), m - r - a) *
                   binomial_gen(Rat(2 * n + a - b - 1), n - r - b);
    return sum;
}

inline Rat rhs_cor6(long m, long n, long r) {
    const Rat cm = binomial_gen(Rat(2 * m), m);
    const Rat cn = binomial_gen(Rat(2 * n), n);
    Rat sum = Rat(m) * n / Rat(2 * (m + n)) * cm * cn -
              Rat(r, 2) * binomial_gen(Rat(2 * m + 2 * n), m + n) + Rat(r, 2) * cm * cn;
    for (long k = 1; k <= r - 1; ++k)
        sum += Rat(r - k) * binomial_gen(Rat(2 * m), m - k) * binomial_gen(Rat(2 * n), n - k);
    return sum;
}

// m = n = 1 case, with the symmetric binomials collapsing to tops m+n.
inline Rat lhs_cor7(long m, long n, long r) {
    Rat sum = 0;
    for (long a = 1; a <= m - r; ++a)
        for (long b = 1; b <= n - r; ++b)
            sum += binomial_gen(Rat(m + n - a + b - 1), m - r - a) *
                   binomial_gen(Rat(m + n + a - b - 1), n - r - b);
    return sum;
}

inline Rat rhs_cor7(long m, long n, long r) {
    const Rat c = binomial_gen(Rat(m + n), m);
    Rat sum = Rat(m) * n / Rat(2 * (m + n)) * c * c -
              Rat(r, 2) * binomial_gen(Rat(2 * m + 2 * n), 2 * m) + Rat(r, 2) * c * c;
    for (long k = 1; k <= r - 1; ++k)
        sum += Rat(r - k) * binomial_gen(Rat(m + n), m - k) * binomial_gen(Rat(m + n), n - k);
    return sum;
}

// The three r = 1 / r = 2 specializations displayed with their own closed
// forms (the fourth one is the S4 identity itself).
inline Rat rhs_cor6_r2(long m, long n) {
    const Rat cm = binomial_gen(Rat(2 * m), m);
    const Rat cn = binomial_gen(Rat(2 * n), n);
    return cm * cn + binomial_gen(Rat(2 * m), m - 1) * binomial_gen(Rat(2 * n), n - 1) +
           Rat(m) * n / Rat(2 * (m + n)) * cm * cn - binomial_gen(Rat(2 * m + 2 * n), m + n);
}

inline Rat rhs_cor6_r1(long m, long n) {
    const Rat cc = binomial_gen(Rat(2 * m), m) * binomial_gen(Rat(2 * n), n);
    return Rat(1, 2) * cc + Rat(m) * n / Rat(2 * (m + n)) * cc -
           Rat(1, 2) * binomial_gen(Rat(2 * m + 2 * n), m + n);
}

inline Rat rhs_cor7_r1(long m, long n) {
    const Rat c = binomial_gen(Rat(m + n), m);
    return Rat(1, 2) * c * c + Rat(m) * n / Rat(2 * (m + n)) * c * c -
           Rat(1, 2) * binomial_gen(Rat(2 * m + 2 * n), 2 * m);
}

// ---------------------------------------------------------------------------
// Theorem 3: the x-parameter identity, polynomial in x.
// ---------------------------------------------------------------------------

inline Rat lhs_theorem3(long m, long n, const Rat& x) {
    detail::require_positive(m, "m");
    detail::require_positive(n, "n");
    Rat sum = 0;
    for (long a = 1; a <= m; ++a)
        for (long b = 1; b <= n; ++b)
            sum += binomial_gen(x + Rat(m - a + b - 1), n + b - 1) *
                   binomial_gen(x + Rat(a - b - 1), n - b);
    return sum;
}

inline Rat rhs_theorem3(long m, long n, const Rat& x) {
    detail::require_positive(m, "m");
    detail::require_positive(n, "n");
    const Rat d = Rat(2) * x + m;
    if (d.is_zero())
        throw degenerate_error("rhs_theorem3: 2x + m vanishes");
    return Rat(m) * n / d * binomial_gen(d, 2 * n);
}

/**
 * Certifies Theorem 3 as a polynomial identity in x: both sides are
 * polynomials of degree <= 2n (the right side after dividing C(2x+m, 2n)
 * by 2x+m, which divides exactly since the product carries the factor),
 * so agreement at 2n+1 distinct points proves the identity for all x.
 */
inline bool theorem3_certify(long m, long n) {
    detail::require_positive(m, "m");
    detail::require_positive(n, "n");
    std::vector<Rat> pts;
    for (long j = 1; j <= 2 * n + 1; ++j)
        pts.push_back(Rat(j));  // positive points keep 2x + m nonzero
    return certify_poly_identity(
        2 * n, [&](const Rat& x) { return lhs_theorem3(m, n, x); },
        [&](const Rat& x) { return rhs_theorem3(m, n, x); }, pts);
}

namespace detail {

inline Rat doub_xab_half(long m, long n, const Rat& x) {
    Rat sum = 0;
    for (long a = 1; a <= m; ++a)
        for (long b = 1; b <= n; ++b)
            sum += binomial_gen(x + Rat(a - 1), n + b - 1) * binomial_gen(x + Rat(m - a), n - b);
    return sum;
}

} // namespace detail

inline Rat lhs_doub_xab(long m, long n, const Rat& x) {
    detail::require_positive(m, "m");
    detail::require_positive(n, "n");
    return Rat(2) * detail::doub_xab_half(m, n, x);
}

inline Rat rhs_doub_xab(long m, long n, const Rat& x) {
    detail::require_positive(m, "m");
    detail::require_positive(n, "n");
    return Rat(m) * binomial_gen(Rat(2) * x + Rat(m - 1), 2 * n - 1);
}

/**
 * Checks the three steps of the reflected form of Theorem 3:
 *  (i)   2 sum_{a,b >= 1} C(x+a-1, n+b-1) C(x+m-a, n-b) = m C(2x+m-1, 2n-1);
 *  (ii)  the b in [1, n] and b in [1-n, 0] half ranges agree under the
 *        reflection a -> m+1-a, b -> 1-b;
 *  (iii) the full b in [1-n, n] range sums to m C(2x+m-1, 2n-1) by the
 *        Chu-Vandermonde convolution.
 */
inline bool doub_xab_check(long m, long n, const Rat& x) {
    detail::require_positive(m, "m");
    detail::require_positive(n, "n");
    const Rat half = detail::doub_xab_half(m, n, x);
    const bool eq_i = Rat(2) * half == rhs_doub_xab(m, n, x);

    Rat reflected = 0;
    for (long a = 1; a <= m; ++a)
        for (long b = 1 - n; b <= 0; ++b)
            reflected += binomial_gen(x + Rat(m - a), n - b) * binomial_gen(x + Rat(a - 1), n + b - 1);
    const bool eq_ii = half == reflected;

    Rat full = 0;
    for (long a = 1; a <= m; ++a)
        for (long b = 1 - n; b <= n; ++b)
            full += binomial_gen(x + Rat(a - 1), n + b - 1) * binomial_gen(x + Rat(m - a), n - b);
    const bool eq_iii = full == Rat(m) * binomial_gen(Rat(2) * x + Rat(m - 1), 2 * n - 1);

    return eq_i && eq_ii && eq_iii;
}

/**
 * Certifies Theorem 1 in the free parameter: alpha^(n-1) times either side
 * is a polynomial in alpha of degree <= m+n-2, so agreement at m+n-1
 * distinct points extends the identity from the sampled alphas to every
 * nonzero alpha.
 */
inline bool theorem1_alpha_certify(long m, long n) {
    detail::require_positive(m, "m");
    detail::require_positive(n, "n");
    std::vector<Rat> pts;
    for (long j = 1; j <= m + n - 1; ++j)
        pts.push_back(Rat(j));
    return certify_poly_identity(
        m + n - 2, [&](const Rat& a) { return pow(a, n - 1) * lhs_theorem1(m, n, a); },
        [&](const Rat& a) { return pow(a, n - 1) * rhs_theorem1(m, n, a); }, pts);
}

} // namespace binomsum
