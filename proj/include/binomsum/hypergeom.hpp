#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "errors.hpp"
#include "gamma.hpp"
#include "identities.hpp"
#include "rat.hpp"

namespace binomsum {

/**
 * A terminating hypergeometric series pFq[upper; lower; arg]. At least one
 * upper parameter must be a nonpositive integer; the series stops at the
 * smallest N with -N among the upper parameters. No lower parameter may be
 * an integer in [-(N-1), 0] (that would poison a denominator before the
 * series terminates).
 */
struct HypSpec {
    std::vector<Rat> upper;
    std::vector<Rat> lower;
    Rat arg = Rat(1);
};

/// Index N where the series stops; throws non_terminating if none exists.
inline long termination_index(const HypSpec& spec) {
    std::optional<long> best;
    for (const Rat& u : spec.upper)
        if (u.is_nonpos_integer()) {
            const long n = -u.to_long();
            if (!best || n < *best)
                best = n;
        }
    if (!best)
        throw non_terminating("pFq: no nonpositive-integer upper parameter");
    return *best;
}

inline void validate(const HypSpec& spec) {
    const long n = termination_index(spec);
    for (const Rat& l : spec.lower)
        if (l.is_integer() && l.sign() <= 0 && -l.to_long() <= n - 1)
            throw lower_param_pole("pFq: lower parameter " + l.str() +
                                   " poles before termination at N = " + std::to_string(n));
}

/// Exact sum_{k=0}^{N} prod (upper_i)_k / prod (lower_j)_k * arg^k / k!.
inline Rat eval_terminating(const HypSpec& spec) {
    const long n = termination_index(spec);
    validate(spec);
    Rat sum = 0;
    Rat term = 1;
    for (long k = 0; k <= n; ++k) {
        sum += term;
        if (k == n)
            break;
        Rat ratio = spec.arg / Rat(k + 1);
        for (const Rat& u : spec.upper)
            ratio *= u + Rat(k);
        for (const Rat& l : spec.lower)
            ratio /= l + Rat(k);
        term *= ratio;
    }
    return sum;
}

/// Chu-Vandermonde: 2F1[-N, b; c; 1] = (c-b)_N / (c)_N. Returns the
/// Pochhammer form after checking it against the evaluated series.
inline Rat chu_vandermonde(long n, const Rat& b, const Rat& c) {
    if (n < 0)
        throw domain_error("chu_vandermonde: N must be >= 0");
    const Rat den = pochhammer(c, n);
    if (den.is_zero())
        throw lower_param_pole("chu_vandermonde: (c)_N vanishes at c = " + c.str());
    const Rat closed = pochhammer(c - b, n) / den;
    const Rat series = eval_terminating({{Rat(-n), b}, {c}, Rat(1)});
    if (closed != series)
        throw error("chu_vandermonde: series and Pochhammer form disagree");
    return closed;
}

/**
 * The terminating 3F2(1) transformation
 *   3F2[-N, a, b; d, e; 1] = (e-b)_N/(e)_N * 3F2[-N, b, d-a; d, 1+b-e-N; 1].
 * Valid when no lower parameter of either side is an integer in
 * [-(N-1), 0] for the stated N (earlier truncation through a or b is
 * harmless, but a masked lower-parameter pole is not).
 */
inline bool transform_3f2_check(long n, const Rat& a, const Rat& b, const Rat& d, const Rat& e) {
    if (n < 0)
        throw domain_error("transform_3f2_check: N must be >= 0");
    const Rat e2 = Rat(1) + b - e - Rat(n);
    for (const Rat& l : {d, e, e2})
        if (l.is_integer() && l.sign() <= 0 && -l.to_long() <= n - 1)
            throw lower_param_pole("transform_3f2_check: lower parameter " + l.str() +
                                   " poles before N = " + std::to_string(n));
    const Rat en = pochhammer(e, n);
    if (en.is_zero())
        throw lower_param_pole("transform_3f2_check: (e)_N vanishes");
    const Rat lhs = eval_terminating({{Rat(-n), a, b}, {d, e}, Rat(1)});
    const Rat rhs = pochhammer(e - b, n) / en *
                    eval_terminating({{Rat(-n), b, d - a}, {d, e2}, Rat(1)});
    return lhs == rhs;
}

/**
 * Gessel-Stanton evaluation:
 *   3F2[-sb+s+1, b-1, -N; b+1, s(-N-b)-N; 1]
 *     = (1+s+sN)_N b (N+1) / ((1+s(b+N))_N (b+N)).
 */
inline bool gessel_stanton_check(long n, const Rat& b, const Rat& s) {
    if (n < 0)
        throw domain_error("gessel_stanton_check: N must be >= 0");
    if (b.is_zero() || (b + Rat(n)).is_zero())
        throw domain_error("gessel_stanton_check: b and b+N must be nonzero");
    const Rat den = pochhammer(Rat(1) + s * (b + Rat(n)), n);
    if (den.is_zero())
        throw domain_error("gessel_stanton_check: (1+s(b+N))_N vanishes");
    const HypSpec spec{{-s * b + s + Rat(1), b - Rat(1), Rat(-n)},
                       {b + Rat(1), s * (Rat(-n) - b) - Rat(n)},
                       Rat(1)};
    const Rat lhs = eval_terminating(spec);
    const Rat rhs = pochhammer(Rat(1) + s + s * n, n) * b * Rat(n + 1) / (den * (b + Rat(n)));
    return lhs == rhs;
}

/**
 * The hypergeometric route to Theorem 1: prefactor times the 3F2 the
 * a-sum and k-sum exchange produces,
 *   C((1+a)m, m) C((1+1/a)n-2, n-1)
 *     * (-(1+a)(m+n/a)+1)_{n-1} / (2-(1+1/a)n)_{n-1} * m/(am+1)
 *     * 3F2[1-n, am, (1+a)m+1; am+2, (1+a)m+n/a+1; 1].
 * Returns the value, which equals rhs_theorem1 wherever the pipeline has
 * no pole; vanishing denominators raise pipeline_pole naming the factor.
 */
inline Rat second_proof_chain(long m, long n, const Rat& alpha) {
    detail::require_positive(m, "m");
    detail::require_positive(n, "n");
    detail::require_alpha(alpha);
    const Rat ai = alpha.inv();
    const Rat am = alpha * m;
    if ((am + Rat(1)).is_zero())
        throw pipeline_pole("second_proof_chain: alpha m + 1 vanishes");
    const Rat poch_den = pochhammer(Rat(2) - (Rat(1) + ai) * n, n - 1);
    if (poch_den.is_zero())
        throw pipeline_pole("second_proof_chain: (2-(1+1/alpha)n)_{n-1} vanishes");
    const HypSpec spec{{Rat(1 - n), am, (Rat(1) + alpha) * m + 1},
                       {am + 2, (Rat(1) + alpha) * m + ai * n + 1},
                       Rat(1)};
    try {
        validate(spec);
    } catch (const lower_param_pole& e) {
        throw pipeline_pole(std::string("second_proof_chain: ") + e.what());
    }
    const Rat pref = binomial_gen((Rat(1) + alpha) * m, m) *
                     binomial_gen((Rat(1) + ai) * n - 2, n - 1) *
                     pochhammer(-(Rat(1) + alpha) * (Rat(m) + ai * n) + 1, n - 1) / poch_den *
                     Rat(m) / (am + Rat(1));
    return pref * eval_terminating(spec);
}

namespace detail {

// Shared by the Dixon and Whipple checks: exact gamma ratio with the
// terminating-limit reading (denominator pole means the value is zero).
inline std::optional<Rat> rational_gamma_ratio(const std::vector<Rat>& num,
                                               const std::vector<Rat>& den) {
    auto g = gamma_ratio_or_zero(num, den);
    if (!g)
        return std::nullopt;
    return g->rational_value();
}

} // namespace detail

/**
 * Dixon's summation:
 *   3F2[a, b, c; 1+a-b, 1+a-c; 1]
 *     = G(1+a-b) G(1+a-c) G(1+a/2) G(1+a/2-b-c)
 *     / (G(1+a) G(1+a/2-b) G(1+a/2-c) G(1+a-b-c)).
 * The series must terminate through b or c; the gamma arguments must be
 * half-integers, and the sqrt(pi) exponents must cancel.
 */
inline bool dixon_check(const Rat& a, const Rat& b, const Rat& c) {
    if (!b.is_nonpos_integer() && !c.is_nonpos_integer())
        throw non_terminating("dixon_check: neither b nor c is a nonpositive integer");
    const Rat half_a = a / Rat(2);
    const Rat lhs = eval_terminating({{a, b, c}, {Rat(1) + a - b, Rat(1) + a - c}, Rat(1)});
    const auto rhs = detail::rational_gamma_ratio(
        {Rat(1) + a - b, Rat(1) + a - c, Rat(1) + half_a, Rat(1) + half_a - b - c},
        {Rat(1) + a, Rat(1) + half_a - b, Rat(1) + half_a - c, Rat(1) + a - b - c});
    return lhs == rhs.value_or(Rat(0));
}

/**
 * Whipple's summation:
 *   3F2[a, 1-a, c; d, 1+2c-d; 1]
 *     = 2^(1-2c) pi G(d) G(1+2c-d)
 *     / (G((1+a+2c-d)/2) G((a+d)/2) G((2-a+2c-d)/2) G((1-a+d)/2)).
 * The explicit pi carries sqrt(pi) exponent 2 and must cancel against the
 * half-integer gammas; 1-2c must be an integer so the power of two stays
 * rational. Terminate through a or 1-a (termination through c alone is
 * outside the formula's terminating validity).
 */
inline bool whipple_check(const Rat& a, const Rat& c, const Rat& d) {
    if (!a.is_nonpos_integer() && !(Rat(1) - a).is_nonpos_integer() && !c.is_nonpos_integer())
        throw non_terminating("whipple_check: none of a, 1-a, c is a nonpositive integer");
    const Rat two_c = Rat(2) * c;
    if (!two_c.is_integer())
        throw domain_error("whipple_check: 2^(1-2c) is irrational for c = " + c.str());
    const Rat e = Rat(1) + two_c - d;
    const Rat lhs = eval_terminating({{a, Rat(1) - a, c}, {d, e}, Rat(1)});
    auto g = gamma_ratio_or_zero({d, e},
                                 {(Rat(1) + a + two_c - d) / 2, (a + d) / 2,
                                  (Rat(2) - a + two_c - d) / 2, (Rat(1) - a + d) / 2});
    if (!g)
        return lhs == Rat(0);
    GammaValue v = *g;
    v.sqrt_pi_exp += 2;  // the explicit pi in the closed form
    return lhs == v.rational_value() * pow(Rat(2), 1 - two_c.to_long());
}

// ---------------------------------------------------------------------------
// Parameter correspondences for the 3F2 of the second proof,
//   3F2[1-n, am, (1+a)m+1; am+2, (1+a)m+n/a+1; 1]:
// Dixon applies exactly at alpha = 1 with (a, b, c) = (2m+1, m, 1-n);
// Whipple applies exactly at alpha = n/m with (a, c, d) = (n, m+n+1, n+2),
// the second upper slot 1-a = 1-n carrying the termination. At m = n the
// two specializations coincide (alpha = 1).
// ---------------------------------------------------------------------------

/// The 3F2 of the second proof at alpha = 1, evaluated by Dixon's formula.
inline Rat chain_3f2_by_dixon(long m, long n) {
    detail::require_positive(m, "m");
    detail::require_positive(n, "n");
    const Rat a = Rat(2 * m + 1), b = Rat(m), c = Rat(1 - n);
    const Rat half_a = a / Rat(2);
    const auto rhs = detail::rational_gamma_ratio(
        {Rat(1) + a - b, Rat(1) + a - c, Rat(1) + half_a, Rat(1) + half_a - b - c},
        {Rat(1) + a, Rat(1) + half_a - b, Rat(1) + half_a - c, Rat(1) + a - b - c});
    return rhs.value_or(Rat(0));
}

/// The 3F2 of the second proof at alpha = n/m, evaluated by Whipple's formula.
inline Rat chain_3f2_by_whipple(long m, long n) {
    detail::require_positive(m, "m");
    detail::require_positive(n, "n");
    const Rat a = Rat(n), c = Rat(m + n + 1), d = Rat(n + 2);
    const Rat two_c = Rat(2) * c;
    auto g = gamma_ratio_or_zero({d, Rat(1) + two_c - d},
                                 {(Rat(1) + a + two_c - d) / 2, (a + d) / 2,
                                  (Rat(2) - a + two_c - d) / 2, (Rat(1) - a + d) / 2});
    if (!g)
        return Rat(0);
    GammaValue v = *g;
    v.sqrt_pi_exp += 2;
    return v.rational_value() * pow(Rat(2), 1 - two_c.to_long());
}

} // namespace binomsum
