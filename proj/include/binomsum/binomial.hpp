#pragma once

#include <gmpxx.h>

#include "errors.hpp"
#include "rat.hpp"

namespace binomsum {

inline mpz_class factorial(long n) {
    if (n < 0)
        throw domain_error("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

/**
 * Generalized binomial coefficient C(x, k) = x(x-1)...(x-k+1) / k! for
 * rational x and integer k, with C(x, k) = 0 for k < 0. For nonnegative
 * integer x and 0 <= k <= x this is the ordinary binomial coefficient.
 *
 * The k < 0 convention is what lets sums with extended index ranges
 * (lower indices like m-r-2-a running negative) be written without case
 * analysis: out-of-range terms vanish.
 */
inline Rat binomial_gen(const Rat& x, long k) {
    if (k < 0)
        return Rat(0);
    if (k == 0)
        return Rat(1);
    // x - i = (p - i q) / q: accumulate the numerator product over mpz and
    // divide by q^k k! once at the end.
    const mpz_class p = x.num();
    const mpz_class q = x.den();
    mpz_class term = p;
    mpz_class num = p;
    for (long i = 1; i < k; ++i) {
        term -= q;
        num *= term;
    }
    if (num == 0)
        return Rat(0);
    mpz_class den;
    mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
    den *= factorial(k);
    return Rat(num, den);
}

/// Rising factorial (x)_n = x(x+1)...(x+n-1); (x)_0 = 1. Requires n >= 0.
inline Rat pochhammer(const Rat& x, long n) {
    if (n < 0)
        throw domain_error("pochhammer: negative length");
    if (n == 0)
        return Rat(1);
    const mpz_class p = x.num();
    const mpz_class q = x.den();
    mpz_class term = p;
    mpz_class num = p;
    for (long i = 1; i < n; ++i) {
        term += q;
        num *= term;
    }
    if (num == 0)
        return Rat(0);
    mpz_class den;
    mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(num, den);
}

} // namespace binomsum
