#pragma once

#include <optional>
#include <vector>

#include "binomial.hpp"
#include "errors.hpp"
#include "rat.hpp"

namespace binomsum {

/**
 * Exact value of a product of gamma functions at half-integer arguments,
 * represented as coeff * pi^(sqrt_pi_exp / 2). Gamma of a positive integer
 * carries exponent 0, gamma of a half-odd-integer carries exponent 1.
 */
struct GammaValue {
    Rat coeff;
    long sqrt_pi_exp = 0;

    bool is_rational() const { return sqrt_pi_exp == 0; }

    Rat rational_value() const {
        if (sqrt_pi_exp != 0)
            throw domain_error("GammaValue: sqrt(pi) exponent " +
                               std::to_string(sqrt_pi_exp) + " does not cancel");
        return coeff;
    }

    friend GammaValue operator*(const GammaValue& a, const GammaValue& b) {
        return {a.coeff * b.coeff, a.sqrt_pi_exp + b.sqrt_pi_exp};
    }
    friend GammaValue operator/(const GammaValue& a, const GammaValue& b) {
        return {a.coeff / b.coeff, a.sqrt_pi_exp - b.sqrt_pi_exp};
    }
    friend bool operator==(const GammaValue& a, const GammaValue& b) {
        return a.coeff == b.coeff && a.sqrt_pi_exp == b.sqrt_pi_exp;
    }
};

/**
 * Gamma(z) for half-integer z, via Gamma(1) = 1, Gamma(1/2) = sqrt(pi) and
 * the recurrence Gamma(z+1) = z Gamma(z) walked in either direction.
 * Throws pole_error at nonpositive integers and domain_error off the
 * half-integer lattice.
 */
inline GammaValue gamma_half(const Rat& z) {
    if (!z.is_half_integer())
        throw domain_error("gamma: argument " + z.str() + " is not a half-integer");
    if (z.is_integer()) {
        if (z.sign() <= 0)
            throw pole_error("gamma: pole at " + z.str());
        return {Rat(factorial(z.to_long() - 1)), 0};
    }
    // z = j + 1/2: walk from Gamma(1/2) by the recurrence.
    Rat c = 1;
    Rat w = z;
    const Rat half(1, 2);
    while (w > half) {
        w -= 1;
        c *= w;
    }
    while (w < half) {
        c /= w;
        w += 1;
    }
    return {c, 1};
}

/// Exact prod Gamma(num_i) / prod Gamma(den_j) over half-integer arguments.
inline GammaValue gamma_product(const std::vector<Rat>& num, const std::vector<Rat>& den) {
    GammaValue acc{Rat(1), 0};
    for (const Rat& z : num)
        acc = acc * gamma_half(z);
    for (const Rat& z : den)
        acc = acc / gamma_half(z);
    return acc;
}

/**
 * Like gamma_product, but reads the ratio as the limit classical summation
 * formulas require at terminating parameters: a gamma pole in the
 * denominator makes the ratio exactly zero (reciprocal gamma vanishes
 * there), reported as nullopt. Poles in the numerator stay hard errors.
 */
inline std::optional<GammaValue> gamma_ratio_or_zero(const std::vector<Rat>& num,
                                                     const std::vector<Rat>& den) {
    for (const Rat& z : num)
        if (!z.is_half_integer())
            throw domain_error("gamma: argument " + z.str() + " is not a half-integer");
    for (const Rat& z : den)
        if (!z.is_half_integer())
            throw domain_error("gamma: argument " + z.str() + " is not a half-integer");
    for (const Rat& z : num)
        if (z.is_nonpos_integer())
            throw pole_error("gamma: numerator pole at " + z.str());
    for (const Rat& z : den)
        if (z.is_nonpos_integer())
            return std::nullopt;
    return gamma_product(num, den);
}

} // namespace binomsum
