#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "errors.hpp"
#include "rat.hpp"

namespace binomsum {

/**
 * Truncated Laurent series in one formal variable: exact rational
 * coefficients for every exponent in [min_order, trunc_order], a finite
 * principal part when min_order < 0, and an unknown tail above
 * trunc_order.
 *
 * Operations track both bounds: a product is only known up to the order
 * where neither factor's unknown tail can reach, min(Ta + ob, Tb + oa).
 * Coefficients below min_order are exactly zero; asking for a coefficient
 * above trunc_order is a logic error and throws.
 */
class LaurentSeries {
public:
    LaurentSeries(long min_order, long trunc_order)
        : min_(min_order), trunc_(trunc_order) {
        if (trunc_ < min_)
            throw domain_error("LaurentSeries: empty exponent range");
        c_.assign(static_cast<std::size_t>(trunc_ - min_ + 1), Rat(0));
    }

    static LaurentSeries zero(long trunc_order) { return LaurentSeries(0, trunc_order); }

    static LaurentSeries constant(const Rat& v, long trunc_order) {
        LaurentSeries s(0, trunc_order);
        s.set_coeff(0, v);
        return s;
    }

    static LaurentSeries monomial(const Rat& v, long exponent, long trunc_order) {
        LaurentSeries s(std::min(exponent, 0L), trunc_order);
        s.set_coeff(exponent, v);
        return s;
    }

    long min_order() const { return min_; }
    long trunc_order() const { return trunc_; }

    const Rat& coeff(long e) const {
        static const Rat zero_{0};
        if (e < min_)
            return zero_;
        if (e > trunc_)
            throw domain_error("LaurentSeries: coefficient " + std::to_string(e) +
                               " beyond truncation order " + std::to_string(trunc_));
        return c_[static_cast<std::size_t>(e - min_)];
    }

    void set_coeff(long e, const Rat& v) {
        if (e < min_ || e > trunc_)
            throw domain_error("LaurentSeries: exponent out of range");
        c_[static_cast<std::size_t>(e - min_)] = v;
    }

    // Smallest exponent with a nonzero stored coefficient.
    std::optional<long> valuation() const {
        for (long e = min_; e <= trunc_; ++e)
            if (!coeff(e).is_zero())
                return e;
        return std::nullopt;
    }

    LaurentSeries truncated(long new_trunc) const {
        LaurentSeries out(min_, std::min(new_trunc, trunc_));
        for (long e = out.min_; e <= out.trunc_; ++e)
            out.set_coeff(e, coeff(e));
        return out;
    }

    // Multiply by x^k.
    LaurentSeries shifted(long k) const {
        LaurentSeries out(min_ + k, trunc_ + k);
        out.c_ = c_;
        return out;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries out(std::min(a.min_, b.min_), std::min(a.trunc_, b.trunc_));
        for (long e = out.min_; e <= out.trunc_; ++e)
            out.set_coeff(e, a.coeff(e) + b.coeff(e));
        return out;
    }

    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries out(std::min(a.min_, b.min_), std::min(a.trunc_, b.trunc_));
        for (long e = out.min_; e <= out.trunc_; ++e)
            out.set_coeff(e, a.coeff(e) - b.coeff(e));
        return out;
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries out(a.min_ + b.min_, std::min(a.trunc_ + b.min_, b.trunc_ + a.min_));
        for (long i = a.min_; i <= a.trunc_; ++i) {
            if (a.coeff(i).is_zero())
                continue;
            const long jmax = std::min(b.trunc_, out.trunc_ - i);
            for (long j = b.min_; j <= jmax; ++j) {
                if (b.coeff(j).is_zero())
                    continue;
                out.c_[static_cast<std::size_t>(i + j - out.min_)] += a.coeff(i) * b.coeff(j);
            }
        }
        return out;
    }

    friend LaurentSeries operator*(const Rat& s, const LaurentSeries& a) {
        LaurentSeries out = a;
        for (Rat& v : out.c_)
            v *= s;
        return out;
    }

    /**
     * Multiplicative inverse. The series must have a nonzero coefficient
     * somewhere; with valuation v the inverse has min_order -v and is known
     * to order trunc_order - 2v.
     */
    LaurentSeries inverse() const {
        const auto val = valuation();
        if (!val)
            throw domain_error("LaurentSeries: inverse of (truncated) zero");
        const long v = *val;
        const long order = trunc_ - v;  // unit part known to this order
        // a_0 + a_1 x + ... with a_0 != 0: standard inversion recurrence.
        std::vector<Rat> a(static_cast<std::size_t>(order + 1));
        for (long j = 0; j <= order; ++j)
            a[static_cast<std::size_t>(j)] = coeff(v + j);
        std::vector<Rat> b(static_cast<std::size_t>(order + 1));
        b[0] = a[0].inv();
        for (long e = 1; e <= order; ++e) {
            Rat acc = 0;
            for (long j = 1; j <= e; ++j)
                acc += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(e - j)];
            b[static_cast<std::size_t>(e)] = -acc / a[0];
        }
        LaurentSeries out(-v, trunc_ - 2 * v);
        for (long e = 0; e <= order && -v + e <= out.trunc_; ++e)
            out.set_coeff(-v + e, b[static_cast<std::size_t>(e)]);
        return out;
    }

    LaurentSeries pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        LaurentSeries acc = constant(Rat(1), trunc_);
        for (long i = 0; i < e; ++i)
            acc = acc * *this;
        return acc;
    }

    LaurentSeries derivative() const {
        LaurentSeries out(min_ - 1, trunc_ - 1);
        for (long e = min_; e <= trunc_; ++e)
            out.set_coeff(e - 1, Rat(e) * coeff(e));
        return out;
    }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        const long lo = std::min(a.min_, b.min_);
        const long hi = std::min(a.trunc_, b.trunc_);
        for (long e = lo; e <= hi; ++e)
            if (a.coeff(e) != b.coeff(e))
                return false;
        return true;
    }

private:
    long min_;
    long trunc_;
    std::vector<Rat> c_;
};

/**
 * (1 + t)^gamma for rational gamma, where t has valuation >= 1: the
 * binomial series sum_j C(gamma, j) t^j, which the valuation truncates
 * after trunc_order terms.
 */
inline LaurentSeries binomial_power(const LaurentSeries& t, const Rat& gamma) {
    const auto val = t.valuation();
    if (val && *val < 1)
        throw domain_error("binomial_power: series must have positive valuation");
    const long order = t.trunc_order();
    LaurentSeries acc = LaurentSeries::constant(binomial_gen(gamma, 0), order);
    LaurentSeries tp = LaurentSeries::constant(Rat(1), order);
    for (long j = 1; j <= order; ++j) {
        tp = (tp * t).truncated(order);
        acc = acc + binomial_gen(gamma, j) * tp;
    }
    return acc;
}

} // namespace binomsum
