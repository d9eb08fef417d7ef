#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "rat.hpp"

namespace binomsum {

/**
 * Truncated series in two formal variables with bounded principal parts:
 * a dense grid of exact coefficients over [min_x, trunc_x] x [min_y,
 * trunc_y]. The same validity bookkeeping as LaurentSeries, tracked per
 * axis.
 */
class BiSeries {
public:
    BiSeries(long min_x, long trunc_x, long min_y, long trunc_y)
        : minx_(min_x), truncx_(trunc_x), miny_(min_y), truncy_(trunc_y) {
        if (truncx_ < minx_ || truncy_ < miny_)
            throw domain_error("BiSeries: empty exponent range");
        g_.assign(static_cast<std::size_t>((truncx_ - minx_ + 1) * (truncy_ - miny_ + 1)), Rat(0));
    }

    static BiSeries constant(const Rat& v, long trunc_x, long trunc_y) {
        BiSeries s(0, trunc_x, 0, trunc_y);
        s.set_coeff(0, 0, v);
        return s;
    }

    // Embed a univariate series as a series in x (exact in y to trunc_y).
    static BiSeries from_x(const LaurentSeries& s, long trunc_y) {
        BiSeries out(s.min_order(), s.trunc_order(), 0, trunc_y);
        for (long e = s.min_order(); e <= s.trunc_order(); ++e)
            out.set_coeff(e, 0, s.coeff(e));
        return out;
    }

    static BiSeries from_y(const LaurentSeries& s, long trunc_x) {
        BiSeries out(0, trunc_x, s.min_order(), s.trunc_order());
        for (long e = s.min_order(); e <= s.trunc_order(); ++e)
            out.set_coeff(0, e, s.coeff(e));
        return out;
    }

    long min_x() const { return minx_; }
    long min_y() const { return miny_; }
    long trunc_x() const { return truncx_; }
    long trunc_y() const { return truncy_; }

    const Rat& coeff(long i, long j) const {
        static const Rat zero_{0};
        if (i < minx_ || j < miny_)
            return zero_;
        if (i > truncx_ || j > truncy_)
            throw domain_error("BiSeries: coefficient (" + std::to_string(i) + ", " +
                               std::to_string(j) + ") beyond truncation order");
        return g_[index(i, j)];
    }

    void set_coeff(long i, long j, const Rat& v) {
        if (i < minx_ || j < miny_ || i > truncx_ || j > truncy_)
            throw domain_error("BiSeries: exponent out of range");
        g_[index(i, j)] = v;
    }

    bool is_zero_grid() const {
        for (const Rat& v : g_)
            if (!v.is_zero())
                return false;
        return true;
    }

    BiSeries truncated(long tx, long ty) const {
        BiSeries out(minx_, std::min(tx, truncx_), miny_, std::min(ty, truncy_));
        for (long i = out.minx_; i <= out.truncx_; ++i)
            for (long j = out.miny_; j <= out.truncy_; ++j)
                out.set_coeff(i, j, coeff(i, j));
        return out;
    }

    // Multiply by x^dx y^dy.
    BiSeries shifted(long dx, long dy) const {
        BiSeries out(minx_ + dx, truncx_ + dx, miny_ + dy, truncy_ + dy);
        out.g_ = g_;
        return out;
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        BiSeries out(std::min(a.minx_, b.minx_), std::min(a.truncx_, b.truncx_),
                     std::min(a.miny_, b.miny_), std::min(a.truncy_, b.truncy_));
        for (long i = out.minx_; i <= out.truncx_; ++i)
            for (long j = out.miny_; j <= out.truncy_; ++j)
                out.set_coeff(i, j, a.coeff(i, j) + b.coeff(i, j));
        return out;
    }

    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
        BiSeries out(std::min(a.minx_, b.minx_), std::min(a.truncx_, b.truncx_),
                     std::min(a.miny_, b.miny_), std::min(a.truncy_, b.truncy_));
        for (long i = out.minx_; i <= out.truncx_; ++i)
            for (long j = out.miny_; j <= out.truncy_; ++j)
                out.set_coeff(i, j, a.coeff(i, j) - b.coeff(i, j));
        return out;
    }

    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        BiSeries out(a.minx_ + b.minx_, std::min(a.truncx_ + b.minx_, b.truncx_ + a.minx_),
                     a.miny_ + b.miny_, std::min(a.truncy_ + b.miny_, b.truncy_ + a.miny_));
        for (long i1 = a.minx_; i1 <= a.truncx_; ++i1)
            for (long j1 = a.miny_; j1 <= a.truncy_; ++j1) {
                const Rat& av = a.coeff(i1, j1);
                if (av.is_zero())
                    continue;
                const long i2max = std::min(b.truncx_, out.truncx_ - i1);
                const long j2max = std::min(b.truncy_, out.truncy_ - j1);
                for (long i2 = b.minx_; i2 <= i2max; ++i2)
                    for (long j2 = b.miny_; j2 <= j2max; ++j2) {
                        const Rat& bv = b.coeff(i2, j2);
                        if (bv.is_zero())
                            continue;
                        out.g_[out.index(i1 + i2, j1 + j2)] += av * bv;
                    }
            }
        return out;
    }

    friend BiSeries operator*(const Rat& s, const BiSeries& a) {
        BiSeries out = a;
        for (Rat& v : out.g_)
            v *= s;
        return out;
    }

    /**
     * Inverse of a series with unit part: requires min orders 0 and a
     * nonzero constant term. Computed as (1/c) sum (-r)^k with
     * r = this/c - 1, which terminates inside the truncation window
     * because r has no constant term.
     */
    BiSeries inverse() const {
        if (minx_ > 0 || miny_ > 0)
            throw domain_error("BiSeries: inverse requires min orders <= 0");
        for (long i = minx_; i <= truncx_; ++i)
            for (long j = miny_; j <= truncy_; ++j)
                if ((i < 0 || j < 0) && !coeff(i, j).is_zero())
                    throw domain_error("BiSeries: inverse requires a vanishing principal part");
        const Rat c = coeff(0, 0);
        if (c.is_zero())
            throw domain_error("BiSeries: inverse requires a nonzero constant term");
        // r = 1 - this/c, rebuilt with min orders 0 (the principal part is zero).
        BiSeries r(0, truncx_, 0, truncy_);
        for (long i = 0; i <= truncx_; ++i)
            for (long j = 0; j <= truncy_; ++j)
                r.set_coeff(i, j, (i == 0 && j == 0) ? Rat(0) : -coeff(i, j) / c);
        BiSeries acc = constant(Rat(1), truncx_, truncy_);
        BiSeries p = constant(Rat(1), truncx_, truncy_);
        const long kmax = truncx_ + truncy_ + 1;
        for (long k = 1; k <= kmax; ++k) {
            p = (p * r).truncated(truncx_, truncy_);
            if (p.is_zero_grid())
                break;
            acc = acc + p;
        }
        return c.inv() * acc;
    }

    BiSeries pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        BiSeries acc = constant(Rat(1), truncx_, truncy_);
        for (long i = 0; i < e; ++i)
            acc = acc * *this;
        return acc;
    }

    BiSeries derivative_x() const {
        BiSeries out(minx_ - 1, truncx_ - 1, miny_, truncy_);
        for (long i = minx_; i <= truncx_; ++i)
            for (long j = miny_; j <= truncy_; ++j)
                out.set_coeff(i - 1, j, Rat(i) * coeff(i, j));
        return out;
    }

    BiSeries derivative_y() const {
        BiSeries out(minx_, truncx_, miny_ - 1, truncy_ - 1);
        for (long i = minx_; i <= truncx_; ++i)
            for (long j = miny_; j <= truncy_; ++j)
                out.set_coeff(i, j - 1, Rat(j) * coeff(i, j));
        return out;
    }

    // Equality over the region where both sides are known.
    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        const long xlo = std::min(a.minx_, b.minx_), xhi = std::min(a.truncx_, b.truncx_);
        const long ylo = std::min(a.miny_, b.miny_), yhi = std::min(a.truncy_, b.truncy_);
        for (long i = xlo; i <= xhi; ++i)
            for (long j = ylo; j <= yhi; ++j)
                if (a.coeff(i, j) != b.coeff(i, j))
                    return false;
        return true;
    }

private:
    std::size_t index(long i, long j) const {
        return static_cast<std::size_t>((i - minx_) * (truncy_ - miny_ + 1) + (j - miny_));
    }

    long minx_, truncx_, miny_, truncy_;
    std::vector<Rat> g_;
};

} // namespace binomsum
