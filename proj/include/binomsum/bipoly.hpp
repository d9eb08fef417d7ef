#pragma once

#include <vector>

#include "errors.hpp"
#include "rat.hpp"

namespace binomsum {

/// Exact bivariate polynomial in (u, v), dense over [0..deg_u] x [0..deg_v].
/// Equality is coefficient-wise; degrees grow as needed under + and *.
class BiPoly {
public:
    BiPoly() : du_(0), dv_(0), g_(1, Rat(0)) {}

    static BiPoly constant(const Rat& c) {
        BiPoly p;
        p.g_[0] = c;
        return p;
    }

    // c * u^i v^j
    static BiPoly monomial(const Rat& c, long i, long j) {
        if (i < 0 || j < 0)
            throw domain_error("BiPoly: negative exponent");
        BiPoly p;
        p.du_ = i;
        p.dv_ = j;
        p.g_.assign(static_cast<std::size_t>((i + 1) * (j + 1)), Rat(0));
        p.g_[p.index(i, j)] = c;
        return p;
    }

    static BiPoly u() { return monomial(Rat(1), 1, 0); }
    static BiPoly v() { return monomial(Rat(1), 0, 1); }

    long deg_u() const { return du_; }
    long deg_v() const { return dv_; }

    const Rat& coeff(long i, long j) const {
        static const Rat zero_{0};
        if (i < 0 || j < 0 || i > du_ || j > dv_)
            return zero_;
        return g_[index(i, j)];
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly out = sized(std::max(a.du_, b.du_), std::max(a.dv_, b.dv_));
        for (long i = 0; i <= out.du_; ++i)
            for (long j = 0; j <= out.dv_; ++j)
                out.g_[out.index(i, j)] = a.coeff(i, j) + b.coeff(i, j);
        return out;
    }

    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly out = sized(std::max(a.du_, b.du_), std::max(a.dv_, b.dv_));
        for (long i = 0; i <= out.du_; ++i)
            for (long j = 0; j <= out.dv_; ++j)
                out.g_[out.index(i, j)] = a.coeff(i, j) - b.coeff(i, j);
        return out;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly out = sized(a.du_ + b.du_, a.dv_ + b.dv_);
        for (long i1 = 0; i1 <= a.du_; ++i1)
            for (long j1 = 0; j1 <= a.dv_; ++j1) {
                const Rat& av = a.coeff(i1, j1);
                if (av.is_zero())
                    continue;
                for (long i2 = 0; i2 <= b.du_; ++i2)
                    for (long j2 = 0; j2 <= b.dv_; ++j2) {
                        const Rat& bv = b.coeff(i2, j2);
                        if (bv.is_zero())
                            continue;
                        out.g_[out.index(i1 + i2, j1 + j2)] += av * bv;
                    }
            }
        return out;
    }

    friend BiPoly operator*(const Rat& s, const BiPoly& a) {
        BiPoly out = a;
        for (Rat& c : out.g_)
            c *= s;
        return out;
    }

    BiPoly pow(long e) const {
        if (e < 0)
            throw domain_error("BiPoly: negative power");
        BiPoly acc = constant(Rat(1));
        BiPoly base = *this;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1)
                acc = acc * base;
            if (k > 1)
                base = base * base;
        }
        return acc;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        const long du = std::max(a.du_, b.du_), dv = std::max(a.dv_, b.dv_);
        for (long i = 0; i <= du; ++i)
            for (long j = 0; j <= dv; ++j)
                if (a.coeff(i, j) != b.coeff(i, j))
                    return false;
        return true;
    }

private:
    static BiPoly sized(long du, long dv) {
        BiPoly p;
        p.du_ = du;
        p.dv_ = dv;
        p.g_.assign(static_cast<std::size_t>((du + 1) * (dv + 1)), Rat(0));
        return p;
    }

    std::size_t index(long i, long j) const {
        return static_cast<std::size_t>(i * (dv_ + 1) + j);
    }

    long du_, dv_;
    std::vector<Rat> g_;
};

} // namespace binomsum
