#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace binomsum {

/**
 * Arbitrary-precision rational, always stored in lowest terms with a
 * positive denominator. The universal scalar of the library: every
 * evaluator, series coefficient and report value is an exact Rat.
 *
 * Canonical text form is "p/q" in lowest terms, or just "p" when q == 1;
 * parse() accepts exactly that shape (with an optional sign on p).
 */
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(int n) : v_(n) {}
    Rat(long num, long den) {
        if (den == 0)
            throw domain_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& z) : v_(z) {}
    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            throw domain_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(mpq_class q) : v_(std::move(q)) {
        if (v_.get_den() == 0)
            throw domain_error("Rat: zero denominator");
        v_.canonicalize();
    }

    static Rat parse(std::string_view s) {
        auto slash = s.find('/');
        mpz_class num, den;
        if (!set_integer(num, s.substr(0, slash)))
            throw domain_error("Rat: cannot parse \"" + std::string(s) + "\"");
        if (slash == std::string_view::npos) {
            den = 1;
        } else if (!set_integer(den, s.substr(slash + 1)) || den == 0) {
            throw domain_error("Rat: cannot parse \"" + std::string(s) + "\"");
        }
        return Rat(num, den);
    }

    std::string str() const {
        std::string out = v_.get_num().get_str();
        if (v_.get_den() != 1) {
            out += '/';
            out += v_.get_den().get_str();
        }
        return out;
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_half_integer() const { return v_.get_den() == 1 || v_.get_den() == 2; }
    bool is_nonneg_integer() const { return is_integer() && sgn(v_) >= 0; }
    bool is_nonpos_integer() const { return is_integer() && sgn(v_) <= 0; }

    // Exact conversion; throws unless the value is an integer fitting a long.
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw domain_error("Rat: " + str() + " is not a machine integer");
        return v_.get_num().get_si();
    }

    Rat operator-() const { return Rat(mpq_class(-v_), already_canonical{}); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero())
            throw domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

    // Reciprocal; throws on zero.
    Rat inv() const {
        if (is_zero())
            throw domain_error("Rat: division by zero");
        Rat r;
        mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
        return r;
    }

private:
    struct already_canonical {};
    Rat(mpq_class q, already_canonical) : v_(std::move(q)) {}

    static bool set_integer(mpz_class& out, std::string_view s) {
        if (s.empty())
            return false;
        if (s.front() == '+')
            s.remove_prefix(1);
        std::string_view digits = s;
        if (!digits.empty() && digits.front() == '-')
            digits.remove_prefix(1);
        if (digits.empty())
            return false;
        for (char c : digits)
            if (c < '0' || c > '9')
                return false;
        return out.set_str(std::string(s), 10) == 0;
    }

    mpq_class v_;
};

// Integer power with negative exponents via the reciprocal.
inline Rat pow(const Rat& base, long e) {
    if (e < 0)
        return pow(base.inv(), -e);
    Rat acc = 1;
    Rat b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1)
            acc *= b;
        if (k > 1)
            b *= b;
    }
    return acc;
}

} // namespace binomsum
