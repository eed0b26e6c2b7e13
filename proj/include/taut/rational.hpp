#pragma once

#include <gmp.h>

#include <compare>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "taut/integer.hpp"

namespace taut {

/**
 * Arbitrary-precision rational number — the universal scalar of the library.
 *
 * Always stored in lowest terms with positive denominator (zero is 0/1);
 * GMP's mpq layer maintains that invariant after every operation.  All
 * arithmetic is exact: nothing in this library ever rounds.
 */
class Rat {
public:
    Rat() { mpq_init(v_); }

    Rat(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rat(int n) : Rat(static_cast<long>(n)) {}

    Rat(long num, long den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        mpq_init(v_);
        mpq_set_si(v_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(v_, v_, d);
        mpq_clear(d);
    }

    Rat(const Int& n) {
        mpq_init(v_);
        mpq_set_z(v_, n.raw());
    }

    Rat(const Int& num, const Int& den) {
        if (den.is_zero()) throw std::domain_error("Rat: zero denominator");
        mpq_init(v_);
        mpq_set_z(v_, num.raw());
        mpq_t d;
        mpq_init(d);
        mpq_set_z(d, den.raw());
        mpq_div(v_, v_, d);
        mpq_clear(d);
    }

    /// Parses "p" or "p/q" (base 10).
    explicit Rat(const std::string& text) {
        mpq_init(v_);
        if (mpq_set_str(v_, text.c_str(), 10) != 0 || mpz_sgn(mpq_denref(v_)) == 0) {
            mpq_clear(v_);
            throw std::invalid_argument("Rat: cannot parse \"" + text + "\"");
        }
        mpq_canonicalize(v_);
    }

    Rat(const Rat& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rat() { mpq_clear(v_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        Rat r;
        mpq_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        Rat r;
        mpq_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        Rat r;
        mpq_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        Rat r;
        mpq_div(r.v_, a.v_, b.v_);
        return r;
    }
    Rat operator-() const {
        Rat r;
        mpq_neg(r.v_, v_);
        return r;
    }
    Rat& operator+=(const Rat& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = mpq_cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sign() const { return mpq_sgn(v_); }

    Rat abs() const {
        Rat r;
        mpq_abs(r.v_, v_);
        return r;
    }

    Rat reciprocal() const {
        if (is_zero()) throw std::domain_error("Rat: reciprocal of zero");
        Rat r;
        mpq_inv(r.v_, v_);
        return r;
    }

    /// this^e; negative e allowed for nonzero values.
    Rat pow(long e) const {
        if (e < 0) return reciprocal().pow(-e);
        Rat r;
        mpz_pow_ui(mpq_numref(r.v_), mpq_numref(v_), static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.v_), mpq_denref(v_), static_cast<unsigned long>(e));
        // Powers of a canonical fraction are canonical already.
        return r;
    }

    Int numerator() const {
        Int n;
        mpz_set(n.raw(), mpq_numref(v_));
        return n;
    }
    Int denominator() const {
        Int d;
        mpz_set(d.raw(), mpq_denref(v_));
        return d;
    }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    /// "p/q" in lowest terms, or just "p" for integers.
    std::string to_string() const {
        std::string s = numerator().to_string();
        if (!is_integer()) s += "/" + denominator().to_string();
        return s;
    }

    /// Approximate decimal rendering (display aid only; never used in checks).
    std::string to_decimal_string() const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", mpq_get_d(v_));
        return buf;
    }

private:
    mpq_t v_;
};

}  // namespace taut
