#pragma once

#include <gmp.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace taut {

/**
 * Arbitrary-precision signed integer.
 *
 * Thin RAII value type over GMP's mpz_t.  Every combinatorial quantity in
 * the library (factorials, binomials, Stirling numbers, partition counts)
 * is an Int; no fixed-width integer overflow can occur anywhere.
 */
class Int {
public:
    Int() { mpz_init(v_); }
    Int(long n) { mpz_init_set_si(v_, n); }
    Int(unsigned long n) { mpz_init_set_ui(v_, n); }
    Int(int n) : Int(static_cast<long>(n)) {}

    explicit Int(const std::string& digits) {
        if (mpz_init_set_str(v_, digits.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw std::invalid_argument("Int: cannot parse \"" + digits + "\"");
        }
    }

    Int(const Int& o) { mpz_init_set(v_, o.v_); }
    Int(Int&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~Int() { mpz_clear(v_); }

    // Raw handle, for the few spots (Rat construction) that talk to GMP.
    const mpz_t& raw() const { return v_; }
    mpz_t& raw() { return v_; }

    friend Int operator+(const Int& a, const Int& b) {
        Int r;
        mpz_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend Int operator-(const Int& a, const Int& b) {
        Int r;
        mpz_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend Int operator*(const Int& a, const Int& b) {
        Int r;
        mpz_mul(r.v_, a.v_, b.v_);
        return r;
    }
    Int operator-() const {
        Int r;
        mpz_neg(r.v_, v_);
        return r;
    }
    Int& operator+=(const Int& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }
    Int& operator-=(const Int& o) {
        mpz_sub(v_, v_, o.v_);
        return *this;
    }
    Int& operator*=(const Int& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
        const int c = mpz_cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    int sign() const { return mpz_sgn(v_); }

    Int abs() const {
        Int r;
        mpz_abs(r.v_, v_);
        return r;
    }

    /// this^e for e >= 0.
    Int pow(unsigned long e) const {
        Int r;
        mpz_pow_ui(r.v_, v_, e);
        return r;
    }

    bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
    long to_long() const {
        if (!fits_long()) throw std::overflow_error("Int: value does not fit in long");
        return mpz_get_si(v_);
    }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(s, out.size() + 1);
        return out;
    }

private:
    mpz_t v_;
};

}  // namespace taut
