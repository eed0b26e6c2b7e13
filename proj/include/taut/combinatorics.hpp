#pragma once

#include <mutex>
#include <stdexcept>
#include <vector>

#include "taut/integer.hpp"
#include "taut/rational.hpp"
#include "taut/series.hpp"

namespace taut {

/// n! for n >= 0.
inline Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.raw(), static_cast<unsigned long>(n));
    return r;
}

/**
 * Binomial coefficient with the out-of-range convention used throughout:
 * C(n, k) = 0 whenever k < 0 or k > n.  (Several alternating-sum identities
 * here have edge terms that rely on exactly this convention.)
 */
inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    Int r;
    mpz_bin_uiui(r.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/**
 * Double factorial n!! = n(n-2)(n-4)...; empty-product convention
 * (-1)!! = 0!! = 1.  Rejects n < -1.
 */
inline Int double_factorial(long n) {
    if (n < -1) throw std::domain_error("double_factorial: argument below -1");
    Int r(1);
    for (long k = n; k >= 2; k -= 2) r *= Int(k);
    return r;
}

/// base^e as an exact integer, e >= 0 (0^0 = 1).
inline Int ipow(long base, long e) {
    if (e < 0) throw std::domain_error("ipow: negative exponent");
    return Int(base).pow(static_cast<unsigned long>(e));
}

/// base^e as an exact rational; negative e allowed for nonzero base.
inline Rat rpow(long base, long e) {
    return Rat(base).pow(e);
}

namespace detail {

/// Memo for Bernoulli numbers; a mutex linearizes all access (see README
/// "Concurrency" — every cache in the library follows this contract).
struct BernoulliCache {
    std::mutex mutex;
    std::vector<Rat> values;  // values[m] = B_m once computed

    static BernoulliCache& instance() {
        static BernoulliCache c;
        return c;
    }
};

}  // namespace detail

/**
 * Bernoulli number B_m under the convention t/(e^t - 1) = sum B_m t^m / m!
 * (so B_1 = -1/2).  Computed by exact division of the two power series —
 * the defining expansion itself — and memoized.
 */
inline Rat bernoulli(long m) {
    if (m < 0) throw std::domain_error("bernoulli: negative index");
    auto& cache = detail::BernoulliCache::instance();
    std::lock_guard<std::mutex> lock(cache.mutex);
    if (m < static_cast<long>(cache.values.size())) return cache.values[m];

    // (e^t - 1)/t = sum_{k>=0} t^k/(k+1)!; its reciprocal is sum B_m t^m/m!.
    Series den(static_cast<int>(m));
    for (long k = 0; k <= m; ++k)
        den.set_coefficient(static_cast<int>(k), Rat(Int(1), factorial(k + 1)));
    const Series gf = Series::constant(Rat(1), static_cast<int>(m)) / den;

    const long known = static_cast<long>(cache.values.size());
    cache.values.resize(m + 1);
    for (long j = known; j <= m; ++j)
        cache.values[j] = Rat(factorial(j)) * gf.coefficient(static_cast<int>(j));
    return cache.values[m];
}

/// |B_m| — the text mixes signed and absolute Bernoulli values freely.
inline Rat bernoulli_abs(long m) { return bernoulli(m).abs(); }

/// Test-only hook: overwrite a memoized Bernoulli value to exercise
/// negative controls.  Returns the previous value.
inline Rat corrupt_bernoulli_for_testing(long m, const Rat& wrong) {
    bernoulli(m);  // ensure present
    auto& cache = detail::BernoulliCache::instance();
    std::lock_guard<std::mutex> lock(cache.mutex);
    Rat old = cache.values[m];
    cache.values[m] = wrong;
    return old;
}

/**
 * Stirling number of the second kind S(n, l): set partitions of n elements
 * into l nonempty blocks.  Alternating-sum route:
 *   S(n, l) = (1/l!) sum_{m=0..l} (-1)^{l-m} C(l, m) m^n,   with 0^0 = 1.
 */
inline Int stirling2(long n, long l) {
    if (n < 0 || l < 0) throw std::domain_error("stirling2: negative argument");
    Int acc(0);
    for (long m = 0; m <= l; ++m) {
        Int term = binomial(l, m) * ipow(m, n);
        if ((l - m) % 2 != 0) term = -term;
        acc += term;
    }
    // acc is divisible by l!; check exactness while dividing.
    Rat exact = Rat(acc, factorial(l));
    if (!exact.is_integer()) throw std::logic_error("stirling2: non-integer alternating sum");
    return exact.numerator();
}

/// Independent route: the triangle recurrence S(n+1, l) = l S(n, l) + S(n, l-1).
inline Int stirling2_by_recurrence(long n, long l) {
    if (n < 0 || l < 0) throw std::domain_error("stirling2: negative argument");
    if (l > n) return Int(0);
    // row[j] = S(i, j) while sweeping i = 0..n.
    std::vector<Int> row(static_cast<size_t>(l) + 1, Int(0));
    row[0] = Int(1);  // S(0, 0) = 1
    for (long i = 1; i <= n; ++i) {
        for (long j = std::min(i, l); j >= 1; --j) row[j] = Int(j) * row[j] + row[j - 1];
        row[0] = Int(0);  // S(i, 0) = 0 for i >= 1
    }
    return row[l];
}

}  // namespace taut
