#pragma once

#include <stdexcept>

#include "taut/combinatorics.hpp"
#include "taut/series.hpp"

namespace taut {

/// e^x = sum x^k / k!.
inline Series exp_series(int order) {
    Series s(order);
    for (int k = 0; k <= order; ++k) s.set_coefficient(k, Rat(Int(1), factorial(k)));
    return s;
}

/// sin x = sum (-1)^m x^{2m+1} / (2m+1)!.
inline Series sin_series(int order) {
    Series s(order);
    for (int m = 0; 2 * m + 1 <= order; ++m) {
        Rat c(Int(1), factorial(2 * m + 1));
        s.set_coefficient(2 * m + 1, m % 2 ? -c : c);
    }
    return s;
}

/// cos x = sum (-1)^m x^{2m} / (2m)!.
inline Series cos_series(int order) {
    Series s(order);
    for (int m = 0; 2 * m <= order; ++m) {
        Rat c(Int(1), factorial(2 * m));
        s.set_coefficient(2 * m, m % 2 ? -c : c);
    }
    return s;
}

/// sin(x)/x = sum (-1)^m x^{2m} / (2m+1)!  (unit constant term).
inline Series sinc_raw(int order) {
    Series s(order);
    for (int m = 0; 2 * m <= order; ++m) {
        Rat c(Int(1), factorial(2 * m + 1));
        s.set_coefficient(2 * m, m % 2 ? -c : c);
    }
    return s;
}

/**
 * S_d(t) = (dt/2) / sin(dt/2) — the reciprocal-sinc series whose t^{2g}
 * coefficient, divided by d^{2g}, is the one-pointed top-lambda integral
 * against psi^{2g-2}.  S_1 = 1 + t^2/24 + 7 t^4/5760 + ...
 */
inline Series sinc_series(long d, int order) {
    if (d < 1) throw std::domain_error("sinc_series: d must be >= 1");
    return Series::constant(Rat(1), order) / sinc_raw(order).scale_variable(Rat(d, 2));
}

/// log S_d(t); log S_1 = t^2/24 + t^4/2880 + t^6/181440 + ...
inline Series log_sinc_series(long d, int order) {
    return sinc_series(d, order).log();
}

/// -log cos(t/2) = t^2/8 + t^4/192 + t^6/2880 + ...
inline Series neg_log_cos_half_series(int order) {
    return -cos_series(order).scale_variable(Rat(1, 2)).log();
}

/**
 * The tree series: compositional inverse of x e^{-x}, with coefficients
 * r^{r-1}/r! (rooted labelled trees / r!).
 */
inline Series tree_series(int order) {
    if (order < 1) throw std::domain_error("tree_series: order must be >= 1");
    const Series xe = exp_series(order).scale_variable(Rat(-1)).shift_up(1).truncate(order);
    return xe.reversion();
}

}  // namespace taut
