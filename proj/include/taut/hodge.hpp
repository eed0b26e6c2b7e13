#pragma once

#include <stdexcept>
#include <vector>

#include "taut/combinatorics.hpp"
#include "taut/linalg.hpp"
#include "taut/named_series.hpp"
#include "taut/partition.hpp"
#include "taut/rational.hpp"
#include "taut/series.hpp"
#include "taut/sides.hpp"

namespace taut {

/// |B_{2g}| / 2g, the weight converting the normalized socle polynomial
/// into actual integrals of psi and lambda classes.
inline Rat bernoulli_weight(long g) {
    if (g < 1) throw std::invalid_argument("bernoulli_weight requires g >= 1");
    return bernoulli_abs(2 * g) / Rat(2 * g);
}

// ---------------------------------------------------------------------------
// The socle polynomial P_g.
//
// For g >= 1 define P_g(k) of degree g - 1 by
//
//   (|B_{2g}| / 2g) P_g(k)
//     = sum_{i=0}^{g-1} (-1)^i k^{g-1-i} int_{Mbar_{g,1}} psi^{g-1-i}
//                                         lambda_i lambda_g lambda_{g-1}.
//
// Its values at positive integers admit the closed form
//
//   P_g(k) = sum_{l=1}^{k} (k-1)!/(k-l)! * k^{-l}
//            * sum_{m=1}^{l} (-1)^{l-m} C(l,m) m^{2g+l-1} / (2g+l-1)!,
//
// whose inner sum is l! S(2g-1+l, l) / (2g+l-1)! in terms of Stirling
// numbers of the second kind.  The two forms are implemented separately
// (the Stirling numbers themselves have two independent implementations).
// ---------------------------------------------------------------------------

inline Rat socle_polynomial_double_sum(long g, long k) {
    if (g < 1 || k < 1) throw std::invalid_argument("socle_polynomial requires g, k >= 1");
    Rat total;
    for (long l = 1; l <= k; ++l) {
        Rat inner;
        for (long m = 1; m <= l; ++m) {
            const Rat term = Rat(binomial(l, m) * ipow(m, 2 * g + l - 1),
                                 factorial(2 * g + l - 1));
            inner += ((l - m) % 2 == 0) ? term : -term;
        }
        total += Rat(factorial(k - 1), factorial(k - l)) * rpow(k, -l) * inner;
    }
    return total;
}

inline Rat socle_polynomial_stirling(long g, long k) {
    if (g < 1 || k < 1) throw std::invalid_argument("socle_polynomial requires g, k >= 1");
    Rat total;
    for (long l = 1; l <= k; ++l) {
        const Rat inner = Rat(factorial(l) * stirling2(2 * g - 1 + l, l),
                              factorial(2 * g - 1 + l));
        total += Rat(factorial(k - 1), factorial(k - l)) * rpow(k, -l) * inner;
    }
    return total;
}

/**
 * Coefficients of P_g as a polynomial: entry i is the coefficient of
 * k^{g-1-i} for 0 <= i <= g - 1, recovered exactly from the g values
 * P_g(1), ..., P_g(g) by solving the Vandermonde system.
 */
inline std::vector<Rat> socle_polynomial_coefficients_from_values(long g,
                                                                  const std::vector<Rat>& values) {
    if (static_cast<long>(values.size()) != g)
        throw std::invalid_argument("need exactly g values of the socle polynomial");
    Mat a(static_cast<size_t>(g), Vec(static_cast<size_t>(g)));
    for (long k = 1; k <= g; ++k)
        for (long i = 0; i < g; ++i)
            a[static_cast<size_t>(k - 1)][static_cast<size_t>(i)] = Rat(ipow(k, g - 1 - i));
    return solve_exact(std::move(a), values);
}

inline std::vector<Rat> socle_polynomial_coefficients(long g) {
    std::vector<Rat> values;
    for (long k = 1; k <= g; ++k) values.push_back(socle_polynomial_stirling(g, k));
    return socle_polynomial_coefficients_from_values(g, values);
}

// ---------------------------------------------------------------------------
// One-point integrals with a jet weight.
//
//   Q(g,e) = int_{Mbar_{g,1}} [ sum_i (-1)^i lambda_i / (1 - e psi) ]
//                              lambda_g lambda_{g-1}
//          = (|B_{2g}| / 2g) P_g(e),
//
//   I(g,k) = int_{Mbar_{g,1}} [ sum_i (-1)^i lambda_i
//                               / prod_{i=1}^{k} (1 - i psi) ]
//                              lambda_g lambda_{g-1}.
//
// I admits a closed form and a partial-fraction expansion in terms of Q;
// both are implemented.
// ---------------------------------------------------------------------------

inline Rat q_value(long g, long e) { return bernoulli_weight(g) * socle_polynomial_stirling(g, e); }

inline Rat i_value_closed(long g, long k) {
    if (g < 1 || k < 1) throw std::invalid_argument("i_value requires g, k >= 1");
    Rat sum;
    for (long j = 1; j <= k; ++j) {
        const Rat term = Rat(ipow(j, k - 1 + 2 * g), factorial(k - j) * factorial(j));
        sum += ((k - j) % 2 == 0) ? term : -term;
    }
    return Rat(factorial(k - 1), factorial(2 * g + k - 1)) * bernoulli_weight(g) * sum;
}

inline Rat i_value_via_q(long g, long k) {
    Rat sum;
    for (long e = 1; e <= k; ++e) {
        const Rat term =
            q_value(g, e) * Rat(ipow(e, k) * binomial(k, e), factorial(k));
        sum += ((k - e) % 2 == 0) ? term : -term;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Socle integrals int psi^{g-1-i} lambda_i lambda_g lambda_{g-1}.
// ---------------------------------------------------------------------------

/// Direct route: weight * (-1)^i * (coefficient of k^{g-1-i} in P_g).
inline std::vector<Rat> socle_integrals(long g) {
    const std::vector<Rat> c = socle_polynomial_coefficients(g);
    std::vector<Rat> out(static_cast<size_t>(g));
    const Rat w = bernoulli_weight(g);
    for (long i = 0; i < g; ++i) {
        Rat v = w * c[static_cast<size_t>(i)];
        out[static_cast<size_t>(i)] = (i % 2 == 0) ? v : -v;
    }
    return out;
}

/**
 * The lower-triangular change of basis between the I and P families:
 * B(i,j) = (-1)^{i+j} j^{i-1} C(i,j) for 1 <= j <= i <= n.
 */
inline Mat jet_transform(int n) {
    Mat b(static_cast<size_t>(n), Vec(static_cast<size_t>(n)));
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j) {
            Rat v = Rat(ipow(j, i - 1) * binomial(i, j));
            b[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                ((i + j) % 2 == 0) ? v : -v;
        }
    return b;
}

/// Explicit inverse: B^{-1}(i,j) = C(i-1, j-1) i^{1-j}.
inline Mat jet_transform_inverse(int n) {
    Mat b(static_cast<size_t>(n), Vec(static_cast<size_t>(n)));
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j)
            b[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                Rat(binomial(i - 1, j - 1)) * rpow(i, 1 - j);
    return b;
}

/**
 * Second route to the socle polynomial values: with
 * A(j) = j (|B_{2g}|/2g) P_g(j) and V(j) = j^{2g}, the families satisfy
 * B A = D B V where D(k,k) = (k-1)!/(2g+k-1)! |B_{2g}|/2g.  Row k of the
 * right side evaluates to k! I(g,k), so A = B^{-1} (k! I(g,k))_k recovers
 * the P values from the closed-form I values alone.
 */
inline std::vector<Rat> socle_polynomial_values_via_jets(long g, long max_k) {
    std::vector<Rat> ivec;
    for (long j = 1; j <= max_k; ++j) ivec.push_back(Rat(factorial(j)) * i_value_closed(g, j));
    const Mat binv = jet_transform_inverse(static_cast<int>(max_k));
    const Vec a = mat_vec(binv, ivec);
    std::vector<Rat> p(static_cast<size_t>(max_k));
    const Rat w = bernoulli_weight(g);
    for (long k = 1; k <= max_k; ++k) p[static_cast<size_t>(k - 1)] = a[static_cast<size_t>(k - 1)] / (Rat(k) * w);
    return p;
}

/// Socle integrals recovered through the jet (matrix) route.
inline std::vector<Rat> socle_integrals_via_jets(long g) {
    std::vector<Rat> values = socle_polynomial_values_via_jets(g, g);
    const std::vector<Rat> c = socle_polynomial_coefficients_from_values(g, values);
    std::vector<Rat> out(static_cast<size_t>(g));
    const Rat w = bernoulli_weight(g);
    for (long i = 0; i < g; ++i) {
        Rat v = w * c[static_cast<size_t>(i)];
        out[static_cast<size_t>(i)] = (i % 2 == 0) ? v : -v;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coefficients of powers of the tree series tau(x) (the inverse of x e^{-x}).
// Three independent routes for C(x^r, tau^l).
// ---------------------------------------------------------------------------

/// Closed form (Lagrange inversion): C(x^r, tau^l) = l! C(r-1, l-1) r^{r-l} / r!.
inline Rat tau_power_coefficient_closed(long r, long l) {
    if (r < 0 || l < 0) throw std::invalid_argument("tau_power_coefficient: negative argument");
    if (r == 0) return l == 0 ? Rat(1) : Rat(0);
    if (l == 0 || l > r) return Rat(0);
    return Rat(factorial(l) * binomial(r - 1, l - 1) * ipow(r, r - l), factorial(r));
}

/// Power-series route: expand tau(x)^l and read off the coefficient.
inline Rat tau_power_coefficient_series(long r, long l) {
    if (r < 0 || l < 0) throw std::invalid_argument("tau_power_coefficient: negative argument");
    if (r == 0) return l == 0 ? Rat(1) : Rat(0);
    return tree_series(static_cast<int>(r)).pow(static_cast<int>(l)).coefficient(static_cast<int>(r));
}

/// Partition route: C(x^r, tau^l) = l! sum over length-l partitions m of r
/// of (prod m_i^{m_i - 1} / m_i!) / |Aut(m)|.
inline Rat tau_power_coefficient_partitions(long r, long l) {
    if (r < 0 || l < 0) throw std::invalid_argument("tau_power_coefficient: negative argument");
    Rat sum;
    for (const Partition& m : partitions_of(r, static_cast<int>(l))) {
        Rat prod(1);
        for (long part : m.parts()) prod *= Rat(ipow(part, part - 1), factorial(part));
        sum += prod / Rat(m.aut_order());
    }
    return Rat(factorial(l)) * sum;
}

// ---------------------------------------------------------------------------
// The localization coefficients f(g,d,e), d >= e >= 1:
//
//   f(g,d,e) = (e^{e+1} / e!) sum_{l=0}^{2g} [(2g+d-l-1)!/(2g-l)!]
//                                 [(-d)^l / l!] C(x^{d-e}, tau^l).
//
// The factorial ratio is implemented as the product of the d-1 consecutive
// integers following 2g-l, which extends it by zero whenever the falling
// range crosses zero (the convention needed for l > 2g).
// ---------------------------------------------------------------------------

inline Rat genus_degree_ratio(long two_g, long d, long l) {
    Int p(1);
    for (long i = 1; i <= d - 1; ++i) p *= Int(two_g - l + i);
    return Rat(p);
}

inline Rat f_value(long g, long d, long e) {
    if (g < 1 || e < 1 || d < e) throw std::invalid_argument("f_value requires g >= 1, d >= e >= 1");
    Rat sum;
    for (long l = 0; l <= 2 * g; ++l) {
        const Rat c = tau_power_coefficient_closed(d - e, l);
        if (c.is_zero()) continue;
        sum += genus_degree_ratio(2 * g, d, l) * Rat(ipow(-d, l), factorial(l)) * c;
    }
    return Rat(ipow(e, e + 1), factorial(e)) * sum;
}

/// Same quantity assembled through the partition route for the tau coefficients.
inline Rat f_value_partitions(long g, long d, long e) {
    if (g < 1 || e < 1 || d < e) throw std::invalid_argument("f_value requires g >= 1, d >= e >= 1");
    Rat sum;
    for (long l = 0; l <= 2 * g; ++l) {
        const Rat c = tau_power_coefficient_partitions(d - e, l);
        if (c.is_zero()) continue;
        sum += genus_degree_ratio(2 * g, d, l) * Rat(ipow(-d, l), factorial(l)) * c;
    }
    return Rat(ipow(e, e + 1), factorial(e)) * sum;
}

// ---------------------------------------------------------------------------
// Generating series and the main series identities.
// ---------------------------------------------------------------------------

struct SeriesSides {
    Series lhs;
    Series rhs;
    int order;
    bool equal() const { return equal_to_order(lhs, rhs, order); }
};

/// G_k(t) = sum_{g >= 1} t^{2g+k-1} I(g,k).
inline Series jet_generating_series(long k, int order) {
    Series s(order);
    for (long g = 1; 2 * g + k - 1 <= order; ++g)
        s.set_coefficient(static_cast<int>(2 * g + k - 1), i_value_closed(g, k));
    return s;
}

/**
 * The derived logarithmic identity for G_k:
 *   d^{k-1} G_k / dt^{k-1}
 *     = sum_{j=1}^{k} (-1)^{k-j} (j^{k-1}/k) C(k,j) log((jt/2)/sin(jt/2)),
 * compared as series through t^order.
 */
inline SeriesSides theorem2_sides(long k, int order) {
    if (k < 1) throw std::invalid_argument("theorem2_sides requires k >= 1");
    Series lhs = jet_generating_series(k, order + static_cast<int>(k) - 1);
    for (long i = 0; i < k - 1; ++i) lhs = lhs.derivative();
    Series rhs(order);
    for (long j = 1; j <= k; ++j) {
        const Rat c = Rat(ipow(j, k - 1) * binomial(k, j), Int(k));
        const Series piece = log_sinc_series(j, order);
        rhs = rhs + (((k - j) % 2 == 0) ? c : -c) * piece;
    }
    return {lhs, rhs, order};
}

/**
 * The localization identity: for d >= 1,
 *   sum_{e=1}^{d} sum_{g >= 1} Q(g,e) f(g,d,e) t^{2g}
 *     = d^{d-1} log((dt/2)/sin(dt/2)),
 * compared as series through t^order.
 */
inline SeriesSides prop1_sides(long d, int order) {
    if (d < 1) throw std::invalid_argument("prop1_sides requires d >= 1");
    Series lhs(order);
    for (long g = 1; 2 * g <= order; ++g) {
        Rat c;
        for (long e = 1; e <= d; ++e) c += q_value(g, e) * f_value(g, d, e);
        lhs.set_coefficient(static_cast<int>(2 * g), c);
    }
    const Series rhs = rpow(d, d - 1) * log_sinc_series(d, order);
    return {lhs, rhs, order};
}

/**
 * The binomial reduction of the f-coefficients: for k >= e >= 1,
 *   sum_{j=e}^{k} (-1)^{k-j} (j^{k-j}/k) C(k,j) f(g,j,e)
 *     = [(2g+k-1)!/(2g)!] (-1)^{k-e} (e^k/k!) C(k,e).
 */
inline Sides prop2_sides(long g, long k, long e) {
    if (e < 1 || k < e) throw std::invalid_argument("prop2_sides requires k >= e >= 1");
    Rat lhs;
    for (long j = e; j <= k; ++j) {
        const Rat term = Rat(ipow(j, k - j) * binomial(k, j), Int(k)) * f_value(g, j, e);
        lhs += ((k - j) % 2 == 0) ? term : -term;
    }
    Rat rhs = Rat(factorial(2 * g + k - 1), factorial(2 * g)) *
              Rat(ipow(e, k) * binomial(k, e), factorial(k));
    if ((k - e) % 2 != 0) rhs = -rhs;
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// The combinatorial cascade underneath prop2, innermost first.  Each layer
// is checked directly on integer instances.
// ---------------------------------------------------------------------------

/// sum_{s=0}^{n} (-1)^s C(n,s) (s+t)^{n-1} = 0 for n >= 1.
inline Sides alternating_power_sum_sides(long n, long t) {
    if (n < 1) throw std::invalid_argument("alternating_power_sum_sides requires n >= 1");
    Rat lhs;
    for (long s = 0; s <= n; ++s) {
        const Rat term = Rat(binomial(n, s) * ipow(s + t, n - 1));
        lhs += (s % 2 == 0) ? term : -term;
    }
    return {lhs, Rat(0)};
}

/// sum_{s=0}^{z-t} C(z-t,s) (e+s+t)^{z-t-s} (-s-t)^{s-1} = -e^{z-t}/t
/// for 1 <= t <= z.
inline Sides shifted_power_sum_sides(long z, long t, long e) {
    if (t < 1 || z < t) throw std::invalid_argument("shifted_power_sum_sides requires 1 <= t <= z");
    Rat lhs;
    for (long s = 0; s <= z - t; ++s)
        lhs += Rat(binomial(z - t, s)) * Rat(ipow(e + s + t, z - t - s)) * rpow(-s - t, s - 1);
    return {lhs, -Rat(ipow(e, z - t)) / Rat(t)};
}

/// Coefficient matching after the binomial re-expansion: for 1 <= t <= k-e,
///   sum_{j=e+1}^{k} sum_{l=1}^{j-e} C(j-e-l, t-l) C(k,j) C(j-1,e-1)
///       C(j-e-1,l-1) j^{k-j+l} (e-j)^{j-e-l}  =  e^{k-e} C(k,e) C(k-e,t).
inline Sides coefficient_matching_sides(long k, long e, long t) {
    if (e < 1 || t < 1 || t > k - e)
        throw std::invalid_argument("coefficient_matching_sides requires 1 <= t <= k - e");
    Rat lhs;
    for (long j = e + 1; j <= k; ++j)
        for (long l = 1; l <= j - e; ++l) {
            const Int b = binomial(j - e - l, t - l) * binomial(k, j) * binomial(j - 1, e - 1) *
                          binomial(j - e - 1, l - 1);
            if (b.is_zero()) continue;
            lhs += Rat(b * ipow(j, k - j + l) * ipow(e - j, j - e - l));
        }
    return {lhs, Rat(ipow(e, k - e) * binomial(k, e) * binomial(k - e, t))};
}

/// The binomial form equivalent to prop2: for k > e >= 1,
///   sum_{j=e+1}^{k} sum_{l=1}^{j-e} C(2g+j-l-1, j-1) C(k,j) C(j-1,e-1)
///       C(j-e-1,l-1) j^{k-j+l} (e-j)^{j-e-l}
///     = e^{k-e} C(k,e) [ C(2g+k-1, k-1) - C(2g+e-1, e-1) ].
inline Sides binomial_reduction_sides(long g, long k, long e) {
    if (e < 1 || k <= e) throw std::invalid_argument("binomial_reduction_sides requires k > e >= 1");
    Rat lhs;
    for (long j = e + 1; j <= k; ++j)
        for (long l = 1; l <= j - e; ++l) {
            const Int b = binomial(2 * g + j - l - 1, j - 1) * binomial(k, j) *
                          binomial(j - 1, e - 1) * binomial(j - e - 1, l - 1);
            if (b.is_zero()) continue;
            lhs += Rat(b * ipow(j, k - j + l) * ipow(e - j, j - e - l));
        }
    const Rat rhs = Rat(ipow(e, k - e) * binomial(k, e)) *
                    Rat(binomial(2 * g + k - 1, k - 1) - binomial(2 * g + e - 1, e - 1));
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Hyperelliptic evaluations.
// ---------------------------------------------------------------------------

/// Closed Bernoulli form of the hyperelliptic socle evaluation, g >= 2:
/// (2^{2g} - 1) |B_{2g}| / ((2g+2)! 2g).
inline Rat hyperelliptic_closed(long g) {
    if (g < 2) throw std::invalid_argument("hyperelliptic_closed requires g >= 2");
    return Rat(ipow(2, 2 * g) - Int(1)) * bernoulli_abs(2 * g) /
           (Rat(factorial(2 * g + 2)) * Rat(2 * g));
}

/// The same evaluation as I(g,2) / (2g+2); also meaningful at g = 1
/// (where it produces the conventional t^2/96 series term).
inline Rat hyperelliptic_via_jets(long g) { return i_value_via_q(g, 2) / Rat(2 * g + 2); }

/// Series route: coefficient of t^{2g} in -log cos(t/2), divided by
/// (2g+2)(2g+1).
inline Rat hyperelliptic_series_coefficient(long g) {
    if (g < 1) throw std::invalid_argument("hyperelliptic_series_coefficient requires g >= 1");
    const Series s = neg_log_cos_half_series(static_cast<int>(2 * g));
    return s.coefficient(static_cast<int>(2 * g)) / Rat((2 * g + 2) * (2 * g + 1));
}

/// The even-binomial identity used in the hyperelliptic evaluation:
/// 1 + (1/2) sum_{h=1}^{g} C(2g+2, 2h) = 2^{2g}.
inline Sides binomial_power_sum_sides(long g) {
    Int sum(0);
    for (long h = 1; h <= g; ++h) sum += binomial(2 * g + 2, 2 * h);
    return {Rat(1) + Rat(sum, Int(2)), Rat(ipow(2, 2 * g))};
}

// ---------------------------------------------------------------------------
// The vanishing localization sum.
//
// For g, d >= 1 the equivariant integral P(g,d) vanishes identically, while
// localization expresses it through Hodge integrals:
//
//   0 = -(-1)^{d-g} d^{d-2} [t^{2g}] (S_d log S_d)
//       + sum_{h=1}^{g} sum_{e=1}^{d} sum_{m partition of d-e}
//         [(-1)^{d-g}/d] Q(h,e) (e^{e+1}/e!) [(2h+d-l-1)!/(2h-l)!]
//         [(-d)^l / |Aut(m)|] prod_i m_i^{m_i-1}/m_i! * [t^{2(g-h)}] S_d,
//
// where S_d = (dt/2)/sin(dt/2), l is the length of m, and the coefficient
// [t^0] S_d = 1 covers the degenerate h = g case.  Assembling the right
// side from the independently computed pieces and checking that it
// vanishes exercises every ingredient at once.
// ---------------------------------------------------------------------------

inline Rat localization_sum(long g, long d) {
    if (g < 1 || d < 1) throw std::invalid_argument("localization_sum requires g, d >= 1");
    const int order = static_cast<int>(2 * g);
    const Series sd = sinc_series(d, order);
    const Series sd_log = sd * log_sinc_series(d, order);
    const bool flip = ((d - g) % 2) != 0;  // sign of (-1)^{d-g}
    Rat total = -rpow(d, d - 2) * sd_log.coefficient(order);
    if (flip) total = -total;

    for (long h = 1; h <= g; ++h) {
        const Rat qh_base = bernoulli_weight(h);
        for (long e = 1; e <= d; ++e) {
            const Rat qhe = qh_base * socle_polynomial_stirling(h, e);
            for (const Partition& m : partitions_of(d - e)) {
                const long l = m.length();
                Rat prod(1);
                for (long part : m.parts()) prod *= Rat(ipow(part, part - 1), factorial(part));
                Rat term = qhe * Rat(ipow(e, e + 1), factorial(e)) *
                           genus_degree_ratio(2 * h, d, l) *
                           Rat(ipow(-d, l), m.aut_order()) * prod *
                           sd.coefficient(static_cast<int>(2 * (g - h))) / Rat(d);
                if (flip) term = -term;
                total += term;
            }
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// The one-point lambda series
//   1 + sum_{g >= 1} sum_{i=0}^{g} t^{2g} k^i int psi^{2g-2+i} lambda_{g-i}
//     = ((t/2)/sin(t/2))^{k+1}.
// ---------------------------------------------------------------------------

/**
 * Extracts the integrals int psi^{2g-2+i} lambda_{g-i} for g <= max_g,
 * 0 <= i <= g, from the values of ((t/2)/sin(t/2))^{k+1} at k = 0..g
 * (an exact Vandermonde solve in each genus).
 */
inline std::vector<std::vector<Rat>> one_point_lambda_integrals(long max_g) {
    const int order = static_cast<int>(2 * max_g);
    std::vector<Series> powers;  // powers[k] = S_1^{k+1}
    Series s1 = sinc_series(1, order);
    Series acc = s1;
    for (long k = 0; k <= max_g; ++k) {
        powers.push_back(acc);
        acc = acc * s1;
    }
    std::vector<std::vector<Rat>> table(static_cast<size_t>(max_g) + 1);
    table[0] = {Rat(1)};
    for (long g = 1; g <= max_g; ++g) {
        Mat a(static_cast<size_t>(g) + 1, Vec(static_cast<size_t>(g) + 1));
        Vec b(static_cast<size_t>(g) + 1);
        for (long k = 0; k <= g; ++k) {
            for (long i = 0; i <= g; ++i)
                a[static_cast<size_t>(k)][static_cast<size_t>(i)] = Rat(ipow(k, i));
            b[static_cast<size_t>(k)] = powers[static_cast<size_t>(k)].coefficient(static_cast<int>(2 * g));
        }
        table[static_cast<size_t>(g)] = solve_exact(std::move(a), std::move(b));
    }
    return table;
}

/// Checks the identity at a fixed integer k as a series comparison to t^order.
inline SeriesSides one_point_lambda_series_sides(long k, int order) {
    if (k < 0) throw std::invalid_argument("one_point_lambda_series_sides requires k >= 0");
    const Series rhs = sinc_series(1, order).pow(static_cast<int>(k + 1));
    const auto table = one_point_lambda_integrals(order / 2);
    Series lhs(order);
    lhs.set_coefficient(0, Rat(1));
    for (long g = 1; 2 * g <= order; ++g) {
        Rat c;
        for (long i = 0; i <= g; ++i)
            c += Rat(ipow(k, i)) * table[static_cast<size_t>(g)][static_cast<size_t>(i)];
        lhs.set_coefficient(static_cast<int>(2 * g), c);
    }
    return {lhs, rhs, order};
}

// ---------------------------------------------------------------------------
// Named closed-form evaluations with their independent cross-routes.
// ---------------------------------------------------------------------------

/// int kappa_{3g-3} = 1/(24^g g!) (the full moduli socle evaluation).
inline Rat kappa_top_closed(long g) {
    if (g < 1) throw std::invalid_argument("kappa_top_closed requires g >= 1");
    return Rat(Int(1), ipow(24, g) * factorial(g));
}

/// int kappa_{2g-3} lambda_g = (2^{2g-1}-1)/2^{2g-1} * |B_{2g}|/(2g)!.
inline Rat kappa_lambda_closed(long g) {
    if (g < 2) throw std::invalid_argument("kappa_lambda_closed requires g >= 2");
    return Rat(ipow(2, 2 * g - 1) - Int(1)) / Rat(ipow(2, 2 * g - 1)) * bernoulli_abs(2 * g) /
           Rat(factorial(2 * g));
}

/// Cross-route for the same integral: [t^{2g}] of (t/2)/sin(t/2).
inline Rat kappa_lambda_series_coefficient(long g) {
    return sinc_series(1, static_cast<int>(2 * g)).coefficient(static_cast<int>(2 * g));
}

/// int kappa_{g-2} lambda_g lambda_{g-1} = |B_{2g}| / (2g * 2^{2g-1} (2g-1)!!).
inline Rat socle_kappa_closed(long g) {
    if (g < 2) throw std::invalid_argument("socle_kappa_closed requires g >= 2");
    return bernoulli_weight(g) * Rat(Int(1), ipow(2, 2 * g - 1) * double_factorial(2 * g - 1));
}

/// int lambda_g lambda_{g-1} lambda_{g-2}
///   = |B_{2g-2}|/(2(2g-2)!(2g-2)) * |B_{2g}|/2g.
inline Rat triple_lambda_closed(long g) {
    if (g < 2) throw std::invalid_argument("triple_lambda_closed requires g >= 2");
    return bernoulli_abs(2 * g - 2) / (Rat(2) * Rat(factorial(2 * g - 2)) * Rat(2 * g - 2)) *
           bernoulli_weight(g);
}

/// Cross-route: the linear coefficient of P_g gives
/// int lambda_g lambda_{g-1} lambda_{g-2} = (-1)^g (|B_{2g}|/2g) [k^1] P_g / (2g-2).
inline Rat triple_lambda_via_socle_polynomial(long g) {
    if (g < 2) throw std::invalid_argument("triple_lambda_via_socle_polynomial requires g >= 2");
    const std::vector<Rat> c = socle_polynomial_coefficients(g);
    const Rat linear = c[static_cast<size_t>(g - 2)];  // coefficient of k^1
    Rat v = bernoulli_weight(g) * linear / Rat(2 * g - 2);
    return (g % 2 == 0) ? v : -v;
}

}  // namespace taut
