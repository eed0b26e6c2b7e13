#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "taut/combinatorics.hpp"
#include "taut/linalg.hpp"
#include "taut/rational.hpp"
#include "taut/series2.hpp"
#include "taut/sides.hpp"

namespace taut {

/**
 * Intersection numbers of psi classes on moduli of stable curves,
 * written <tau_{d_1} ... tau_{d_n}>.  The genus is determined by the
 * dimension constraint sum(d_i) = 3g - 3 + n; a bracket whose indices do
 * not satisfy that constraint for any non-negative integer g is zero.
 */
struct BracketShape {
    bool valid = false;   // true iff indices match the dimension of some moduli space
    long genus = -1;      // defined only when valid
    long n = 0;           // number of insertions
};

inline BracketShape bracket_shape(const std::vector<long>& indices) {
    BracketShape s;
    s.n = static_cast<long>(indices.size());
    long total = 0;
    for (long d : indices) {
        if (d < 0) return s;
        total += d;
    }
    // total = 3g - 3 + n  =>  g = (total + 3 - n) / 3
    const long numer = total + 3 - s.n;
    if (numer < 0 || numer % 3 != 0) return s;
    const long g = numer / 3;
    // The moduli space must be stable: 2g - 2 + n > 0.
    if (2 * g - 2 + s.n <= 0) return s;
    s.valid = true;
    s.genus = g;
    return s;
}

/**
 * Engine computing psi-class brackets by exact rational arithmetic.
 *
 * Everything is derived from three inputs:
 *   - the normalization <tau_0^3> = 1,
 *   - the string equation  <tau_0 prod tau_{d_i}> = sum_i <... tau_{d_i - 1} ...>,
 *   - the KdV coefficient equation
 *       (2n+1) <tau_n tau_0^2 T>
 *         = 1/4 <tau_{n-1} tau_0^4 T>
 *         + sum over factorizations T = T1 T2 of
 *              <tau_{n-1} tau_0 T1><tau_0^3 T2> + 2 <tau_{n-1} tau_0^2 T1><tau_0^2 T2>.
 *
 * Specializing T to a single tau gives a closed recursion for the table
 * t(a,b) = <tau_0 tau_a tau_b>; the string equation then determines all
 * two-point values, and specializing T to a pair of taus gives, for each
 * total degree, an overdetermined exact linear system for the remaining
 * three-point values (solved by Gaussian elimination, with the
 * consistency of the overdetermined system checked as it is solved).
 *
 * The dilaton equation is deliberately *not* used in any of these
 * constructions, so it stays available as an independent cross-check.
 *
 * All public methods are safe to call concurrently; the internal tables
 * grow under a mutex and are only appended to.
 */
class Brackets {
public:
    static Brackets& instance() {
        static Brackets b;
        return b;
    }

    /// <tau_{3g-2}> = 1 / (24^g g!); the g = 0 value is not a stable bracket.
    Rat one_point(long g) {
        if (g < 1) return Rat(0);
        return Rat(Int(1), ipow(24, g) * factorial(g));
    }

    /// <tau_a tau_b>; zero unless a + b = 3g - 1 for some g >= 1.
    Rat two_point(long a, long b) {
        if (a < 0 || b < 0) return Rat(0);
        const long m = a + b;
        if (m % 3 != 2) return Rat(0);
        std::lock_guard<std::mutex> lock(mu_);
        ensure_two_locked(m);
        return two_.at(m)[static_cast<size_t>(std::min(a, b))];
    }

    /// <tau_0 tau_a tau_b>; zero unless a + b = 3g for some g >= 0.
    Rat three_point_tau0(long a, long b) {
        if (a < 0 || b < 0) return Rat(0);
        std::lock_guard<std::mutex> lock(mu_);
        ensure_t_locked(a + b);
        return t_locked(a, b);
    }

    /// <tau_a tau_b tau_c> for arbitrary non-negative indices.
    Rat three_point(long a, long b, long c) {
        if (a < 0 || b < 0 || c < 0) return Rat(0);
        std::array<long, 3> v{a, b, c};
        std::sort(v.begin(), v.end());
        if ((v[0] + v[1] + v[2]) % 3 != 0) return Rat(0);
        std::lock_guard<std::mutex> lock(mu_);
        if (v[0] == 0) {
            ensure_t_locked(v[1] + v[2]);
            return t_locked(v[1], v[2]);
        }
        ensure_u_locked(v[0] + v[1] + v[2]);
        return u_.at(v);
    }

    /**
     * General bracket evaluation.  Handles any number of insertions for
     * which repeated use of the string equation (for a tau_0 insertion)
     * or the dilaton equation (for a tau_1 insertion) reduces the
     * bracket to at most three points.  A bracket with four or more
     * insertions all of index >= 2 is outside that family and raises
     * std::domain_error.
     */
    Rat value(std::vector<long> indices) {
        std::sort(indices.begin(), indices.end());
        const BracketShape shape = bracket_shape(indices);
        if (!shape.valid) return Rat(0);
        std::lock_guard<std::mutex> lock(mu_);
        return value_locked(indices, shape);
    }

    /// Exports every bracket evaluated through value(), keyed by sorted indices.
    std::vector<std::pair<std::vector<long>, Rat>> export_memo() {
        std::lock_guard<std::mutex> lock(mu_);
        return {memo_.begin(), memo_.end()};
    }

    /// Seeds the value() memo table, e.g. from a persisted cache file.
    void import_memo(const std::vector<std::pair<std::vector<long>, Rat>>& entries) {
        std::lock_guard<std::mutex> lock(mu_);
        for (const auto& [k, v] : entries) {
            std::vector<long> key = k;
            std::sort(key.begin(), key.end());
            memo_[std::move(key)] = v;
        }
    }

    /// Test-only hook: overwrite one stored two-point value to exercise
    /// negative controls.  Returns the previous value; undo with reset().
    Rat corrupt_two_point_for_testing(long a, long b, const Rat& wrong) {
        const long m = a + b;
        if (a < 0 || b < 0 || m % 3 != 2)
            throw std::invalid_argument("corrupt_two_point_for_testing: no stored value");
        std::lock_guard<std::mutex> lock(mu_);
        ensure_two_locked(m);
        Rat& slot = two_.at(m)[static_cast<size_t>(std::min(a, b))];
        Rat old = slot;
        slot = wrong;
        return old;
    }

    /// Drops all cached tables (intended for tests).
    void reset() {
        std::lock_guard<std::mutex> lock(mu_);
        t_.clear();
        two_.clear();
        u_.clear();
        u_plane_built_ = 0;
        memo_.clear();
    }

private:
    Brackets() = default;

    // ----- t-table: t(a, b) = <tau_0 tau_a tau_b>, stored for a + b <= built -----

    // <tau_0 tau_m> = <tau_{m-1}>, non-zero only for m = 3g - 1.
    Rat tau0_pair_locked(long m) {
        if (m < 2 || m % 3 != 2) return Rat(0);
        return one_point((m + 1) / 3);
    }

    // Boundary value t(0, s) = <tau_0^2 tau_s>.
    Rat t_boundary(long s) {
        if (s == 0) return Rat(1);  // <tau_0^3> = 1 (normalization)
        if (s % 3 != 0) return Rat(0);
        return one_point(s / 3);
    }

    Rat t_locked(long a, long b) const {
        if (a > b) std::swap(a, b);
        const long s = a + b;
        return t_[static_cast<size_t>(s)][static_cast<size_t>(a)];
    }

    Rat t_or_zero_locked(long a, long b) const {
        if (a < 0 || b < 0) return Rat(0);
        return t_locked(a, b);
    }

    // <tau_0^4 tau_x tau_y> reduced by the string equation.
    Rat four_tau0_pair_locked(long x, long y) const {
        Rat sum;
        for (long p = 0; p <= 3; ++p) sum += Rat(binomial(3, p)) * t_or_zero_locked(x - p, y - (3 - p));
        return sum;
    }

    void ensure_t_locked(long max_sum) {
        for (long s = static_cast<long>(t_.size()); s <= max_sum; ++s) {
            std::vector<Rat> diag(static_cast<size_t>(s) + 1);
            diag[0] = t_boundary(s);
            t_.push_back(std::move(diag));
            // Sweep the antidiagonal a + b = s using the T = tau_b case of the
            // KdV coefficient equation, solved for t(a, b) with a increasing;
            // every other term lies on earlier antidiagonals or earlier in
            // this sweep.
            auto& row = t_.back();
            for (long a = 1; a <= s; ++a) {
                const long bb = s - a + 1;  // equation instance (a, bb) yields t(a, bb - 1)
                Rat rhs = Rat(1, 4) * four_tau0_pair_locked(a - 1, bb);
                rhs -= Rat(2 * a) * t_locked(a - 1, bb);
                rhs += tau0_pair_locked(a - 1) * t_boundary(bb - 1);
                rhs += Rat(2) * t_boundary(a - 1) * t_boundary(bb);
                const Rat val = rhs / Rat(2 * a + 1);
                if (2 * a <= s) {
                    row[static_cast<size_t>(a)] = val;
                } else if (!(val == row[static_cast<size_t>(s - a)])) {
                    // The sweep past the midpoint recomputes known entries
                    // (ending on the closed-form boundary), so the whole
                    // antidiagonal is internally overdetermined.
                    throw std::logic_error("three-point recursion lost symmetry");
                }
            }
        }
    }

    // ----- two-point table, one antidiagonal a + b = m per entry -----

    void ensure_two_locked(long m) {
        if (two_.count(m)) return;
        ensure_t_locked(m + 1);
        // String equation: t(a, b) = <tau_{a-1} tau_b> + <tau_a tau_{b-1}>.
        // Seed with <tau_0 tau_m> = <tau_{m-1}> and solve along the
        // antidiagonal; the final step reproduces <tau_m tau_0>, giving a
        // built-in consistency check of the whole sweep.
        std::vector<Rat> full(static_cast<size_t>(m) + 1);
        full[0] = tau0_pair_locked(m);
        for (long a = 1; a <= m; ++a)
            full[static_cast<size_t>(a)] = t_locked(a, m + 1 - a) - full[static_cast<size_t>(a - 1)];
        if (!(full[static_cast<size_t>(m)] == full[0]))
            throw std::logic_error("two-point string sweep inconsistent");
        std::vector<Rat> half(static_cast<size_t>(m / 2) + 1);
        for (long a = 0; a <= m / 2; ++a) {
            if (!(full[static_cast<size_t>(a)] == full[static_cast<size_t>(m - a)]))
                throw std::logic_error("two-point table lost symmetry");
            half[static_cast<size_t>(a)] = full[static_cast<size_t>(a)];
        }
        two_.emplace(m, std::move(half));
    }

    // ----- u-table: <tau_a tau_b tau_c> with all indices >= 1 -----

    Rat u_lookup_locked(long x, long y, long z) const {
        if (x < 0 || y < 0 || z < 0) return Rat(0);
        std::array<long, 3> v{x, y, z};
        std::sort(v.begin(), v.end());
        if ((v[0] + v[1] + v[2]) % 3 != 0) return Rat(0);
        if (v[0] == 0) return t_locked(v[1], v[2]);
        return u_.at(v);
    }

    void ensure_u_locked(long plane) {
        for (long p = u_plane_built_ + 1; p <= plane; ++p) solve_u_plane_locked(p);
        u_plane_built_ = std::max(u_plane_built_, plane);
    }

    /**
     * Determines all <tau_a tau_b tau_c> with min >= 1 and a+b+c = p from
     * the KdV coefficient equation with T = tau_b tau_c.  With knowns moved
     * to the right-hand side, each equation instance (a, b, c), a >= 1,
     * a+b+c = p+2, is linear in the plane-p unknowns with coefficients
     *
     *    2a       at (a-2, b,   c  )      4a+1  at (a-1, b-1, c  )
     *    4a+1     at (a-1, b,   c-1)      2a+1  at (a,   b-2, c  )
     *    2(2a+1)  at (a,   b-1, c-1)      2a+1  at (a,   b,   c-2)
     *
     * The system is heavily overdetermined; its unique solvability and
     * consistency are verified by solve_exact.
     */
    void solve_u_plane_locked(long p) {
        if (p % 3 != 0) return;  // every bracket on this plane is zero by dimension
        std::vector<std::array<long, 3>> unknowns;
        for (long x = 1; 3 * x <= p; ++x)
            for (long y = x; x + 2 * y <= p; ++y) {
                const long z = p - x - y;
                if (z >= y) unknowns.push_back({x, y, z});
            }
        if (unknowns.empty()) return;
        std::map<std::array<long, 3>, size_t> col;
        for (size_t i = 0; i < unknowns.size(); ++i) col[unknowns[i]] = i;

        ensure_t_locked(p + 2);
        Mat A;
        Vec rhs;
        for (long a = 1; a <= p + 2; ++a)
            for (long b = 0; 2 * b <= p + 2 - a; ++b) {
                const long c = p + 2 - a - b;
                Vec row(unknowns.size());
                Rat k;
                auto lhs_term = [&](long coeff, long x, long y, long z) {
                    if (x < 0 || y < 0 || z < 0) return;
                    std::array<long, 3> v{x, y, z};
                    std::sort(v.begin(), v.end());
                    if ((v[0] + v[1] + v[2]) % 3 != 0) return;
                    if (v[0] == 0)
                        k -= Rat(coeff) * t_locked(v[1], v[2]);
                    else
                        row[col.at(v)] += Rat(coeff);
                };
                lhs_term(2 * a, a - 2, b, c);
                lhs_term(4 * a + 1, a - 1, b - 1, c);
                lhs_term(4 * a + 1, a - 1, b, c - 1);
                lhs_term(2 * a + 1, a, b - 2, c);
                lhs_term(2 * (2 * a + 1), a, b - 1, c - 1);
                lhs_term(2 * a + 1, a, b, c - 2);

                // 1/4 <tau_{a-1} tau_0^4 tau_b tau_c>, string-reduced.
                for (long i = 0; i <= 4; ++i)
                    for (long j = 0; i + j <= 4; ++j) {
                        const long l = 4 - i - j;
                        const Rat mult(factorial(4), factorial(i) * factorial(j) * factorial(l));
                        k += Rat(1, 4) * mult * u_lookup_locked(a - 1 - i, b - j, c - l);
                    }
                // <tau_{a-1} tau_0 tau_b><tau_0^3 tau_c> and its mirror.
                k += t_or_zero_locked(a - 1, b) * (c >= 1 ? t_boundary(c - 1) : Rat(0));
                k += t_or_zero_locked(a - 1, c) * (b >= 1 ? t_boundary(b - 1) : Rat(0));
                // <tau_{a-1} tau_0><tau_0^3 tau_b tau_c>, string-reduced.
                Rat pair_sum;
                for (long j = 0; j <= 2; ++j)
                    pair_sum += Rat(binomial(2, j)) * t_or_zero_locked(b - j, c - (2 - j));
                k += tau0_pair_locked(a - 1) * pair_sum;
                // 2 <tau_{a-1} tau_0^2><tau_0^2 tau_b tau_c>.
                k += Rat(2) * t_boundary(a - 1) *
                     (t_or_zero_locked(b - 1, c) + t_or_zero_locked(b, c - 1));
                // 2 <tau_{a-1} tau_0^2 tau_b><tau_0^2 tau_c> and its mirror.
                k += Rat(2) * (t_or_zero_locked(a - 2, b) + t_or_zero_locked(a - 1, b - 1)) *
                     t_boundary(c);
                k += Rat(2) * (t_or_zero_locked(a - 2, c) + t_or_zero_locked(a - 1, c - 1)) *
                     t_boundary(b);

                bool nontrivial = !k.is_zero();
                for (const Rat& r : row) nontrivial = nontrivial || !r.is_zero();
                if (nontrivial) {
                    A.push_back(std::move(row));
                    rhs.push_back(k);
                }
            }
        Vec x = solve_exact(std::move(A), std::move(rhs));
        for (size_t i = 0; i < unknowns.size(); ++i) u_[unknowns[i]] = x[i];
    }

    // ----- general evaluation -----

    Rat value_locked(const std::vector<long>& indices, const BracketShape& shape) {
        if (auto it = memo_.find(indices); it != memo_.end()) return it->second;
        const long n = shape.n;
        Rat result;
        if (n == 1) {
            result = one_point(shape.genus);
        } else if (n == 2) {
            ensure_two_locked(indices[0] + indices[1]);
            result = two_.at(indices[0] + indices[1])[static_cast<size_t>(indices[0])];
        } else if (n == 3) {
            if (indices[0] == 0) {
                ensure_t_locked(indices[1] + indices[2]);
                result = t_locked(indices[1], indices[2]);
            } else {
                ensure_u_locked(indices[0] + indices[1] + indices[2]);
                result = u_.at({indices[0], indices[1], indices[2]});
            }
        } else if (indices[0] == 0) {
            // String equation: drop the tau_0, lower each remaining index.
            std::vector<long> rest(indices.begin() + 1, indices.end());
            for (size_t i = 0; i < rest.size(); ++i) {
                if (rest[i] == 0) continue;
                std::vector<long> lowered = rest;
                --lowered[i];
                std::sort(lowered.begin(), lowered.end());
                const BracketShape s = bracket_shape(lowered);
                if (s.valid) result += value_locked(lowered, s);
            }
        } else if (indices[0] == 1) {
            // Dilaton equation: <tau_1 X> = (2g - 2 + #X) <X>.
            std::vector<long> rest(indices.begin() + 1, indices.end());
            const BracketShape s = bracket_shape(rest);
            if (s.valid) result = Rat(2 * s.genus - 2 + s.n) * value_locked(rest, s);
        } else {
            throw std::domain_error(
                "bracket with four or more insertions all of index >= 2 is outside the "
                "supported family (no tau_0 for the string equation, no tau_1 for the dilaton "
                "equation)");
        }
        memo_[indices] = result;
        return result;
    }

    std::mutex mu_;
    std::vector<std::vector<Rat>> t_;       // t_[s][a] = t(a, s-a), a <= s/2
    std::map<long, std::vector<Rat>> two_;  // two_[m][a] = <tau_a tau_{m-a}>, a <= m/2
    std::map<std::array<long, 3>, Rat> u_;  // sorted indices, all >= 1
    long u_plane_built_ = 0;
    std::map<std::vector<long>, Rat> memo_;
};

// ---------------------------------------------------------------------------
// Generating functions.  Both are also computed independently of the bracket
// engine, from closed formulas, so coefficient-by-coefficient comparison of
// the two routes is a genuine cross-check.
// ---------------------------------------------------------------------------

/**
 * D(w, z) = sum_{a,b} <tau_0 tau_a tau_b> w^a z^b
 *         = exp((w^3 + z^3)/24) * sum_{n >= 0} n!/(2n+1)! * (wz(w+z)/2)^n,
 * truncated past total degree `order`.
 */
inline Series2 two_point_function(int order) {
    Series2 cube(order);
    if (order >= 3) {
        cube.set_coefficient(3, 0, Rat(1, 24));
        cube.set_coefficient(0, 3, Rat(1, 24));
    }
    Series2 result = cube.exp();
    Series2 sum = Series2::constant(Rat(1), order);
    if (order >= 3) {
        const Series2 m = Series2::monomial(Rat(1, 2), 2, 1, order) +
                          Series2::monomial(Rat(1, 2), 1, 2, order);
        Series2 mpow = m;
        for (long n = 1; 3 * n <= order; ++n) {
            sum = sum + Rat(factorial(n), factorial(2 * n + 1)) * mpow;
            if (3 * (n + 1) <= order) mpow = mpow * m;
        }
    }
    return result * sum;
}

/**
 * F(w, z) = sum_{a,b,c} (-1)^c <tau_a tau_b tau_c> w^a z^{b+c}
 *   (the three-point generating function evaluated at (w, z, -z))
 *         = exp(w^3/24) * sum_{a,b >= 0} w^{3a} (w z^2)^b
 *              * (a+b)! / (2^{a+b-1} (2a+2b+2)!) * C(a+b+1, 2a+1),
 * truncated past total degree `order`.
 */
inline Series2 three_point_diagonal_function(int order) {
    Series2 sum(order);
    for (long a = 0; 3 * a <= order; ++a)
        for (long b = 0; 3 * a + 3 * b <= order; ++b) {
            const Rat coeff = Rat(factorial(a + b) * binomial(a + b + 1, 2 * a + 1),
                                  factorial(2 * a + 2 * b + 2)) /
                              rpow(2, a + b - 1);
            sum = sum + Series2::monomial(coeff, static_cast<int>(3 * a + b),
                                          static_cast<int>(2 * b), order);
        }
    Series2 cube(order);
    if (order >= 3) cube.set_coefficient(3, 0, Rat(1, 24));
    return cube.exp() * sum;
}

/// D(w, z) assembled from the bracket engine instead of the closed formula.
inline Series2 two_point_function_from_brackets(int order) {
    Series2 d(order);
    auto& br = Brackets::instance();
    for (int a = 0; a <= order; ++a)
        for (int b = 0; a + b <= order; ++b)
            d.set_coefficient(a, b, br.three_point_tau0(a, b));
    return d;
}

/// F(w, z) assembled from the bracket engine instead of the closed formula.
inline Series2 three_point_diagonal_function_from_brackets(int order) {
    Series2 f(order);
    auto& br = Brackets::instance();
    for (int a = 0; a <= order; ++a)
        for (int m = 0; a + m <= order; ++m) {
            Rat coeff;
            for (int b = 0; b <= m; ++b) {
                const int c = m - b;
                const Rat v = br.three_point(a, b, c);
                coeff += (c % 2 == 0) ? v : -v;
            }
            f.set_coefficient(a, m, coeff);
        }
    return f;
}

/**
 * Residual of the KdV-derived PDE satisfied by D:
 *   (2 w d/dw + 1)((w + z) D) - [ (w+z)^3 w D / 4 + w D
 *                                 + D(w,0) z D(0,z) + 2 w D(w,0) D(0,z) ].
 * Zero through total degree `order` iff D satisfies the equation there.
 * Passing `perturb` adds w^3 z^3 to D first (a deliberate corruption used
 * as a negative control: the residual must become non-zero).
 */
inline Series2 two_point_pde_residual(int order, bool perturb = false) {
    Series2 d = two_point_function(order);
    if (perturb) d = d + Series2::monomial(Rat(1), 3, 3, order);
    const Series2 wz = d.shift_up(1, 0) + d.shift_up(0, 1);  // (w + z) D
    Series2 lhs = Rat(2) * wz.derivative_w().shift_up(1, 0) + wz;

    // (w + z)^3 w = w^4 + 3 w^3 z + 3 w^2 z^2 + w z^3
    Series2 rhs = Rat(1, 4) * (d.shift_up(4, 0) + Rat(3) * d.shift_up(3, 1) +
                               Rat(3) * d.shift_up(2, 2) + d.shift_up(1, 3));
    rhs = rhs + d.shift_up(1, 0);
    const Series2 dw0 = Series2::from_w(d.set_z_zero());
    const Series2 d0z = Series2::from_z(d.set_w_zero());
    const Series2 prod = dw0 * d0z;
    rhs = rhs + prod.shift_up(0, 1) + Rat(2) * prod.shift_up(1, 0);
    return (lhs - rhs).truncate(order);
}

/**
 * Residual of the ODE satisfied by F(w, z):
 *   4 w^2 F + 2 w^3 dF/dw - w^5 F / 4
 *     - [ w (2w + z) D(w,z) D(0,-z) + w (2w - z) D(w,-z) D(0,z) ].
 * Zero through total degree `order` iff F satisfies the equation there.
 */
inline Series2 three_point_ode_residual(int order, bool perturb = false) {
    Series2 f = three_point_diagonal_function(order);
    if (perturb) f = f + Series2::monomial(Rat(1), 3, 3, order);
    const Series2 d = two_point_function(order);
    Series2 lhs = Rat(4) * f.shift_up(2, 0) + Rat(2) * f.derivative_w().shift_up(3, 0) -
                  Rat(1, 4) * f.shift_up(5, 0);
    const Series2 d0z = Series2::from_z(d.set_w_zero());
    const Series2 dneg = d.negate_z();
    const Series2 p1 = d * d0z.negate_z();  // D(w,z) D(0,-z)
    const Series2 p2 = dneg * d0z;          // D(w,-z) D(0,z)
    Series2 rhs = Rat(2) * p1.shift_up(2, 0) + p1.shift_up(1, 1) +
                  Rat(2) * p2.shift_up(2, 0) - p2.shift_up(1, 1);
    return (lhs - rhs).truncate(order);
}

// ---------------------------------------------------------------------------
// Named identities.  Each returns the exact values of both sides (or of the
// independent routes) so callers can report them verbatim.
// ---------------------------------------------------------------------------

/**
 * Alternating one-point/two-point mixture summing to the one-point value:
 *   sum_{h=1}^{g} (-1)^{g-h} / (24^{g-h} (g-h)!) * <tau_{3h-g} tau_{g-1}>
 *     = 1 / (24^g g!).
 */
inline Sides alternating_two_point_sum(long g) {
    auto& br = Brackets::instance();
    Rat lhs;
    for (long h = 1; h <= g; ++h) {
        Rat term = br.two_point(3 * h - g, g - 1) / (rpow(24, g - h) * Rat(factorial(g - h)));
        lhs += ((g - h) % 2 == 0) ? term : -term;
    }
    return {lhs, br.one_point(g)};
}

/**
 * Signed three-point row sum with a tau_{g-1} spectator:
 *   sum_{j=0}^{2g-2} (-1)^j <tau_{2g-2-j} tau_j tau_{g-1}> = g! / (2^{g-2} (2g)!).
 * The same value must appear as the coefficient of w^{g-1} z^{2g-2} in F.
 */
struct TripleSumSides {
    Rat bracket_sum;   // from the solved three-point tables
    Rat series_coeff;  // from the closed form of F
    Rat closed;        // g! / (2^{g-2} (2g)!)
    bool equal() const { return bracket_sum == closed && series_coeff == closed; }
};

inline TripleSumSides alternating_three_point_sum(long g) {
    auto& br = Brackets::instance();
    Rat sum;
    for (long j = 0; j <= 2 * g - 2; ++j) {
        const Rat v = br.three_point(2 * g - 2 - j, j, g - 1);
        sum += (j % 2 == 0) ? v : -v;
    }
    const Series2 f = three_point_diagonal_function(static_cast<int>(3 * g - 3));
    const Rat coeff = f.coefficient(static_cast<int>(g - 1), static_cast<int>(2 * g - 2));
    const Rat closed = Rat(factorial(g), factorial(2 * g)) / rpow(2, g - 2);
    return {sum, coeff, closed};
}

/**
 * Vanishing shifted alternating sums, for k >= 1:
 *   sum_{h=0}^{g} (-1)^{g-h} / (24^{g-h} (g-h)!) * <tau_0 tau_{3h-g+k} tau_{g-k}> = 0.
 * The sum equals the coefficient of w^{2g+k} z^{g-k} in D(w,z) exp(-w^3/24),
 * which is returned alongside for an independent confirmation.
 */
struct VanishingSumSides {
    Rat bracket_sum;
    Rat series_coeff;
    bool equal() const { return bracket_sum.is_zero() && series_coeff.is_zero(); }
};

inline VanishingSumSides shifted_vanishing_sum(long g, long k) {
    if (k < 1) throw std::invalid_argument("shifted_vanishing_sum requires k >= 1");
    auto& br = Brackets::instance();
    Rat sum;
    for (long h = 0; h <= g; ++h) {
        Rat term = br.three_point_tau0(3 * h - g + k, g - k) /
                   (rpow(24, g - h) * Rat(factorial(g - h)));
        sum += ((g - h) % 2 == 0) ? term : -term;
    }
    Rat coeff;
    if (g >= k) {
        const int order = static_cast<int>(3 * g);
        const Series2 d = two_point_function(order);
        const Series2 reduced = d * Series2::monomial(Rat(-1, 24), 3, 0, order).exp();
        coeff = reduced.coefficient(static_cast<int>(2 * g + k), static_cast<int>(g - k));
    }
    return {sum, coeff};
}

/**
 * The KdV assembly of the one-point socle value: for g >= 2,
 *
 *   1 / (2^{2g-1} (2g-1)!!)
 *     = <tau_{2g} tau_{g-1}> - <tau_{3g-2}>
 *       + 1/2 sum_{j=0}^{2g-2} (-1)^j <tau_{2g-2-j} tau_j tau_{g-1}>
 *       + 1/2 sum_{h=1}^{g-1} [ (-1)^{g-h} <tau_{3h-g} tau_{g-1}> <tau_{3(g-h)-2}>
 *                             + (-1)^h <tau_{3h-2}> <tau_{2g-3h} tau_{g-1}> ],
 *
 * with the two-part h-sum also collapsing (reindex h -> g-h in its second
 * half) to sum_{h=1}^{g-1} (-1)^{g-h}/(24^{g-h}(g-h)!) <tau_{3h-g} tau_{g-1}>.
 * Returns the closed left side and both assemblies of the right side.
 */
struct SocleKdvSides {
    Rat closed;         // 1 / (2^{2g-1} (2g-1)!!)
    Rat assembled;      // right side with the two-part h-sum
    Rat assembled_alt;  // right side with the collapsed h-sum
    bool equal() const { return assembled == closed && assembled_alt == closed; }
};

inline SocleKdvSides one_point_socle_kdv(long g) {
    if (g < 2) throw std::invalid_argument("one_point_socle_kdv requires g >= 2");
    auto& br = Brackets::instance();
    const Rat closed = Rat(Int(1), ipow(2, 2 * g - 1) * double_factorial(2 * g - 1));

    Rat base = br.two_point(2 * g, g - 1) - br.one_point(g);
    Rat jsum;
    for (long j = 0; j <= 2 * g - 2; ++j) {
        const Rat v = br.three_point(2 * g - 2 - j, j, g - 1);
        jsum += (j % 2 == 0) ? v : -v;
    }

    Rat hsum_two_part;
    for (long h = 1; h <= g - 1; ++h) {
        Rat first = br.two_point(3 * h - g, g - 1) * br.one_point(g - h);
        if ((g - h) % 2 != 0) first = -first;
        Rat second = br.one_point(h) * br.two_point(2 * g - 3 * h, g - 1);
        if (h % 2 != 0) second = -second;
        hsum_two_part += first + second;
    }
    Rat hsum_collapsed;
    for (long h = 1; h <= g - 1; ++h) {
        Rat term = br.two_point(3 * h - g, g - 1) / (rpow(24, g - h) * Rat(factorial(g - h)));
        hsum_collapsed += ((g - h) % 2 == 0) ? term : -term;
    }

    const Rat assembled = base + Rat(1, 2) * jsum + Rat(1, 2) * hsum_two_part;
    const Rat assembled_alt = base + Rat(1, 2) * jsum + hsum_collapsed;
    return {closed, assembled, assembled_alt};
}

/**
 * Direct numeric instance of the KdV coefficient equation for a monomial
 * T = prod_j tau_{t_j} (indices passed as a multiset):
 *
 *   (2n+1) <tau_n tau_0^2 T> = 1/4 <tau_{n-1} tau_0^4 T>
 *     + sum_{T = T1 T2} [ <tau_{n-1} tau_0 T1><tau_0^3 T2>
 *                         + 2 <tau_{n-1} tau_0^2 T1><tau_0^2 T2> ],
 *
 * the sum running over all 2^|T| splittings of the multiset (equivalently,
 * over 0 <= a_j <= d_j with multiplicity prod C(d_j, a_j)).
 */
inline Sides kdv_coefficient_equation(long n, const std::vector<long>& t) {
    if (n < 1) throw std::invalid_argument("kdv_coefficient_equation requires n >= 1");
    auto& br = Brackets::instance();
    auto bracket = [&br](std::vector<long> idx) { return br.value(std::move(idx)); };

    std::vector<long> lhs_idx = {n, 0, 0};
    lhs_idx.insert(lhs_idx.end(), t.begin(), t.end());
    const Rat lhs = Rat(2 * n + 1) * bracket(lhs_idx);

    std::vector<long> four_idx = {n - 1, 0, 0, 0, 0};
    four_idx.insert(four_idx.end(), t.begin(), t.end());
    Rat rhs = Rat(1, 4) * bracket(four_idx);

    const size_t m = t.size();
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        std::vector<long> t1 = {n - 1, 0};
        std::vector<long> t1b = {n - 1, 0, 0};
        std::vector<long> t2 = {0, 0, 0};
        std::vector<long> t2b = {0, 0};
        for (size_t i = 0; i < m; ++i) {
            if (mask & (size_t{1} << i)) {
                t1.push_back(t[i]);
                t1b.push_back(t[i]);
            } else {
                t2.push_back(t[i]);
                t2b.push_back(t[i]);
            }
        }
        rhs += bracket(t1) * bracket(t2) + Rat(2) * bracket(t1b) * bracket(t2b);
    }
    return {lhs, rhs};
}

/// String equation instance: <tau_0 T> vs the sum of lowered brackets.
inline Sides string_equation_sides(const std::vector<long>& t) {
    auto& br = Brackets::instance();
    std::vector<long> with0 = {0};
    with0.insert(with0.end(), t.begin(), t.end());
    Rat rhs;
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] == 0) continue;
        std::vector<long> lowered = t;
        --lowered[i];
        rhs += br.value(lowered);
    }
    return {br.value(with0), rhs};
}

/// Dilaton equation instance: <tau_1 T> vs (2g - 2 + n) <T>.
inline Sides dilaton_equation_sides(const std::vector<long>& t) {
    auto& br = Brackets::instance();
    std::vector<long> with1 = {1};
    with1.insert(with1.end(), t.begin(), t.end());
    const BracketShape s = bracket_shape(t);
    Rat rhs;
    if (s.valid) rhs = Rat(2 * s.genus - 2 + s.n) * br.value(t);
    return {br.value(with1), rhs};
}

}  // namespace taut
