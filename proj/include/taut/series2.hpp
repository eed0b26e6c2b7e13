#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "taut/rational.hpp"
#include "taut/series.hpp"

namespace taut {

/**
 * Truncated formal power series in two variables w, z over Rat, stored on
 * the triangle of monomials w^a z^b with a+b <= N (total-degree truncation:
 * the generating functions consumed here are read along total-degree
 * diagonals).  Same hard truncation contract as Series: degrees beyond N
 * are unknown, and reading them is an error.
 */
class Series2 {
public:
    explicit Series2(int order) : order_(check_order(order)), c_(tri_size(order)) {}

    static Series2 constant(const Rat& value, int order) {
        Series2 s(order);
        s.c_[0] = value;
        return s;
    }

    /// c * w^a z^b as a series of the given order.
    static Series2 monomial(const Rat& c, int a, int b, int order) {
        Series2 s(order);
        s.at(a, b) = c;  // range-checked
        return s;
    }

    /// Embeds a univariate series as a series in w alone (or z alone).
    static Series2 from_w(const Series& f) {
        Series2 s(f.order());
        for (int a = 0; a <= f.order(); ++a) s.at(a, 0) = f.coefficient(a);
        return s;
    }
    static Series2 from_z(const Series& f) {
        Series2 s(f.order());
        for (int b = 0; b <= f.order(); ++b) s.at(0, b) = f.coefficient(b);
        return s;
    }

    int order() const { return order_; }

    const Rat& coefficient(int a, int b) const {
        check_range(a, b);
        return c_[idx(a, b)];
    }

    void set_coefficient(int a, int b, const Rat& v) {
        check_range(a, b);
        c_[idx(a, b)] = v;
    }

    Series2 truncate(int new_order) const {
        if (new_order < 0 || new_order > order_)
            throw std::out_of_range("Series2::truncate: order not in [0, current order]");
        Series2 s(new_order);
        for (int a = 0; a <= new_order; ++a)
            for (int b = 0; a + b <= new_order; ++b) s.at(a, b) = coefficient(a, b);
        return s;
    }

    friend Series2 operator+(const Series2& x, const Series2& y) {
        return zipped(x, y, +1);
    }
    friend Series2 operator-(const Series2& x, const Series2& y) {
        return zipped(x, y, -1);
    }

    Series2 operator-() const {
        Series2 s(order_);
        for (size_t i = 0; i < c_.size(); ++i) s.c_[i] = -c_[i];
        return s;
    }

    friend Series2 operator*(const Rat& a, const Series2& x) {
        Series2 s(x.order_);
        for (size_t i = 0; i < x.c_.size(); ++i) s.c_[i] = a * x.c_[i];
        return s;
    }

    friend Series2 operator*(const Series2& x, const Series2& y) {
        const int n = std::min(x.order_, y.order_);
        Series2 s(n);
        for (int a1 = 0; a1 <= n; ++a1)
            for (int b1 = 0; a1 + b1 <= n; ++b1) {
                const Rat& cx = x.coefficient(a1, b1);
                if (cx.is_zero()) continue;
                const int room = n - a1 - b1;
                for (int a2 = 0; a2 <= room; ++a2)
                    for (int b2 = 0; a2 + b2 <= room; ++b2) {
                        const Rat& cy = y.coefficient(a2, b2);
                        if (cy.is_zero()) continue;
                        s.at(a1 + a2, b1 + b2) += cx * cy;
                    }
            }
        return s;
    }

    /// Multiplies by w^i z^j; the result is determined to order N+i+j.
    Series2 shift_up(int i, int j) const {
        if (i < 0 || j < 0) throw std::invalid_argument("Series2::shift_up: negative shift");
        Series2 s(order_ + i + j);
        for (int a = 0; a <= order_; ++a)
            for (int b = 0; a + b <= order_; ++b) s.at(a + i, b + j) = coefficient(a, b);
        return s;
    }

    /// d/dw (coefficient order drops by 1).
    Series2 derivative_w() const {
        if (order_ < 1) throw std::out_of_range("Series2::derivative_w: order too small");
        Series2 s(order_ - 1);
        for (int a = 1; a <= order_; ++a)
            for (int b = 0; a + b <= order_; ++b) s.at(a - 1, b) = Rat(a) * coefficient(a, b);
        return s;
    }

    /// d/dz (coefficient order drops by 1).
    Series2 derivative_z() const {
        if (order_ < 1) throw std::out_of_range("Series2::derivative_z: order too small");
        Series2 s(order_ - 1);
        for (int a = 0; a <= order_; ++a)
            for (int b = 1; a + b <= order_; ++b) s.at(a, b - 1) = Rat(b) * coefficient(a, b);
        return s;
    }

    /// Substitution z -> -z.
    Series2 negate_z() const {
        Series2 s(order_);
        for (int a = 0; a <= order_; ++a)
            for (int b = 0; a + b <= order_; ++b) {
                const Rat& v = coefficient(a, b);
                s.at(a, b) = (b % 2 != 0) ? -v : v;
            }
        return s;
    }

    /// Swap w <-> z.
    Series2 swap_vars() const {
        Series2 s(order_);
        for (int a = 0; a <= order_; ++a)
            for (int b = 0; a + b <= order_; ++b) s.at(b, a) = coefficient(a, b);
        return s;
    }

    /// Restriction w = 0 (univariate in z) / z = 0 (univariate in w).
    Series set_w_zero() const {
        Series f(order_);
        for (int b = 0; b <= order_; ++b) f.set_coefficient(b, coefficient(0, b));
        return f;
    }
    Series set_z_zero() const {
        Series f(order_);
        for (int a = 0; a <= order_; ++a) f.set_coefficient(a, coefficient(a, 0));
        return f;
    }

    /// exp(A) for A with zero constant term, by the Euler-graded recurrence
    /// d * E_d = sum_{j=1..d} j * A_j * E_{d-j} on total-degree components.
    Series2 exp() const {
        if (!c_[0].is_zero())
            throw std::domain_error("Series2::exp: nonzero constant term");
        Series2 e(order_);
        e.c_[0] = Rat(1);
        // Work degree by degree; component products computed directly.
        for (int d = 1; d <= order_; ++d) {
            for (int a = 0; a <= d; ++a) {
                const int b = d - a;
                Rat acc;
                // (theta A * E)_{(a,b)} where theta = w d/dw + z d/dz.
                for (int i = 0; i <= a; ++i)
                    for (int j = 0; j <= b; ++j) {
                        const int deg = i + j;
                        if (deg == 0) continue;
                        const Rat& av = coefficient(i, j);
                        if (av.is_zero()) continue;
                        acc += Rat(deg) * av * e.coefficient(a - i, b - j);
                    }
                e.at(a, b) = acc / Rat(d);
            }
        }
        return e;
    }

    friend bool equal_to_order(const Series2& x, const Series2& y, int k) {
        if (k > x.order_ || k > y.order_)
            throw std::out_of_range("equal_to_order: order exceeds a truncation order");
        for (int a = 0; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b)
                if (!(x.coefficient(a, b) == y.coefficient(a, b))) return false;
        return true;
    }

    bool is_zero() const {
        for (const Rat& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    /// Digest: "0" when zero, else the list of nonzero monomials.
    std::string to_string() const {
        std::string out;
        for (int d = 0; d <= order_; ++d)
            for (int a = d; a >= 0; --a) {
                const Rat& v = coefficient(a, d - a);
                if (v.is_zero()) continue;
                if (!out.empty()) out += "; ";
                out += "w^" + std::to_string(a) + " z^" + std::to_string(d - a) + ": " +
                       v.to_string();
            }
        return out.empty() ? "0" : out;
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("Series2: negative truncation order");
        return order;
    }
    static size_t tri_size(int n) {
        return static_cast<size_t>(n + 1) * static_cast<size_t>(n + 2) / 2;
    }
    void check_range(int a, int b) const {
        if (a < 0 || b < 0 || a + b > order_)
            throw std::out_of_range("Series2: monomial w^" + std::to_string(a) + " z^" +
                                    std::to_string(b) + " outside truncation order " +
                                    std::to_string(order_));
    }
    // Row-major over a with shrinking rows.
    size_t idx(int a, int b) const {
        const long n = order_;
        const long off = a * (n + 1) - a * (a - 1) / 2;
        return static_cast<size_t>(off + b);
    }
    Rat& at(int a, int b) {
        check_range(a, b);
        return c_[idx(a, b)];
    }

    int order_;
    std::vector<Rat> c_;

    static Series2 zipped(const Series2& x, const Series2& y, int sign) {
        const int n = std::min(x.order_, y.order_);
        Series2 s(n);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b)
                s.at(a, b) = sign > 0 ? x.coefficient(a, b) + y.coefficient(a, b)
                                      : x.coefficient(a, b) - y.coefficient(a, b);
        return s;
    }
};

}  // namespace taut
