#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "taut/rational.hpp"

namespace taut {

/**
 * Truncated formal power series in one variable over Rat.
 *
 * A Series carries its truncation order N as data: coefficients of degree
 * 0..N are known exactly, coefficients of degree > N are UNKNOWN — not zero.
 * Reading past N is a hard error; silently padding with zeros would let a
 * verification claim "equal to order N" pass vacuously.
 *
 * Arithmetic results carry the minimum of the input orders (the largest
 * order to which the result is actually determined).  Equality is therefore
 * only meaningful "up to order k" — see equal_to_order; there is no
 * operator==.
 */
class Series {
public:
    /// Zero series known to the given order.
    explicit Series(int order) : order_(check_order(order)), c_(order + 1) {}

    Series(std::vector<Rat> coefficients, int order)
        : order_(check_order(order)), c_(std::move(coefficients)) {
        if (static_cast<int>(c_.size()) != order_ + 1)
            throw std::invalid_argument("Series: coefficient count must be order+1");
    }

    static Series constant(const Rat& value, int order) {
        Series s(order);
        s.c_[0] = value;
        return s;
    }

    /// The variable x itself.
    static Series identity(int order) {
        if (order < 1) throw std::invalid_argument("Series::identity: order must be >= 1");
        Series s(order);
        s.c_[1] = Rat(1);
        return s;
    }

    int order() const { return order_; }

    const Rat& coefficient(int k) const {
        if (k < 0 || k > order_)
            throw std::out_of_range("Series: coefficient of degree " + std::to_string(k) +
                                    " requested, but series is only known to order " +
                                    std::to_string(order_));
        return c_[k];
    }

    void set_coefficient(int k, const Rat& v) {
        if (k < 0 || k > order_)
            throw std::out_of_range("Series: cannot set coefficient beyond truncation order");
        c_[k] = v;
    }

    /// Re-truncates to a lower (or equal) order.
    Series truncate(int new_order) const {
        if (new_order < 0 || new_order > order_)
            throw std::out_of_range("Series::truncate: order not in [0, current order]");
        Series s(new_order);
        for (int k = 0; k <= new_order; ++k) s.c_[k] = c_[k];
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        const int n = std::min(a.order_, b.order_);
        Series s(n);
        for (int k = 0; k <= n; ++k) s.c_[k] = a.c_[k] + b.c_[k];
        return s;
    }

    friend Series operator-(const Series& a, const Series& b) {
        const int n = std::min(a.order_, b.order_);
        Series s(n);
        for (int k = 0; k <= n; ++k) s.c_[k] = a.c_[k] - b.c_[k];
        return s;
    }

    Series operator-() const {
        Series s(order_);
        for (int k = 0; k <= order_; ++k) s.c_[k] = -c_[k];
        return s;
    }

    friend Series operator*(const Series& a, const Series& b) {
        const int n = std::min(a.order_, b.order_);
        Series s(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b.c_[j].is_zero()) continue;
                s.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return s;
    }

    friend Series operator*(const Rat& a, const Series& b) {
        Series s(b.order_);
        for (int k = 0; k <= b.order_; ++k) s.c_[k] = a * b.c_[k];
        return s;
    }

    /// Long division; b must have a nonzero constant term.
    friend Series operator/(const Series& a, const Series& b) {
        if (b.c_[0].is_zero())
            throw std::domain_error("Series: division by series with zero constant term");
        const int n = std::min(a.order_, b.order_);
        Series q(n);
        for (int k = 0; k <= n; ++k) {
            Rat acc = a.c_[k];
            for (int j = 1; j <= k; ++j) acc -= b.c_[j] * q.c_[k - j];
            q.c_[k] = acc / b.c_[0];
        }
        return q;
    }

    Series pow(int e) const {
        if (e < 0) throw std::invalid_argument("Series::pow: negative exponent");
        Series r = constant(Rat(1), order_);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// f(g(x)); g must have zero constant term (Horner substitution).
    friend Series compose(const Series& f, const Series& g) {
        if (!g.c_[0].is_zero())
            throw std::domain_error("Series::compose: inner series must have zero constant term");
        const int n = std::min(f.order_, g.order_);
        Series gn = g.truncate(n);
        Series r = constant(f.c_[n], n);
        for (int k = n - 1; k >= 0; --k) {
            r = r * gn;
            r.c_[0] += f.c_[k];
        }
        return r;
    }

    /// f(a*x): rescales the variable.
    Series scale_variable(const Rat& a) const {
        Series s(order_);
        Rat p(1);
        for (int k = 0; k <= order_; ++k) {
            s.c_[k] = c_[k] * p;
            p *= a;
        }
        return s;
    }

    /// f(-x).
    Series negate_variable() const { return scale_variable(Rat(-1)); }

    /// Multiplies by x^k; the result is determined to order N+k.
    Series shift_up(int k) const {
        if (k < 0) throw std::invalid_argument("Series::shift_up: negative shift");
        Series s(order_ + k);
        for (int j = 0; j <= order_; ++j) s.c_[j + k] = c_[j];
        return s;
    }

    /// Divides by x; requires zero constant term.  Result order drops by 1.
    Series shift_down() const {
        if (!c_[0].is_zero())
            throw std::domain_error("Series::shift_down: nonzero constant term");
        if (order_ < 1) throw std::out_of_range("Series::shift_down: order too small");
        Series s(order_ - 1);
        for (int j = 1; j <= order_; ++j) s.c_[j - 1] = c_[j];
        return s;
    }

    /// d/dx; the result is only determined to order N-1.
    Series derivative() const {
        if (order_ < 1) throw std::out_of_range("Series::derivative: order too small");
        Series s(order_ - 1);
        for (int k = 1; k <= order_; ++k) s.c_[k - 1] = Rat(k) * c_[k];
        return s;
    }

    /// Antiderivative with constant term 0; determined to order N+1.
    Series antiderivative() const {
        Series s(order_ + 1);
        for (int k = 0; k <= order_; ++k) s.c_[k + 1] = c_[k] / Rat(k + 1);
        return s;
    }

    /// exp(f) for f with zero constant term, via the homogeneous recurrence
    /// E_n = (1/n) * sum_{k=1..n} k f_k E_{n-k}.
    Series exp() const {
        if (!c_[0].is_zero())
            throw std::domain_error("Series::exp: nonzero constant term");
        Series e(order_);
        e.c_[0] = Rat(1);
        for (int n = 1; n <= order_; ++n) {
            Rat acc;
            for (int k = 1; k <= n; ++k) {
                if (c_[k].is_zero()) continue;
                acc += Rat(k) * c_[k] * e.c_[n - k];
            }
            e.c_[n] = acc / Rat(n);
        }
        return e;
    }

    /// log(f) for f with constant term 1: antiderivative of f'/f.
    Series log() const {
        if (!(c_[0] == Rat(1)))
            throw std::domain_error("Series::log: constant term must be 1");
        if (order_ < 1) return Series(0);
        return (derivative() / truncate(order_ - 1)).antiderivative();
    }

    /**
     * Compositional inverse g with f(g(x)) = x, via Lagrange inversion:
     * the degree-r coefficient of g is (1/r) [x^{r-1}] (x/f(x))^r.
     * Requires f(0) = 0 and f'(0) != 0.
     */
    Series reversion() const {
        check_reversion_preconditions();
        const int n = order_;
        Series u = constant(Rat(1), n - 1) / shift_down();  // x/f, to order n-1
        Series g(n);
        Series upow = constant(Rat(1), n - 1);
        for (int r = 1; r <= n; ++r) {
            upow = upow * u;
            g.c_[r] = upow.c_[r - 1] / Rat(r);
        }
        return g;
    }

    /**
     * Compositional inverse computed degree by degree: with g known below
     * degree r, [x^r] f(g) is linear in g_r with slope f'(0), so solve for
     * g_r from the residual.  Independent of the Lagrange route; the two
     * must agree coefficient-by-coefficient.
     */
    Series reversion_iterative() const {
        check_reversion_preconditions();
        const int n = order_;
        Series g(n);
        for (int r = 1; r <= n; ++r) {
            const Series h = compose(*this, g);
            const Rat target = r == 1 ? Rat(1) : Rat(0);
            g.c_[r] = (target - h.coefficient(r)) / c_[1];
        }
        return g;
    }

    /// Exact equality of all coefficients of degree <= k (k must be known to both).
    friend bool equal_to_order(const Series& a, const Series& b, int k) {
        if (k > a.order_ || k > b.order_)
            throw std::out_of_range("equal_to_order: order exceeds a truncation order");
        for (int j = 0; j <= k; ++j)
            if (!(a.c_[j] == b.c_[j])) return false;
        return true;
    }

    bool is_zero() const {
        for (const Rat& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// "[c0, c1, ..., cN]" — canonical digest used in reports.
    std::string to_string() const {
        std::string out = "[";
        for (int k = 0; k <= order_; ++k) {
            if (k) out += ", ";
            out += c_[k].to_string();
        }
        return out + "]";
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("Series: negative truncation order");
        return order;
    }

    void check_reversion_preconditions() const {
        if (order_ < 1 || !c_[0].is_zero() || c_[1].is_zero())
            throw std::domain_error(
                "Series::reversion: need f(0) = 0, f'(0) != 0, order >= 1");
    }

    int order_;
    std::vector<Rat> c_;
};

}  // namespace taut
