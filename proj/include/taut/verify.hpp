#pragma once

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "taut/hodge.hpp"
#include "taut/witten.hpp"

namespace taut {

/// Parameter box for a verification run; every suite draws its ranges from
/// these four numbers, so a run is reproducible from the box alone.
struct VerifyBounds {
    long max_g = 6;
    long max_k = 6;
    long max_d = 4;
    int order = 24;
};

/**
 * Outcome of one identity check: the two sides rendered as canonical
 * strings (rationals in lowest terms, series as coefficient lists to the
 * compared order), the exact-equality verdict, and the wall time.  Two runs
 * over the same box produce identical reports except for elapsed_ms.
 */
struct CheckReport {
    std::string identity_id;
    std::vector<std::pair<std::string, long>> parameters;
    std::string lhs;
    std::string rhs;
    bool equal = false;
    double elapsed_ms = 0.0;
};

inline bool all_passed(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.equal) return false;
    return true;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "all",   "kdv",   "theorem1",      "theorem2",     "theorem3",
        "prop1", "prop2", "hyperelliptic", "localization", "coefficients"};
    return names;
}

namespace detail {

/// Renders a series as its coefficient list up to the compared order, so
/// that string equality of digests coincides with equality to that order.
inline std::string digest(const Series& s, int order) {
    std::string out = "[";
    for (int k = 0; k <= order; ++k) {
        if (k > 0) out += ", ";
        out += s.coefficient(k).to_string();
    }
    return out + "]";
}

inline std::string digest(const Series2& s, int order) {
    std::string out = "[";
    bool first = true;
    for (int a = 0; a <= order; ++a)
        for (int b = 0; a + b <= order; ++b) {
            const Rat& c = s.coefficient(a, b);
            if (c.is_zero()) continue;
            if (!first) out += ", ";
            first = false;
            out += std::to_string(a) + "," + std::to_string(b) + ":" + c.to_string();
        }
    return out + "]";
}

inline std::string digest(const std::vector<Rat>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += v[i].to_string();
    }
    return out + "]";
}

using Params = std::vector<std::pair<std::string, long>>;

/// Collects reports; each add_* runs its evaluation closure under a timer.
class Collector {
public:
    explicit Collector(std::vector<CheckReport>& out) : out_(out) {}

    template <typename F>
    void add(std::string id, Params params, F&& eval) {
        using clock = std::chrono::steady_clock;
        CheckReport r;
        r.identity_id = std::move(id);
        r.parameters = std::move(params);
        const auto start = clock::now();
        eval(r);
        r.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
        out_.push_back(std::move(r));
    }

    template <typename F>
    void add_rat(std::string id, Params params, F&& compute) {
        add(std::move(id), std::move(params), [&](CheckReport& r) {
            const Sides s = compute();
            r.lhs = s.lhs.to_string();
            r.rhs = s.rhs.to_string();
            r.equal = s.equal();
        });
    }

    template <typename F>
    void add_series(std::string id, Params params, F&& compute) {
        add(std::move(id), std::move(params), [&](CheckReport& r) {
            const SeriesSides s = compute();
            r.lhs = digest(s.lhs, s.order);
            r.rhs = digest(s.rhs, s.order);
            r.equal = s.equal();
        });
    }

    template <typename F>
    void add_vector(std::string id, Params params, F&& compute) {
        add(std::move(id), std::move(params), [&](CheckReport& r) {
            const std::pair<std::vector<Rat>, std::vector<Rat>> s = compute();
            r.lhs = digest(s.first);
            r.rhs = digest(s.second);
            r.equal = s.first == s.second;
        });
    }

private:
    std::vector<CheckReport>& out_;
};

// -------------------------------------------------------------------------
// Suite bodies.  Ranges are always direct functions of the bound box.
// -------------------------------------------------------------------------

inline void suite_kdv(const VerifyBounds& b, Collector& c) {
    const int n2 = b.order;
    c.add("kdv/two-point-generating-function", {{"order", n2}}, [&](CheckReport& r) {
        const Series2 closed = two_point_function(n2);
        const Series2 tabled = two_point_function_from_brackets(n2);
        r.lhs = digest(closed, n2);
        r.rhs = digest(tabled, n2);
        r.equal = r.lhs == r.rhs;
    });
    c.add("kdv/two-point-pde", {{"order", n2}}, [&](CheckReport& r) {
        const Series2 res = two_point_pde_residual(n2);
        r.lhs = digest(res, n2);
        r.rhs = digest(Series2(n2), n2);
        r.equal = r.lhs == r.rhs;
    });
    c.add("kdv/three-point-generating-function", {{"order", n2}}, [&](CheckReport& r) {
        const Series2 closed = three_point_diagonal_function(n2);
        const Series2 tabled = three_point_diagonal_function_from_brackets(n2);
        r.lhs = digest(closed, n2);
        r.rhs = digest(tabled, n2);
        r.equal = r.lhs == r.rhs;
    });
    c.add("kdv/three-point-ode", {{"order", n2}}, [&](CheckReport& r) {
        const Series2 res = three_point_ode_residual(n2);
        r.lhs = digest(res, n2);
        r.rhs = digest(Series2(n2), n2);
        r.equal = r.lhs == r.rhs;
    });
    for (long n = 1; n <= std::min<long>(4, b.max_k); ++n)
        for (long t = 0; t <= b.max_k; ++t)
            c.add_rat("kdv/coefficient-equation", {{"n", n}, {"b", t}},
                      [&] { return kdv_coefficient_equation(n, {t}); });
    for (long n = 1; n <= std::min<long>(3, b.max_k); ++n)
        for (long t1 = 0; t1 <= 3; ++t1)
            for (long t2 = t1; t2 <= 3; ++t2)
                c.add_rat("kdv/coefficient-equation-pair", {{"n", n}, {"b", t1}, {"c", t2}},
                          [&] { return kdv_coefficient_equation(n, {t1, t2}); });
    for (long g = 1; g <= b.max_g; ++g)
        c.add_rat("kdv/alternating-two-point", {{"g", g}}, [&] {
            const auto s = alternating_two_point_sum(g);
            return Sides{s.lhs, s.rhs};
        });
    for (long g = 1; g <= b.max_g; ++g) {
        c.add_rat("kdv/alternating-three-point-closed", {{"g", g}}, [&] {
            const auto s = alternating_three_point_sum(g);
            return Sides{s.bracket_sum, s.closed};
        });
        c.add_rat("kdv/alternating-three-point-series", {{"g", g}}, [&] {
            const auto s = alternating_three_point_sum(g);
            return Sides{s.bracket_sum, s.series_coeff};
        });
    }
    for (long g = 1; g <= b.max_g; ++g)
        for (long k = 1; k <= std::min<long>(4, b.max_k); ++k) {
            c.add_rat("kdv/shifted-vanishing", {{"g", g}, {"k", k}}, [&] {
                return Sides{shifted_vanishing_sum(g, k).bracket_sum, Rat(0)};
            });
            if (g >= k)
                c.add_rat("kdv/shifted-vanishing-series", {{"g", g}, {"k", k}}, [&] {
                    return Sides{shifted_vanishing_sum(g, k).series_coeff, Rat(0)};
                });
        }
    for (long g = 2; g <= b.max_g; ++g) {
        c.add_rat("kdv/socle-assembly", {{"g", g}}, [&] {
            const auto s = one_point_socle_kdv(g);
            return Sides{s.closed, s.assembled};
        });
        c.add_rat("kdv/socle-assembly-simplification", {{"g", g}}, [&] {
            const auto s = one_point_socle_kdv(g);
            return Sides{s.assembled, s.assembled_alt};
        });
    }
}

inline void suite_theorem1(const VerifyBounds& b, Collector& c) {
    for (long g = 2; g <= b.max_g; ++g) {
        const Rat w = bernoulli_weight(g);
        c.add_rat("theorem1/kdv-assembly", {{"g", g}}, [&] {
            return Sides{socle_kappa_closed(g), w * one_point_socle_kdv(g).assembled};
        });
        c.add_rat("theorem1/leading-coefficient", {{"g", g}}, [&] {
            return Sides{socle_kappa_closed(g), w * socle_polynomial_coefficients(g)[0]};
        });
        c.add_rat("theorem1/h-sum-simplification", {{"g", g}}, [&] {
            const auto s = one_point_socle_kdv(g);
            return Sides{w * s.assembled, w * s.assembled_alt};
        });
    }
}

inline void suite_theorem2(const VerifyBounds& b, Collector& c) {
    for (long k = 1; k <= b.max_k; ++k)
        c.add_series("theorem2/log-series", {{"k", k}, {"order", b.order}},
                     [&] { return theorem2_sides(k, b.order); });
    c.add_series("theorem2/derivative-cosine", {{"order", b.order}}, [&] {
        return SeriesSides{theorem2_sides(2, b.order).rhs, neg_log_cos_half_series(b.order),
                           b.order};
    });
    for (long g = 1; g <= b.max_g; ++g)
        for (long k = 1; k <= b.max_k; ++k)
            c.add_rat("theorem2/jet-value-routes", {{"g", g}, {"k", k}},
                      [&] { return Sides{i_value_closed(g, k), i_value_via_q(g, k)}; });
}

inline void suite_theorem3(const VerifyBounds& b, Collector& c) {
    for (long g = 1; g <= b.max_g; ++g)
        for (long k = 1; k <= b.max_k; ++k)
            c.add_rat("theorem3/stirling-form", {{"g", g}, {"k", k}}, [&] {
                return Sides{socle_polynomial_double_sum(g, k), socle_polynomial_stirling(g, k)};
            });
    for (long g = 1; g <= b.max_g; ++g)
        c.add_vector("theorem3/jets-route-values", {{"g", g}}, [&] {
            std::vector<Rat> direct;
            for (long k = 1; k <= 2 * g; ++k) direct.push_back(socle_polynomial_stirling(g, k));
            return std::make_pair(socle_polynomial_values_via_jets(g, 2 * g), direct);
        });
    for (long g = 2; g <= b.max_g; ++g) {
        c.add_vector("theorem3/polynomiality", {{"g", g}}, [&] {
            const std::vector<Rat> coeffs = socle_polynomial_coefficients(g);
            std::vector<Rat> predicted, direct;
            for (long k = g + 1; k <= 2 * g; ++k) {
                Rat p;
                for (long i = 0; i < g; ++i)
                    p += coeffs[static_cast<size_t>(i)] * Rat(ipow(k, g - 1 - i));
                predicted.push_back(p);
                direct.push_back(socle_polynomial_stirling(g, k));
            }
            return std::make_pair(predicted, direct);
        });
        c.add_rat("theorem3/constant-term", {{"g", g}}, [&] {
            return Sides{socle_polynomial_coefficients(g).back(), Rat(0)};
        });
    }
}

inline void suite_prop1(const VerifyBounds& b, Collector& c) {
    for (long d = 1; d <= b.max_d; ++d)
        c.add_series("prop1/log-series", {{"d", d}, {"order", b.order}},
                     [&] { return prop1_sides(d, b.order); });
}

inline void suite_prop2(const VerifyBounds& b, Collector& c) {
    for (long g = 1; g <= b.max_g; ++g)
        for (long k = 1; k <= b.max_k; ++k)
            for (long e = 1; e <= k; ++e)
                c.add_rat("prop2/f-collapse", {{"g", g}, {"k", k}, {"e", e}},
                          [&] { return prop2_sides(g, k, e); });
    for (long g = 1; g <= b.max_g; ++g)
        for (long k = 2; k <= b.max_k; ++k)
            for (long e = 1; e < k; ++e)
                c.add_rat("prop2/binomial-reduction", {{"g", g}, {"k", k}, {"e", e}},
                          [&] { return binomial_reduction_sides(g, k, e); });
    for (long k = 2; k <= b.max_k; ++k)
        for (long e = 1; e < k; ++e)
            for (long t = 1; t <= k - e; ++t)
                c.add_rat("prop2/coefficient-matching", {{"k", k}, {"e", e}, {"t", t}},
                          [&] { return coefficient_matching_sides(k, e, t); });
    for (long z = 1; z <= b.max_k; ++z)
        for (long t = 1; t <= z; ++t)
            for (long e = 1; e <= 3; ++e)
                c.add_rat("prop2/shifted-power-sum", {{"z", z}, {"t", t}, {"e", e}},
                          [&] { return shifted_power_sum_sides(z, t, e); });
    for (long n = 1; n <= b.max_k + 2; ++n)
        for (long t = 1; t <= 3; ++t)
            c.add_rat("prop2/alternating-power-sum", {{"n", n}, {"t", t}},
                      [&] { return alternating_power_sum_sides(n, t); });
    for (long r = 0; r <= b.max_k; ++r)
        for (long l = 0; l <= r; ++l) {
            c.add_rat("prop2/tau-series-route", {{"r", r}, {"l", l}}, [&] {
                return Sides{tau_power_coefficient_closed(r, l),
                             tau_power_coefficient_series(r, l)};
            });
            c.add_rat("prop2/tau-partition-route", {{"r", r}, {"l", l}}, [&] {
                return Sides{tau_power_coefficient_closed(r, l),
                             tau_power_coefficient_partitions(r, l)};
            });
        }
    for (long g = 1; g <= b.max_g; ++g)
        for (long d = 1; d <= b.max_k; ++d)
            for (long e = 1; e <= d; ++e)
                c.add_rat("prop2/f-partition-route", {{"g", g}, {"d", d}, {"e", e}},
                          [&] { return Sides{f_value(g, d, e), f_value_partitions(g, d, e)}; });
}

inline void suite_hyperelliptic(const VerifyBounds& b, Collector& c) {
    // The closed-form comparisons are cheap, so this family doubles the
    // genus range of the box.
    for (long g = 2; g <= 2 * b.max_g; ++g) {
        c.add_rat("hyperelliptic/jets-route", {{"g", g}},
                  [&] { return Sides{hyperelliptic_closed(g), hyperelliptic_via_jets(g)}; });
        c.add_rat("hyperelliptic/series-route", {{"g", g}}, [&] {
            return Sides{hyperelliptic_closed(g), hyperelliptic_series_coefficient(g)};
        });
    }
    c.add_rat("hyperelliptic/genus-one-convention", {}, [&] {
        return Sides{hyperelliptic_via_jets(1), hyperelliptic_series_coefficient(1)};
    });
    for (long g = 1; g <= 5 * b.max_g; ++g)
        c.add_rat("hyperelliptic/binomial-power-sum", {{"g", g}},
                  [&] { return binomial_power_sum_sides(g); });
}

inline void suite_localization(const VerifyBounds& b, Collector& c) {
    for (long g = 1; g <= b.max_g; ++g)
        for (long d = 1; d <= b.max_d; ++d)
            c.add_rat("localization/vanishing-sum", {{"g", g}, {"d", d}},
                      [&] { return Sides{localization_sum(g, d), Rat(0)}; });
    for (long k = 0; k <= b.max_k; ++k)
        c.add_series("localization/one-point-lambda-series", {{"k", k}, {"order", b.order}},
                     [&] { return one_point_lambda_series_sides(k, b.order); });
    const auto table = one_point_lambda_integrals(b.max_g);
    for (long g = 1; g <= b.max_g; ++g)
        c.add_rat("localization/one-point-kdv-anchor", {{"g", g}}, [&] {
            return Sides{table[static_cast<size_t>(g)][static_cast<size_t>(g)],
                         Brackets::instance().one_point(g)};
        });
    for (long g = 2; g <= b.max_g; ++g)
        c.add_rat("localization/kappa-lambda-closed-form", {{"g", g}}, [&] {
            return Sides{kappa_lambda_series_coefficient(g), kappa_lambda_closed(g)};
        });
}

inline void suite_coefficients(const VerifyBounds& b, Collector& c) {
    for (long g = 2; g <= b.max_g; ++g) {
        const std::vector<Rat> coeffs = socle_polynomial_coefficients(g);
        const Rat lead(Int(1), ipow(2, 2 * g - 1) * double_factorial(2 * g - 1));
        c.add_rat("coefficients/leading", {{"g", g}},
                  [&] { return Sides{coeffs[0], lead}; });
        c.add_rat("coefficients/subleading", {{"g", g}}, [&] {
            return Sides{coeffs[1], -Rat(g * (g - 2)) / Rat(9) * lead};
        });
        c.add_rat("coefficients/linear", {{"g", g}}, [&] {
            return Sides{coeffs[static_cast<size_t>(g - 2)],
                         bernoulli(2 * g - 2) / (Rat(2) * Rat(factorial(2 * g - 2)))};
        });
        if (g >= 3)
            c.add_rat("coefficients/quadratic", {{"g", g}}, [&] {
                return Sides{coeffs[static_cast<size_t>(g - 3)],
                             -Rat(g) * bernoulli(2 * g - 2) /
                                 (Rat(2) * Rat(factorial(2 * g - 2)))};
            });
        c.add_rat("coefficients/triple-lambda", {{"g", g}}, [&] {
            return Sides{triple_lambda_closed(g), triple_lambda_via_socle_polynomial(g)};
        });
    }
}

}  // namespace detail

/**
 * Runs the named family of identity checks over the bound box and returns
 * the reports in canonical order (identity_id, then parameters).  "all"
 * runs every family.  Unknown names raise std::invalid_argument.
 */
inline std::vector<CheckReport> run_suite(const std::string& name, const VerifyBounds& bounds) {
    if (bounds.max_g < 1 || bounds.max_k < 1 || bounds.max_d < 1 || bounds.order < 1)
        throw std::invalid_argument("run_suite: bounds must be positive");
    std::vector<CheckReport> reports;
    detail::Collector c(reports);
    bool known = false;
    const bool all = name == "all";
    auto want = [&](const char* n) {
        const bool match = all || name == n;
        known = known || match;
        return match;
    };
    if (want("kdv")) detail::suite_kdv(bounds, c);
    if (want("theorem1")) detail::suite_theorem1(bounds, c);
    if (want("theorem2")) detail::suite_theorem2(bounds, c);
    if (want("theorem3")) detail::suite_theorem3(bounds, c);
    if (want("prop1")) detail::suite_prop1(bounds, c);
    if (want("prop2")) detail::suite_prop2(bounds, c);
    if (want("hyperelliptic")) detail::suite_hyperelliptic(bounds, c);
    if (want("localization")) detail::suite_localization(bounds, c);
    if (want("coefficients")) detail::suite_coefficients(bounds, c);
    if (!known) throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
    std::stable_sort(reports.begin(), reports.end(),
                     [](const CheckReport& a, const CheckReport& b) {
                         if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
                         return a.parameters < b.parameters;
                     });
    return reports;
}

}  // namespace taut
