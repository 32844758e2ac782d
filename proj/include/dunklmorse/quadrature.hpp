#ifndef DUNKLMORSE_QUADRATURE_HPP
#define DUNKLMORSE_QUADRATURE_HPP

#include <cmath>
#include <utility>

#include "dunklmorse/errors.hpp"

namespace dunklmorse::quadrature {

// Tanh-sinh (double-exponential) quadrature on (-1, 1).
//
// The integrand is called as f(x, om, op) with om = 1-x and op = 1+x computed
// without cancellation, so algebraic endpoint singularities like (1-x)^(-0.9)
// evaluate at full relative precision. Levels double the node density until
// two successive estimates agree.
template <class F>
double tanh_sinh_pm1(F&& f, double rel_tol = 1e-12, double abs_tol = 0.0,
                     int max_level = 12) {
    constexpr double half_pi = 1.5707963267948966;
    constexpr double u_max = 6.5;

    auto eval_at = [&](double u) -> double {
        // x = tanh(half_pi*sinh u); 1 -+ x via exponentials, stable at both ends
        const double s = half_pi * std::sinh(u);
        const double e2 = std::exp(-2.0 * std::abs(s));
        const double om_abs = 2.0 * e2 / (1.0 + e2);   // 1 - |x|
        if (om_abs < 1e-290) return 0.0;               // node indistinguishable from the endpoint
        const double x_abs = 1.0 - om_abs;
        const double x = s >= 0.0 ? x_abs : -x_abs;
        const double om = s >= 0.0 ? om_abs : 2.0 - om_abs;
        const double op = s >= 0.0 ? 2.0 - om_abs : om_abs;
        const double ch = std::cosh(s);
        const double w = half_pi * std::cosh(u) / (ch * ch);
        if (!(w > 0.0) || !std::isfinite(w)) return 0.0;
        return w * f(x, om, op);
    };

    double h = 1.0;
    double sum = eval_at(0.0);
    for (int k = 1; k * h <= u_max; ++k)
        sum += eval_at(k * h) + eval_at(-k * h);
    double prev = sum * h;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (int k = 1; k * h <= u_max; k += 2)  // odd multiples are the new nodes
            add += eval_at(k * h) + eval_at(-k * h);
        const double cur = 0.5 * prev + add * h;
        if (std::abs(cur - prev) <= abs_tol + rel_tol * std::abs(cur))
            return cur;
        prev = cur;
    }
    throw convergence_error("tanh_sinh_pm1: no convergence within max_level refinements");
}

// Same scheme mapped to (a, b); f(x, da, db) receives the distances to the
// endpoints, exact when a or b is exactly representable.
template <class F>
double tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-12,
                 double abs_tol = 0.0, int max_level = 12) {
    const double half = 0.5 * (b - a);
    return half * tanh_sinh_pm1(
        [&](double x, double om, double op) {
            const double da = half * op;
            const double db = half * om;
            return f(a + da, da, db);
        },
        rel_tol, abs_tol, max_level);
}

}

#endif
