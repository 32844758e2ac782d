#ifndef DUNKLMORSE_SPECFUN_HPP
#define DUNKLMORSE_SPECFUN_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "dunklmorse/errors.hpp"

namespace dunklmorse::specfun {

inline constexpr double sqrt_pi = 1.7724538509055160273;
inline constexpr double two_over_sqrt_pi = 1.1283791670955125739;

// Series truncation contract. Defaults leave two orders of margin under the
// test tolerances.
struct Accuracy {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    int max_terms = 10000;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_terms < 1)
            throw std::domain_error("Accuracy: requires abs_tol > 0, rel_tol > 0, max_terms >= 1");
    }
};

inline double ln_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("ln_gamma: requires x > 0, got " + std::to_string(x));
    return std::lgamma(x);
}

// Degree-n Jacobi polynomial P_n^(a,b)(x) by the three-term recurrence.
// Stable for the desk-scale degrees (n <~ 30) used here.
inline double jacobi(int n, double a, double b, double x) {
    if (n < 0)
        throw std::domain_error("jacobi: degree must be non-negative");
    if (!(a > -1.0) || !(b > -1.0))
        throw std::domain_error("jacobi: parameters must exceed -1");
    if (n == 0) return 1.0;
    const double apb = a + b;
    double pm1 = 1.0;
    double p = 0.5 * (a - b) + 0.5 * (apb + 2.0) * x;
    for (int k = 2; k <= n; ++k) {
        const double t = 2.0 * k + apb;         // 2k + a + b
        const double den = 2.0 * k * (k + apb) * (t - 2.0);
        const double c1 = (t - 1.0) * (a * a - b * b);
        const double c2 = (t - 1.0) * t * (t - 2.0);
        const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * t;
        const double next = ((c1 + c2 * x) * p - c3 * pm1) / den;
        pm1 = p;
        p = next;
    }
    return p;
}

namespace detail {

inline bool is_nonpositive_integer(double v) {
    return v <= 0.0 && std::floor(v) == v;
}

// Exact finite sum for 1F1(-n; b; z).
inline double kummer_polynomial(int n, double b, double z) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < n; ++k) {
        term *= (static_cast<double>(-n) + k) * z / ((b + k) * (k + 1.0));
        sum += term;
    }
    return sum;
}

inline double kummer_series(double a, double b, double z, const Accuracy& acc) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < acc.max_terms; ++k) {
        term *= (a + k) * z / ((b + k) * (k + 1.0));
        sum += term;
        if (std::abs(term) <= acc.abs_tol + acc.rel_tol * std::abs(sum))
            return sum;
    }
    throw convergence_error("kummer_1f1: series not converged within max_terms");
}

}

// Confluent hypergeometric function 1F1(a; b; z).
// z < 0 goes through the Kummer transformation 1F1(a;b;z) = e^z 1F1(b-a;b;-z)
// to avoid cancellation; a = -n is summed exactly.
inline double kummer_1f1(double a, double b, double z, const Accuracy& acc = {}) {
    acc.validate();
    if (detail::is_nonpositive_integer(b)) {
        const bool poly_ok = detail::is_nonpositive_integer(a) && std::abs(a) <= std::abs(b);
        if (!poly_ok)
            throw std::domain_error("kummer_1f1: b is a non-positive integer outside the polynomial case");
    }
    if (detail::is_nonpositive_integer(a))
        return detail::kummer_polynomial(static_cast<int>(-a), b, z);
    if (z < 0.0)
        return std::exp(z) * kummer_1f1(b - a, b, -z, acc);
    return detail::kummer_series(a, b, z, acc);
}

// Dawson integral D(x) = e^{-x^2} int_0^x e^{t^2} dt.
// Three regimes: Maclaurin series, Rybicki's sampling series (h = 0.25,
// discretization error ~ exp(-pi^2/(4h^2)) ~ 7e-18), and the asymptotic
// expansion in 1/(2x^2).
inline double dawson(double x) {
    const double ax = std::abs(x);
    double r;
    if (ax <= 1.0) {
        const double x2 = ax * ax;
        double term = ax, sum = ax;
        for (int k = 1; k < 100; ++k) {
            term *= -2.0 * x2 / (2.0 * k + 1.0);
            sum += term;
            if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
        }
        r = sum;
    } else if (ax < 7.0) {
        const double h = 0.25;
        const double reach = 6.8;  // exp(-reach^2) ~ 8e-21
        int n = static_cast<int>(std::ceil((ax - reach) / h));
        if (n % 2 == 0) ++n;
        const int nhi = static_cast<int>(std::floor((ax + reach) / h));
        double sum = 0.0;
        for (; n <= nhi; n += 2) {
            if (n == 0) continue;
            const double t = ax - n * h;
            sum += std::exp(-t * t) / n;
        }
        r = sum / sqrt_pi;
    } else {
        const double ix2 = 0.5 / (ax * ax);
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 60; ++k) {
            term *= (2.0 * k - 1.0) * ix2;
            sum += term;
            if (term <= 1e-18 * sum) break;
        }
        r = sum / (2.0 * ax);
    }
    return x < 0.0 ? -r : r;
}

// Imaginary error function erfi(x) = (2/sqrt(pi)) int_0^x e^{t^2} dt.
// The Maclaurin sum has all-positive terms (no cancellation); beyond its
// comfortable range the identity erfi = (2/sqrt(pi)) e^{x^2} D(x) takes over.
// Unscaled values overflow for x^2 > ~709; callers needing e^{-c} erfi(x) at
// large x must combine exponents analytically and use dawson directly.
inline double erfi(double x) {
    const double ax = std::abs(x);
    double r;
    if (ax <= 8.0) {
        const double x2 = ax * ax;
        double pk = ax;  // x^(2k+1)/k!
        double sum = ax;
        for (int k = 1; k < 400; ++k) {
            pk *= x2 / k;
            const double term = pk / (2.0 * k + 1.0);
            sum += term;
            if (term <= 1e-17 * sum) break;
        }
        r = two_over_sqrt_pi * sum;
    } else {
        if (ax * ax > 709.0)
            throw std::range_error("erfi: unscaled value overflows for |x| > ~26.6; use the scaled dawson path");
        r = two_over_sqrt_pi * std::exp(ax * ax) * dawson(ax);
    }
    return x < 0.0 ? -r : r;
}

}

#endif
