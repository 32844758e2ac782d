#ifndef DUNKLMORSE_HIGHPREC_HPP
#define DUNKLMORSE_HIGHPREC_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dunklmorse/errors.hpp"

// Ground-truth references at 50 decimal digits. Everything here is a direct
// series or explicit finite sum, independent of the double-precision kernels
// it certifies (in particular no Kummer transformation and no recurrences).

namespace dunklmorse::highprec {

using float50 = boost::multiprecision::cpp_bin_float_50;

inline const float50& pi50() {
    static const float50 v = acos(float50(-1));
    return v;
}

namespace detail {

// Bernoulli numbers B_2..B_34 as exact rationals. At the y >= 40 shift the
// first omitted term is below 1e-45 of ln Gamma, past the 50-digit target.
struct Bern { long long num; long long den; };
inline constexpr Bern bernoulli_table[] = {
    {1, 6}, {-1, 30}, {1, 42}, {-1, 30}, {5, 66}, {-691, 2730}, {7, 6},
    {-3617, 510}, {43867, 798}, {-174611, 330}, {854513, 138},
    {-236364091, 2730}, {8553103, 6}, {-23749461029LL, 870},
    {8615841276005LL, 14322}, {-7709321041217LL, 510}, {2577687858367LL, 6}};

}

// ln Gamma(x) by argument shift into the Stirling regime plus the Bernoulli
// asymptotic series; good to well past 40 digits for the shifted argument.
inline float50 ln_gamma(const float50& x) {
    if (!(x > 0))
        throw oracle_error("highprec::ln_gamma: requires x > 0");
    float50 shift = 0;
    float50 y = x;
    while (y < 40) {
        shift += log(y);
        y += 1;
    }
    float50 r = (y - float50(0.5)) * log(y) - y + log(2 * pi50()) / 2;
    float50 ypow = y;
    const float50 y2 = y * y;
    for (std::size_t k = 0; k < std::size(detail::bernoulli_table); ++k) {
        const auto& b = detail::bernoulli_table[k];
        const float50 term = float50(b.num) / (float50(b.den) * (2 * (k + 1)) *
                                               (2 * (k + 1) - 1) * ypow);
        r += term;
        ypow *= y2;
    }
    return r - shift;
}

// Jacobi polynomial by the explicit finite sum
//   P_n^(a,b)(x) = 2^-n sum_s C(n+a, s) C(n+b, n-s) (x-1)^(n-s) (x+1)^s
// with generalized binomials as plain products.
inline float50 jacobi(int n, const float50& a, const float50& b, const float50& x) {
    if (n < 0)
        throw oracle_error("highprec::jacobi: degree must be non-negative");
    auto binom = [](const float50& top, int k) {
        float50 r = 1;
        for (int j = 1; j <= k; ++j) r *= (top - (k - j)) / j;
        return r;
    };
    float50 sum = 0;
    for (int s = 0; s <= n; ++s)
        sum += binom(n + a, s) * binom(n + b, n - s) * pow(x - 1, n - s) * pow(x + 1, s);
    return sum / pow(float50(2), n);
}

// 1F1 by its Taylor series, summed directly even for z < 0 (50 digits absorb
// the cancellation on the tested ranges); terminates exactly for a = -n.
inline float50 kummer_1f1(const float50& a, const float50& b, const float50& z,
                          int max_terms = 100000) {
    float50 term = 1, sum = 1;
    for (int k = 0; k < max_terms; ++k) {
        if (a + k == 0) return sum;  // polynomial case terminated
        if (b + k == 0)
            throw oracle_error("highprec::kummer_1f1: b hits a non-positive integer");
        term *= (a + k) * z / ((b + k) * (k + 1));
        sum += term;
        if (abs(term) <= float50("1e-45") * abs(sum)) return sum;
    }
    throw oracle_error("highprec::kummer_1f1: series not converged");
}

// erfi by its Maclaurin series (all terms positive).
inline float50 erfi(const float50& x) {
    const float50 x2 = x * x;
    float50 pk = x;  // x^(2k+1)/k!
    float50 sum = x;
    for (int k = 1; k < 100000; ++k) {
        pk *= x2 / k;
        const float50 term = pk / (2 * k + 1);
        sum += term;
        if (abs(term) <= float50("1e-45") * abs(sum))
            return 2 / sqrt(pi50()) * sum;
    }
    throw oracle_error("highprec::erfi: series not converged");
}

inline float50 dawson(const float50& x) {
    return exp(-x * x) * sqrt(pi50()) / 2 * erfi(x);
}

// double-precision convenience wrappers
inline double ref_ln_gamma(double x) { return static_cast<double>(ln_gamma(float50(x))); }
inline double ref_jacobi(int n, double a, double b, double x) {
    return static_cast<double>(jacobi(n, float50(a), float50(b), float50(x)));
}
inline double ref_kummer_1f1(double a, double b, double z) {
    return static_cast<double>(kummer_1f1(float50(a), float50(b), float50(z)));
}
inline double ref_erfi(double x) { return static_cast<double>(erfi(float50(x))); }
inline double ref_dawson(double x) { return static_cast<double>(dawson(float50(x))); }

}

#endif
