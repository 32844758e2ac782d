#ifndef DUNKLMORSE_THERMO_HPP
#define DUNKLMORSE_THERMO_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "dunklmorse/dunkl.hpp"
#include "dunklmorse/errors.hpp"
#include "dunklmorse/molecule.hpp"
#include "dunklmorse/pekeris.hpp"
#include "dunklmorse/specfun.hpp"

namespace dunklmorse::thermo {

// Boltzmann constant in the spectroscopic unit system (energies in cm^-1,
// temperatures in kelvin).
inline constexpr double kb_cm_per_k = 0.695034800;

// Vibrational-sector constants (ell = m = 0, so the angular coefficient is
// mu(mu+1) alone). lambda_max = -H is the real-valued top of the ladder;
// H + lambda_max + 1 = 1 identically.
struct ThermoParams {
    double P = 0.0;
    double alpha = 0.0;
    double mu = 0.0;
    double q = 0.0;          // mu(mu+1) C0
    double h = 0.0;          // 1/2 - xi1^2/(eta1 alpha)
    double lambda_max = 0.0; // -h
    double xi1_sq = 0.0;
    double eta1 = 0.0;
    pekeris::PekerisCoeffs coeffs;
};

inline ThermoParams thermo_params(const Molecule& mol, const DunklParams& p,
                                  pekeris::PekerisVariant v) {
    ThermoParams tp;
    tp.P = mol.P;
    tp.alpha = mol.alpha;
    tp.mu = p.mu();
    tp.coeffs = pekeris::pekeris_coefficients(mol.alpha, v);
    const double mm1 = tp.mu * (tp.mu + 1.0);
    const double dp = mol.D / mol.P;
    tp.xi1_sq = dp - tp.coeffs.c1 * mm1 / 2.0;
    const double eta1_sq = dp + tp.coeffs.c2 * mm1;
    if (!(eta1_sq > 0.0))
        throw unphysical_error("thermo_params: eta1^2 <= 0 (unphysical configuration)");
    tp.eta1 = std::sqrt(eta1_sq);
    tp.q = mm1 * tp.coeffs.c0;
    tp.h = 0.5 - tp.xi1_sq / (tp.eta1 * mol.alpha);
    tp.lambda_max = -tp.h;
    return tp;
}

// Vibrational ladder E_n, n = 0 .. floor(lambda_max) (clamped to keep at
// least the ground level), in cm^-1.
inline std::vector<double> vibrational_levels(const ThermoParams& tp) {
    const double s1 = tp.xi1_sq / (tp.eta1 * tp.alpha);
    const long ntop = std::max(0L, static_cast<long>(std::floor(tp.lambda_max)));
    std::vector<double> levels;
    levels.reserve(ntop + 1);
    for (long n = 0; n <= ntop; ++n) {
        const double t = n + 0.5 - s1;
        levels.push_back(tp.P * (tp.q - tp.alpha * tp.alpha * t * t));
    }
    return levels;
}

// Z(beta) = sum_n e^{-beta E_n} by compensated summation. Serves as the
// oracle for the closed form.
inline double partition_direct(double beta, std::span<const double> levels) {
    if (levels.empty())
        throw std::domain_error("partition_direct: empty level list");
    double sum = 0.0, comp = 0.0;
    for (double e : levels) {
        const double term = std::exp(-beta * e);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

namespace detail {

// ln sum_n e^{-beta (E_n - e_shift)}: the shift stays inside the exponent so
// the result is exact near zero (adding -beta*e0 after the fact would smear
// machine-eps of the large term over the tiny remainder).
inline double ln_partition_direct_shifted(double beta, std::span<const double> levels,
                                          double e_shift) {
    double sum = 0.0, comp = 0.0;
    for (double e : levels) {
        const double term = std::exp(-beta * (e - e_shift));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return std::log(sum);
}

}

inline double ln_partition_direct(double beta, std::span<const double> levels) {
    if (levels.empty())
        throw std::domain_error("ln_partition_direct: empty level list");
    const double e0 = *std::min_element(levels.begin(), levels.end());
    return -beta * e0 + detail::ln_partition_direct_shifted(beta, levels, e0);
}

namespace detail {

// The closed form is a two-exponential boundary term plus an erfi-difference
// integral term. Both are assembled from exponents combined analytically,
//   e2 = beta P (alpha^2 H^2 - Q),   e1 = beta P (alpha^2 (lam+1+H)^2 - Q),
// with erfi folded into dawson so nothing overflows before the final exp:
//   ln Z = m + ln( c2 e^{e2-m} + c1 e^{e1-m} ),
//   c2 = 1/2 - D(x2)/(alpha sqrt(beta P)),  c1 = D(x1)/(alpha sqrt(beta P)) - 1/2.
struct ClosedParts {
    double e1 = 0.0, e2 = 0.0;
    double c1 = 0.0, c2 = 0.0;
};

// shift_over_p moves the energy reference inside the exponent arithmetic;
// with shift_over_p = q - (alpha h)^2 the dominant exponent is exactly zero.
inline ClosedParts closed_parts(double beta, const ThermoParams& tp,
                                double shift_over_p = 0.0) {
    if (!(beta > 0.0))
        throw std::domain_error("partition_closed: beta must be positive");
    const double bp = beta * tp.P;
    const double rt = std::sqrt(bp);
    const double a = tp.alpha;
    const double top = tp.lambda_max + 1.0 + tp.h;  // = 1 identically for lam = -H
    ClosedParts parts;
    parts.e2 = bp * (a * a * tp.h * tp.h - tp.q + shift_over_p);
    parts.e1 = bp * (a * a * top * top - tp.q + shift_over_p);
    const double x2 = a * tp.h * rt;
    const double x1 = a * top * rt;
    parts.c2 = 0.5 - specfun::dawson(x2) / (a * rt);
    parts.c1 = specfun::dawson(x1) / (a * rt) - 0.5;
    return parts;
}

inline double ln_partition_closed_shifted(double beta, const ThermoParams& tp,
                                          double shift_over_p) {
    const auto parts = closed_parts(beta, tp, shift_over_p);
    const double m = std::max(parts.e1, parts.e2);
    const double z = parts.c2 * std::exp(parts.e2 - m) + parts.c1 * std::exp(parts.e1 - m);
    if (!(z > 0.0))
        throw convergence_error("ln_partition_closed: non-positive scaled partition value");
    return m + std::log(z);
}

}

inline double ln_partition_closed(double beta, const ThermoParams& tp) {
    return detail::ln_partition_closed_shifted(beta, tp, 0.0);
}

inline double partition_closed(double beta, const ThermoParams& tp) {
    const double lnz = ln_partition_closed(beta, tp);
    if (lnz > 709.0)
        throw std::range_error("partition_closed: Z overflows at this beta; extreme beta*P");
    return std::exp(lnz);
}

enum class ThermoMethod { closed_form, direct_sum };

inline const char* method_name(ThermoMethod m) {
    return m == ThermoMethod::closed_form ? "closed_form" : "direct_sum";
}

// One temperature sample. Energies in cm^-1; S and Cv in cm^-1 K^-1.
struct ThermoPoint {
    double T = 0.0;
    double beta = 0.0;  // inverse temperature 1/(kB T)
    double Z = 0.0;
    double F = 0.0;
    double U = 0.0;
    double S = 0.0;
    double Cv = 0.0;
    ThermoMethod method = ThermoMethod::direct_sum;
};

namespace detail {

// First/second derivative of a smooth scalar function by central differences
// with a Richardson (Neville) cascade; step halving with noise-onset
// detection. phi is evaluated ~2 per level.
struct Derivs {
    double d1 = 0.0;
    double d2 = 0.0;
};

inline Derivs differentiate(const std::function<double(double)>& phi, double beta) {
    constexpr int max_level = 8;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double phi0 = phi(beta);
    double h = beta * 1e-2;
    double h_last = h;

    double tab1[max_level][max_level];
    double tab2[max_level][max_level];
    double best1 = 0.0, best2 = 0.0;
    double err1 = std::numeric_limits<double>::infinity();
    double err2 = err1;
    int worse = 0;

    for (int i = 0; i < max_level; ++i, h *= 0.5) {
        const double fp = phi(beta + h);
        const double fm = phi(beta - h);
        tab1[i][0] = (fp - fm) / (2.0 * h);
        tab2[i][0] = (fp - 2.0 * phi0 + fm) / (h * h);
        double fac = 1.0;
        for (int j = 1; j <= i; ++j) {
            fac *= 4.0;
            tab1[i][j] = (fac * tab1[i][j - 1] - tab1[i - 1][j - 1]) / (fac - 1.0);
            tab2[i][j] = (fac * tab2[i][j - 1] - tab2[i - 1][j - 1]) / (fac - 1.0);
        }
        if (i > 0) {
            const double e1 = std::abs(tab1[i][i] - tab1[i - 1][i - 1]);
            const double e2 = std::abs(tab2[i][i] - tab2[i - 1][i - 1]);
            bool improved = false;
            if (e1 <= err1) { err1 = e1; best1 = tab1[i][i]; improved = true; }
            if (e2 <= err2) { err2 = e2; best2 = tab2[i][i]; improved = true; }
            if (improved) h_last = h;
            worse = improved ? 0 : worse + 1;
            const bool done1 = err1 <= 1e-9 * std::abs(best1) + 1e-300;
            const bool done2 = err2 <= 1e-9 * std::abs(best2) + 1e-300;
            if ((done1 && done2) || worse >= 2) break;
        } else {
            best1 = tab1[0][0];
            best2 = tab2[0][0];
        }
    }
    // converged to the requested precision or down to the rounding floor of
    // the difference quotients; anything noisier means phi is not smooth here
    const double scale = std::max(1.0, std::abs(phi0));
    const double floor1 = 64.0 * eps * scale / h_last;
    const double floor2 = 64.0 * eps * scale / (h_last * h_last);
    if (!(err1 <= std::max(1e-6 * std::abs(best1), floor1)) ||
        !(err2 <= std::max(1e-6 * std::abs(best2), floor2)))
        throw differentiation_error("thermal_functions: log-partition derivatives did not settle");
    return {best1, best2};
}

}

// Thermal functions on a temperature grid.
//   F = -ln Z / beta,  U = -d ln Z/d beta,  S = kB (ln Z + beta U),
//   Cv = kB beta^2 d^2 ln Z/d beta^2.
// Derivatives act on the linearly shifted phi(beta) = ln Z + beta E_ref so the
// large ground-state term drops out before differencing. For the direct sum,
// U and Cv come from the exact moment formulas (<E> and the energy variance);
// the finite-difference route is kept as a cross-check (see
// derivative_consistency).
inline std::vector<ThermoPoint> thermal_functions(const ThermoParams& tp,
                                                  std::span<const double> T_grid,
                                                  ThermoMethod method) {
    for (std::size_t i = 0; i < T_grid.size(); ++i) {
        if (!(T_grid[i] > 0.0))
            throw std::domain_error("thermal_functions: temperatures must be positive");
        if (i > 0 && !(T_grid[i] > T_grid[i - 1]))
            throw std::domain_error("thermal_functions: temperature grid must be increasing");
    }

    // phi(beta) = ln Z + beta * e_ref with the reference energy folded into
    // the exponents analytically, so phi is O(1) and eps-clean for differencing
    std::vector<double> levels;
    double e_ref = 0.0;
    std::function<double(double)> phi;
    if (method == ThermoMethod::direct_sum) {
        levels = vibrational_levels(tp);
        e_ref = *std::min_element(levels.begin(), levels.end());
        phi = [&levels, e_ref](double b) {
            return detail::ln_partition_direct_shifted(b, levels, e_ref);
        };
    } else {
        const double shift_over_p = tp.q - tp.alpha * tp.alpha * tp.h * tp.h;
        e_ref = tp.P * shift_over_p;
        phi = [&tp, shift_over_p](double b) {
            return detail::ln_partition_closed_shifted(b, tp, shift_over_p);
        };
    }

    std::vector<ThermoPoint> out;
    out.reserve(T_grid.size());
    for (double T : T_grid) {
        const double beta = 1.0 / (kb_cm_per_k * T);
        const double ph = phi(beta);
        const double lnz = ph - beta * e_ref;
        ThermoPoint pt;
        pt.T = T;
        pt.beta = beta;
        pt.method = method;
        pt.Z = std::exp(lnz);  // may overflow to inf at very low T; the
                               // logarithmic quantities below stay finite
        pt.F = e_ref - ph / beta;
        if (method == ThermoMethod::direct_sum) {
            // exact moments with shifted energies
            double z = 0.0, m1 = 0.0;
            for (double e : levels) z += std::exp(-beta * (e - e_ref));
            for (double e : levels) m1 += (e - e_ref) * std::exp(-beta * (e - e_ref));
            m1 /= z;
            double var = 0.0;
            for (double e : levels) {
                const double d = (e - e_ref) - m1;
                var += d * d * std::exp(-beta * (e - e_ref));
            }
            var /= z;
            pt.U = e_ref + m1;
            pt.Cv = kb_cm_per_k * beta * beta * var;
            pt.S = kb_cm_per_k * (ph + beta * m1);
        } else {
            const auto d = detail::differentiate(phi, beta);
            pt.U = e_ref - d.d1;
            pt.Cv = kb_cm_per_k * beta * beta * d.d2;
            pt.S = kb_cm_per_k * (ph - beta * d.d1);
        }
        out.push_back(pt);
    }
    return out;
}

// Max disagreement between the finite-difference derivatives of ln Z_direct
// and the exact moment formulas over a grid. Cv deviations are measured
// relative to the pointwise value floored at 1e-3 of the grid maximum (the
// tail values sit below finite-difference resolution).
struct DerivativeAgreement {
    double max_rel_u = 0.0;
    double max_rel_cv = 0.0;
};

inline DerivativeAgreement derivative_consistency(const ThermoParams& tp,
                                                  std::span<const double> T_grid) {
    const std::vector<double> levels = vibrational_levels(tp);
    const double e_ref = *std::min_element(levels.begin(), levels.end());
    auto phi = [&](double b) {
        return detail::ln_partition_direct_shifted(b, levels, e_ref);
    };

    const auto exact = thermal_functions(tp, T_grid, ThermoMethod::direct_sum);
    double cv_scale = 0.0;
    for (const auto& pt : exact) cv_scale = std::max(cv_scale, std::abs(pt.Cv));

    DerivativeAgreement agg;
    for (std::size_t i = 0; i < T_grid.size(); ++i) {
        const double beta = exact[i].beta;
        const auto d = detail::differentiate(phi, beta);
        const double u_fd = e_ref - d.d1;
        const double cv_fd = kb_cm_per_k * beta * beta * d.d2;
        agg.max_rel_u = std::max(agg.max_rel_u,
                                 std::abs(u_fd - exact[i].U) / std::abs(exact[i].U));
        agg.max_rel_cv = std::max(agg.max_rel_cv,
                                  std::abs(cv_fd - exact[i].Cv) /
                                      std::max(std::abs(exact[i].Cv), 1e-3 * cv_scale));
    }
    return agg;
}

}

#endif
