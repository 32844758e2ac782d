#ifndef DUNKLMORSE_ORACLE_HPP
#define DUNKLMORSE_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dunklmorse/dunkl.hpp"
#include "dunklmorse/errors.hpp"
#include "dunklmorse/molecule.hpp"
#include "dunklmorse/pekeris.hpp"

namespace dunklmorse::oracle {

// Uniform grid on (chi_min, chi_max) with Dirichlet ends.
struct Discretization {
    double chi_min = -0.999;
    double chi_max = 4.0;
    int n_points = 8192;

    void validate() const {
        if (!(chi_min > -1.0))
            throw std::domain_error("Discretization: chi_min must exceed -1");
        if (!(chi_max > chi_min))
            throw std::domain_error("Discretization: chi_max must exceed chi_min");
        if (n_points < 100)
            throw std::domain_error("Discretization: n_points must be >= 100");
    }
    double step() const { return (chi_max - chi_min) / (n_points - 1); }
};

namespace detail {

// Number of eigenvalues of the symmetric tridiagonal (diag, off) below x,
// by the standard LDL^T sign count.
inline int sturm_count(const std::vector<double>& diag,
                       const std::vector<double>& off, double x) {
    const double tiny = 1e-300;
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        double d = q;
        if (std::abs(d) < tiny) d = d < 0.0 ? -tiny : tiny;
        q = diag[i] - x - off[i - 1] * off[i - 1] / d;
        if (q < 0.0) ++count;
    }
    return count;
}

// k lowest eigenvalues by bisection on the Sturm count.
inline std::vector<double> lowest_eigenvalues(const std::vector<double>& diag,
                                              const std::vector<double>& off, int k) {
    const std::size_t n = diag.size();
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    const double span = hi - lo;
    std::vector<double> out;
    out.reserve(k);
    for (int j = 1; j <= k; ++j) {
        double a = lo, b = hi;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(diag, off, mid) >= j) b = mid;
            else a = mid;
            if (b - a <= 1e-15 * span) break;
        }
        out.push_back(0.5 * (a + b));
    }
    return out;
}

// Eigenvector by inverse iteration: a few solves of (T - lambda I) v = b with
// a banded partial-pivot LU (pivoting keeps the nearly singular solve stable).
inline std::vector<double> inverse_iteration(const std::vector<double>& diag,
                                             const std::vector<double>& off,
                                             double lambda) {
    const std::size_t n = diag.size();
    double scale = 0.0;
    for (double d : diag) scale = std::max(scale, std::abs(d));
    const double shifted = lambda + 1e-12 * std::max(scale, 1.0);

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int pass = 0; pass < 3; ++pass) {
        // band LU of (T - shifted I): rows carry [lower, main, upper, upper2]
        std::vector<double> a(n, 0.0), b(n), c(n, 0.0), d2(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            b[i] = diag[i] - shifted;
            if (i + 1 < n) { a[i + 1] = off[i]; c[i] = off[i]; }
        }
        std::vector<double> x = v;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(a[i + 1]) > std::abs(b[i])) {
                std::swap(b[i], a[i + 1]);
                std::swap(c[i], b[i + 1]);
                std::swap(d2[i], c[i + 1]);
                std::swap(x[i], x[i + 1]);
            }
            if (b[i] == 0.0) b[i] = 1e-300;
            const double m = a[i + 1] / b[i];
            b[i + 1] -= m * c[i];
            c[i + 1] -= m * d2[i];
            x[i + 1] -= m * x[i];
        }
        if (b[n - 1] == 0.0) b[n - 1] = 1e-300;
        x[n - 1] /= b[n - 1];
        x[n - 2] = (x[n - 2] - c[n - 2] * x[n - 1]) / b[n - 2];
        for (std::size_t ii = n - 2; ii-- > 0;)
            x[ii] = (x[ii] - c[ii] * x[ii + 1] - d2[ii] * x[ii + 2]) / b[ii];
        double norm = 0.0;
        for (double t : x) norm = std::max(norm, std::abs(t));
        for (double& t : x) t /= norm;
        v = std::move(x);
    }
    return v;
}

}

// k lowest eigenvalues of -d^2/dx^2 + V(x) on [a, b] with Dirichlet ends,
// 3-point (second-order) discretization. boundary_tol bounds the admissible
// eigenvector amplitude at the first/last interior node, normalized to
// max-abs 1; a violation means the box clips the state.
inline std::vector<double> schrodinger_eigenvalues(
    const std::function<double(double)>& V, double a, double b, int n_points,
    int k, double boundary_tol = 1e-8) {
    if (n_points < 100)
        throw std::domain_error("schrodinger_eigenvalues: n_points must be >= 100");
    if (k < 1 || k > n_points - 2)
        throw std::domain_error("schrodinger_eigenvalues: bad eigenvalue count");
    const double h = (b - a) / (n_points - 1);
    const int n = n_points - 2;  // interior nodes
    std::vector<double> diag(n), off(n - 1, -1.0 / (h * h));
    for (int i = 0; i < n; ++i)
        diag[i] = 2.0 / (h * h) + V(a + (i + 1) * h);

    std::vector<double> evals = detail::lowest_eigenvalues(diag, off, k);
    if (boundary_tol > 0.0) {
        const auto v = detail::inverse_iteration(diag, off, evals[k - 1]);
        if (std::abs(v.front()) > boundary_tol || std::abs(v.back()) > boundary_tol)
            throw domain_too_small_error(
                "schrodinger_eigenvalues: wavefunction amplitude leaks into the boundary");
    }
    return evals;
}

enum class CentrifugalForm { pekeris, exact };

// Brute-force eigenvalues (cm^-1) of the radial problem
//   -d^2/dchi^2 + A * [centrifugal] + (D/P)(e^{-2 alpha chi} - 2 e^{-alpha chi})
// with the centrifugal factor either the exponential closure
// C0 + C1 e^{-alpha chi} + C2 e^{-2 alpha chi} or the exact 1/(1+chi)^2.
inline std::vector<double> radial_eigensolve(const Molecule& mol,
                                             const DunklParams& p, double A,
                                             const Discretization& disc,
                                             pekeris::PekerisVariant variant, int k,
                                             CentrifugalForm form = CentrifugalForm::pekeris) {
    disc.validate();
    const auto c = pekeris::pekeris_coefficients(mol.alpha, variant);
    const double dp = mol.D / mol.P;
    const double alpha = mol.alpha;
    auto pot = [&](double chi) {
        const double y = std::exp(-alpha * chi);
        const double morse = dp * (y * y - 2.0 * y);
        const double cent = form == CentrifugalForm::pekeris
                                ? c.c0 + c.c1 * y + c.c2 * y * y
                                : 1.0 / ((1.0 + chi) * (1.0 + chi));
        return A * cent + morse;
    };
    (void)p;  // deformation enters through A
    auto evals = schrodinger_eigenvalues(pot, disc.chi_min, disc.chi_max,
                                         disc.n_points, k);
    for (double& e : evals) e *= mol.P;
    return evals;
}

// Self-sizing variant: starts at chi_max = 6/alpha scales and doubles the box
// until the boundary-leak check passes.
inline std::vector<double> radial_eigensolve_auto(const Molecule& mol,
                                                  const DunklParams& p, double A,
                                                  pekeris::PekerisVariant variant, int k,
                                                  CentrifugalForm form = CentrifugalForm::pekeris,
                                                  int n_points = 8192) {
    Discretization disc;
    disc.chi_max = 6.0 / mol.alpha;
    disc.n_points = n_points;
    for (int attempt = 0; attempt < 5; ++attempt) {
        try {
            return radial_eigensolve(mol, p, A, disc, variant, k, form);
        } catch (const domain_too_small_error&) {
            disc.chi_max *= 2.0;
        }
    }
    throw domain_too_small_error("radial_eigensolve_auto: box still leaking after doublings");
}

namespace detail {

inline constexpr double fd1w[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
inline constexpr double fd2w0 = -205.0 / 72.0;
inline constexpr double fd2w[4] = {8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0};

}

// Max-norm residual of the rho-form radial operator applied to psi on a
// uniform grid over [rho_lo, rho_hi], normalized by max|psi|:
//   rho^2 psi'' + rho psi' + [ 2 xi^2 rho / alpha^2 - gamma^2 rho^2 + w ] psi,
// where w = (E_n/P - A C0)/alpha^2 = -beta_n^2 for the quantized level.
// Derivatives by 8th-order central differences (interior points only).
inline double ode_residual(const pekeris::SpectralParams& sp, int n,
                           const std::function<double(double)>& psi,
                           double rho_lo, double rho_hi, int n_points) {
    if (n_points < 64)
        throw std::domain_error("ode_residual: n_points must be >= 64");
    if (!(rho_lo > 0.0) || !(rho_hi > rho_lo))
        throw std::domain_error("ode_residual: need 0 < rho_lo < rho_hi");
    const double h = (rho_hi - rho_lo) / (n_points - 1);
    std::vector<double> f(n_points);
    for (int i = 0; i < n_points; ++i) f[i] = psi(rho_lo + i * h);

    const double beta_n = sp.beta_exp(n);
    const double w = -beta_n * beta_n;
    const double g2 = sp.gamma * sp.gamma;
    const double xi_term = 2.0 * sp.xi_sq / (sp.alpha * sp.alpha);

    double fmax = 0.0;
    for (double v : f) fmax = std::max(fmax, std::abs(v));
    if (fmax == 0.0) return 0.0;

    double resid = 0.0;
    for (int i = 4; i + 4 < n_points; ++i) {
        const double rho = rho_lo + i * h;
        double d1 = 0.0, d2 = detail::fd2w0 * f[i];
        for (int s = 1; s <= 4; ++s) {
            d1 += detail::fd1w[s - 1] * (f[i + s] - f[i - s]);
            d2 += detail::fd2w[s - 1] * (f[i + s] + f[i - s]);
        }
        d1 /= h;
        d2 /= (h * h);
        const double lhs = rho * rho * d2 + rho * d1 +
                           (xi_term * rho - g2 * rho * rho + w) * f[i];
        resid = std::max(resid, std::abs(lhs));
    }
    return resid / fmax;
}

inline double ode_residual(const pekeris::SpectralParams& sp, int n,
                           double rho_lo, double rho_hi, int n_points,
                           pekeris::RadialWavefunction::Argument arg =
                               pekeris::RadialWavefunction::Argument::consistent) {
    const pekeris::RadialWavefunction psi(sp, n, arg);
    return ode_residual(sp, n, [&](double r) { return psi(r); }, rho_lo, rho_hi,
                        n_points);
}

}

#endif
