#ifndef DUNKLMORSE_PEKERIS_HPP
#define DUNKLMORSE_PEKERIS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "dunklmorse/angular.hpp"
#include "dunklmorse/dunkl.hpp"
#include "dunklmorse/errors.hpp"
#include "dunklmorse/molecule.hpp"
#include "dunklmorse/quadrature.hpp"
#include "dunklmorse/specfun.hpp"

namespace dunklmorse::pekeris {

inline constexpr double cm_per_ev = 8065.543937;

// The two coefficient readings for the exponential closure of (1+chi)^-2.
// `paper` is the published set; `taylor_matched` flips the 6/alpha^2 term in
// C1 so that the second-order Taylor match at chi = 0 actually holds:
//   C0 + C1 + C2 = 1,  C1 + 2 C2 = 2/alpha,  C1/2 + 2 C2 = 3/alpha^2.
enum class PekerisVariant { paper, taylor_matched };

inline const char* variant_name(PekerisVariant v) {
    return v == PekerisVariant::paper ? "paper" : "taylor";
}

struct PekerisCoeffs {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    PekerisVariant variant = PekerisVariant::paper;
};

inline PekerisCoeffs pekeris_coefficients(double alpha, PekerisVariant v) {
    if (!(alpha > 0.0))
        throw std::domain_error("pekeris_coefficients: alpha must be positive");
    const double ia = 1.0 / alpha, ia2 = ia * ia;
    PekerisCoeffs c;
    c.c0 = 1.0 - 3.0 * ia + 3.0 * ia2;
    c.c1 = v == PekerisVariant::paper ? 4.0 * ia + 6.0 * ia2 : 4.0 * ia - 6.0 * ia2;
    c.c2 = -ia + 3.0 * ia2;
    c.variant = v;
    return c;
}

// Combined angular coefficient varpi^2 + mu(mu+1) entering the radial
// problem; identical to varpi^2 + delta(delta+1) since delta = -(1+mu).
inline double angular_coefficient(const DunklParams& p, double ell, double m) {
    const double mu = p.mu();
    return angular::polar_eigenvalue(ell, m, p) + mu * (mu + 1.0);
}

// Constants of the transformed radial equation for one (molecule, deformation,
// angular coefficient) configuration.
struct SpectralParams {
    double A = 0.0;        // varpi^2 + mu(mu+1)
    double d_over_p = 0.0; // D/P, dimensionless
    double xi_sq = 0.0;
    double eta_sq = 0.0;
    double eta = 0.0;
    double gamma = 0.0;    // eta/alpha
    double alpha = 0.0;
    double P = 0.0;        // kinetic prefactor, cm^-1
    PekerisCoeffs coeffs;

    // xi^2/(eta alpha) = xi^2/(gamma alpha^2); center of the level ladder
    double s() const { return xi_sq / (eta * alpha); }
    // affine map from energy (cm^-1) to W = A C0 - E/P
    double w_of_energy(double e_cm) const { return A * coeffs.c0 - e_cm / P; }
    // power-law exponent of the bound level n
    double beta_exp(int n) const { return s() - n - 0.5; }
};

inline SpectralParams spectral_params(const Molecule& mol, const DunklParams& p,
                                      double A, PekerisVariant v) {
    SpectralParams sp;
    sp.A = A;
    sp.coeffs = pekeris_coefficients(mol.alpha, v);
    sp.d_over_p = mol.D / mol.P;
    sp.xi_sq = sp.d_over_p - sp.coeffs.c1 * A / 2.0;
    sp.eta_sq = sp.d_over_p + sp.coeffs.c2 * A;
    if (!(sp.eta_sq > 0.0))
        throw unphysical_error("spectral_params: eta^2 <= 0 (unphysical configuration)");
    if (!(sp.xi_sq > 0.0))
        throw no_binding_error("spectral_params: xi^2 <= 0 (no binding)");
    sp.eta = std::sqrt(sp.eta_sq);
    sp.alpha = mol.alpha;
    sp.gamma = sp.eta / mol.alpha;
    sp.P = mol.P;

    (void)p;  // deformation is already folded into A
    return sp;
}

struct EnergyLevel {
    int n = 0;
    double ell = 0.0;
    double m = 0.0;
    double e_cm = 0.0;
    double e_ev = 0.0;
};

// Closed-form level: E = P [ A C0 - alpha^2 (n + 1/2 - xi^2/(eta alpha))^2 ].
// Defined for every n >= 0; whether n lies in the bound window is a separate
// qualifier (see bound_state_range), not enforced here.
inline EnergyLevel energy(const Molecule& mol, const DunklParams& p, int n,
                          double ell, double m, PekerisVariant v) {
    if (n < 0)
        throw std::domain_error("energy: n must be non-negative");
    const double A = angular_coefficient(p, ell, m);
    const SpectralParams sp = spectral_params(mol, p, A, v);
    const double t = n + 0.5 - sp.s();
    EnergyLevel lev;
    lev.n = n;
    lev.ell = ell;
    lev.m = m;
    lev.e_cm = mol.P * (A * sp.coeffs.c0 - mol.alpha * mol.alpha * t * t);
    lev.e_ev = lev.e_cm / cm_per_ev;
    return lev;
}

struct BoundWindow {
    long n_min = 0;
    long n_max = -1;
    double lo = 0.0;  // real-valued window edges before intersecting with N
    double hi = 0.0;
    bool empty() const { return n_max < n_min; }
};

// Integer window N intersect [s - sqrt(A C0)/alpha - 1/2, s + sqrt(A C0)/alpha - 1/2].
inline BoundWindow bound_state_range(const Molecule& mol, const DunklParams& p,
                                     double ell, double m, PekerisVariant v) {
    const double A = angular_coefficient(p, ell, m);
    const SpectralParams sp = spectral_params(mol, p, A, v);
    const double ac0 = A * sp.coeffs.c0;
    if (ac0 < 0.0)
        throw std::domain_error("bound_state_range: A*C0 < 0");
    const double halfwidth = std::sqrt(ac0) / mol.alpha;
    BoundWindow w;
    w.lo = sp.s() - halfwidth - 0.5;
    w.hi = sp.s() + halfwidth - 0.5;
    w.n_min = std::max(0L, static_cast<long>(std::ceil(w.lo)));
    w.n_max = static_cast<long>(std::floor(w.hi));
    if (w.n_max < w.n_min) { w.n_min = 0; w.n_max = -1; }
    return w;
}

// Bound radial profile Psi(rho) = N rho^beta e^{-gamma rho} 1F1(-n; 1+2 beta; 2 gamma rho),
// unit-normalized under int |Psi|^2 d rho/(alpha rho) over rho in (0, e^alpha).
// Substituting the ansatz into the rho-form radial equation fixes the
// hypergeometric argument as 2 gamma rho; the `as_printed` argument
// alpha rho/(2 eta) is kept behind a flag for comparison runs.
class RadialWavefunction {
public:
    enum class Argument { consistent, as_printed };

    RadialWavefunction(const SpectralParams& sp, int n,
                       Argument arg = Argument::consistent)
        : sp_(sp), n_(n), arg_(arg) {
        if (n < 0)
            throw std::domain_error("RadialWavefunction: n must be non-negative");
        // gamma alpha^2 = eta alpha must hold for s() to be the quantization center
        if (std::abs(sp.gamma * sp.alpha * sp.alpha - sp.eta * sp.alpha) >
            1e-10 * std::abs(sp.eta * sp.alpha))
            throw std::logic_error("RadialWavefunction: inconsistent SpectralParams (gamma alpha^2 != eta alpha)");
        beta_ = sp.beta_exp(n);
        if (!(beta_ > 0.0))
            throw std::domain_error("RadialWavefunction: beta = s - n - 1/2 must be positive for a bound state");
        // quantization: 1/2 - xi^2/(gamma alpha^2) + beta = -n by construction
        const double q = 0.5 - sp.s() + beta_;
        if (std::abs(q + n) > 1e-10 * std::max(1.0, std::abs(static_cast<double>(n))))
            throw std::logic_error("RadialWavefunction: 1F1 parameterization is not the degree-n polynomial");
        norm_ = 1.0 / std::sqrt(squared_norm_raw());
    }

    double rho_max() const { return std::exp(sp_.alpha); }
    double beta() const { return beta_; }
    double gamma() const { return sp_.gamma; }
    double norm_constant() const { return norm_; }
    int n() const { return n_; }

    double operator()(double rho) const { return norm_ * raw(rho); }

    double raw(double rho) const {
        if (!(rho > 0.0)) return 0.0;
        const double z = arg_ == Argument::consistent
                             ? 2.0 * sp_.gamma * rho
                             : sp_.alpha * rho / (2.0 * sp_.eta);
        const double f = specfun::kummer_1f1(-static_cast<double>(n_), 1.0 + 2.0 * beta_, z);
        return std::pow(rho, beta_) * std::exp(-sp_.gamma * rho) * f;
    }

private:
    double squared_norm_raw() const {
        // integrand rho^{2 beta - 1} e^{-2 gamma rho} F^2 / alpha; the rho -> 0
        // endpoint is integrable for beta > 0 and handled by tanh-sinh
        auto integrand = [&](double, double da, double) {
            const double v = raw(da);  // da = rho, exact near the 0 endpoint
            return v * v / (sp_.alpha * da);
        };
        return quadrature::tanh_sinh(integrand, 0.0, rho_max(), 1e-12, 1e-300);
    }

    SpectralParams sp_;
    int n_;
    Argument arg_;
    double beta_ = 0.0;
    double norm_ = 1.0;
};

}

#endif
