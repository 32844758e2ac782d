#ifndef DUNKLMORSE_ANGULAR_HPP
#define DUNKLMORSE_ANGULAR_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dunklmorse/dunkl.hpp"
#include "dunklmorse/quadrature.hpp"
#include "dunklmorse/specfun.hpp"

namespace dunklmorse::angular {

// Azimuthal separation constant lambda^2 = 4 m (m + mu1 + mu2).
// Note: legitimately negative for m = 1/2 when mu1 + mu2 < -1/2.
inline double azimuthal_eigenvalue(double m, const DunklParams& p) {
    if (!(m >= 0.0))
        throw std::domain_error("azimuthal_eigenvalue: m must be non-negative");
    return 4.0 * m * (m + p.mu1 + p.mu2);
}

// Polar separation constant varpi^2 = 4 (ell+m) (ell+m + mu + 1/2).
// At mu = 0 this is L(L+1) with the composite index L = 2(ell+m).
inline double polar_eigenvalue(double ell, double m, const DunklParams& p) {
    if (!(ell >= 0.0) || !(m >= 0.0))
        throw std::domain_error("polar_eigenvalue: indices must be non-negative");
    const double k = ell + m;
    return 4.0 * k * (k + p.mu() + 0.5);
}

namespace detail {

inline double ipow(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

// pow with a stably computed base, for weight factors like ((1-x)/2)^mu
inline double wpow(double base, double expo) {
    return expo == 0.0 ? 1.0 : std::pow(base, expo);
}

}

// One of the four azimuthal eigenfunction families, normalized to unit norm
// under the weight |cos phi|^(2 mu1) |sin phi|^(2 mu2) on [0, 2 pi).
//
// (+,+): P_m^(mu1-1/2, mu2-1/2)(-cos 2phi)
// (-,-): sin 2phi * P_{m-1}^(mu1+1/2, mu2+1/2)(-cos 2phi)
// (+,-): sin phi  * P_{m-1/2}^(mu1-1/2, mu2+1/2)(-cos 2phi)
// (-,+): cos phi  * P_{m-1/2}^(mu1+1/2, mu2-1/2)(-cos 2phi)
class AzimuthalWave {
public:
    AzimuthalWave(const ParityLabels& labels, double m, const DunklParams& p)
        : labels_(labels), m_(m), p_(p) {
        labels.validate();
        if (!(m >= 0.0) || !halfint::is_half_integer(m))
            throw std::domain_error("AzimuthalWave: m must be a non-negative half-integer");
        if (labels.s1 * labels.s2 == 1 ? !halfint::is_integer(m) : !halfint::is_half_odd(m))
            throw std::domain_error("AzimuthalWave: m parity inconsistent with (s1, s2)");
        if (labels.s1 == -1 && labels.s2 == -1 && !(m >= 1.0))
            throw std::domain_error("AzimuthalWave: the (-,-) family requires m >= 1");
        if (labels.s1 == 1 && labels.s2 == 1) {
            degree_ = static_cast<int>(m);
            a_ = p.mu1 - 0.5;
            b_ = p.mu2 - 0.5;
        } else if (labels.s1 == -1 && labels.s2 == -1) {
            degree_ = static_cast<int>(m) - 1;
            a_ = p.mu1 + 0.5;
            b_ = p.mu2 + 0.5;
        } else if (labels.s1 == 1) {  // (+,-)
            degree_ = static_cast<int>(m - 0.5);
            a_ = p.mu1 - 0.5;
            b_ = p.mu2 + 0.5;
        } else {                      // (-,+)
            degree_ = static_cast<int>(m - 0.5);
            a_ = p.mu1 + 0.5;
            b_ = p.mu2 - 0.5;
        }
        norm_ = 1.0 / std::sqrt(squared_norm_raw());
    }

    double operator()(double phi) const { return norm_ * raw(phi); }

    // Unnormalized family member.
    double raw(double phi) const {
        const double x = -std::cos(2.0 * phi);
        const double poly = specfun::jacobi(degree_, a_, b_, x);
        if (labels_.s1 == 1 && labels_.s2 == 1) return poly;
        if (labels_.s1 == -1 && labels_.s2 == -1) return std::sin(2.0 * phi) * poly;
        if (labels_.s1 == 1) return std::sin(phi) * poly;
        return std::cos(phi) * poly;
    }

    double norm_constant() const { return norm_; }
    double m() const { return m_; }
    const ParityLabels& labels() const { return labels_; }
    const DunklParams& params() const { return p_; }
    int degree() const { return degree_; }
    double jacobi_a() const { return a_; }
    double jacobi_b() const { return b_; }

    // Dunkl weight on the circle.
    static double weight(double phi, const DunklParams& p) {
        return detail::wpow(std::abs(std::cos(phi)), 2.0 * p.mu1) *
               detail::wpow(std::abs(std::sin(phi)), 2.0 * p.mu2);
    }

private:
    // Weighted norm^2 of raw() over [0, 2pi). Working in x = -cos 2phi puts
    // the weight singularities at exact machine endpoints:
    //   int_0^{2pi} = 4 int_{-1}^{1} pref2(x) P(x)^2 ((1-x)/2)^mu1 ((1+x)/2)^mu2
    //                 dx / (2 sqrt(1-x^2))
    // with cos^2 phi = (1-x)/2 and sin^2 phi = (1+x)/2 on the first quadrant.
    double squared_norm_raw() const {
        const double mu1 = p_.mu1, mu2 = p_.mu2;
        auto integrand = [&](double x, double om, double op) {
            const double poly = specfun::jacobi(degree_, a_, b_, x);
            double pref2 = 1.0;
            if (labels_.s1 == -1 && labels_.s2 == -1) pref2 = om * op;          // sin^2 2phi
            else if (labels_.s1 == 1 && labels_.s2 == -1) pref2 = 0.5 * op;     // sin^2 phi
            else if (labels_.s1 == -1 && labels_.s2 == 1) pref2 = 0.5 * om;     // cos^2 phi
            return pref2 * poly * poly *
                   detail::wpow(0.5 * om, mu1) * detail::wpow(0.5 * op, mu2) /
                   (2.0 * std::sqrt(om * op));
        };
        return 4.0 * quadrature::tanh_sinh_pm1(integrand, 1e-13, 1e-300);
    }

    ParityLabels labels_;
    double m_;
    DunklParams p_;
    int degree_ = 0;
    double a_ = 0.0, b_ = 0.0;
    double norm_ = 1.0;
};

// Weighted overlap int_0^{2pi} Phi_u Phi_v |cos|^{2mu1}|sin|^{2mu2} dphi of
// two members of the same (s1, s2) family; the Dunkl weight makes distinct m
// orthogonal. Integrated in x = -cos 2phi, which places the weight
// singularities at exact machine endpoints.
inline double azimuthal_overlap(const AzimuthalWave& u, const AzimuthalWave& v) {
    if (u.labels().s1 != v.labels().s1 || u.labels().s2 != v.labels().s2)
        throw std::domain_error("azimuthal_overlap: mismatched parity sector");
    const DunklParams& p = u.params();
    if (p.mu1 != v.params().mu1 || p.mu2 != v.params().mu2)
        throw std::domain_error("azimuthal_overlap: mismatched deformation parameters");
    const int s1 = u.labels().s1, s2 = u.labels().s2;
    auto integrand = [&](double x, double om, double op) {
        const double pu = specfun::jacobi(u.degree(), u.jacobi_a(), u.jacobi_b(), x);
        const double pv = specfun::jacobi(v.degree(), v.jacobi_a(), v.jacobi_b(), x);
        double pref2 = 1.0;
        if (s1 == -1 && s2 == -1) pref2 = om * op;
        else if (s1 == 1 && s2 == -1) pref2 = 0.5 * op;
        else if (s1 == -1 && s2 == 1) pref2 = 0.5 * om;
        return pref2 * pu * pv * detail::wpow(0.5 * om, p.mu1) *
               detail::wpow(0.5 * op, p.mu2) / (2.0 * std::sqrt(om * op));
    };
    return 4.0 * u.norm_constant() * v.norm_constant() *
           quadrature::tanh_sinh_pm1(integrand, 1e-12, 1e-14);
}

// Polar eigenfunction families, normalized under the weight
// sin^(2 mu1 + 2 mu2 + 1) theta |cos theta|^(2 mu3) on [0, pi]:
//   s3 = +1: sin^{2m} theta             P_ell^(2m+mu1+mu2, mu3-1/2)(cos 2theta)
//   s3 = -1: sin^{2m} theta * cos theta P_{ell-1/2}^(2m+mu1+mu2, mu3+1/2)(cos 2theta)
// The cos theta factor realizes the odd reflection parity of the s3 = -1
// family; at mu_i = 0 both reduce to Legendre P_L(cos theta), L = 2(ell+m).
class PolarWave {
public:
    PolarWave(int s3, double ell, double m, const DunklParams& p)
        : s3_(s3), ell_(ell), m_(m), p_(p) {
        if (s3 != 1 && s3 != -1)
            throw std::domain_error("PolarWave: s3 must be +1 or -1");
        if (!(m >= 0.0) || !halfint::is_half_integer(m))
            throw std::domain_error("PolarWave: m must be a non-negative half-integer");
        if (!(ell >= 0.0) || !halfint::is_half_integer(ell))
            throw std::domain_error("PolarWave: ell must be a non-negative half-integer");
        if (s3 == 1 ? !halfint::is_integer(ell) : !halfint::is_half_odd(ell))
            throw std::domain_error("PolarWave: ell parity inconsistent with s3");
        two_m_ = static_cast<int>(2.0 * m);
        degree_ = static_cast<int>(s3 == 1 ? ell : ell - 0.5);
        a_ = 2.0 * m + p.mu1 + p.mu2;
        b_ = s3 == 1 ? p.mu3 - 0.5 : p.mu3 + 0.5;
        norm_ = 1.0 / std::sqrt(squared_norm_raw());
    }

    double operator()(double theta) const { return norm_ * raw(theta); }

    double raw(double theta) const {
        const double y = std::cos(2.0 * theta);
        double v = detail::ipow(std::sin(theta), two_m_) * specfun::jacobi(degree_, a_, b_, y);
        if (s3_ == -1) v *= std::cos(theta);
        return v;
    }

    double norm_constant() const { return norm_; }
    int s3() const { return s3_; }
    double ell() const { return ell_; }
    double m() const { return m_; }
    const DunklParams& params() const { return p_; }
    int degree() const { return degree_; }
    double jacobi_a() const { return a_; }
    double jacobi_b() const { return b_; }

    static double weight(double theta, const DunklParams& p) {
        return detail::wpow(std::abs(std::sin(theta)), 2.0 * (p.mu1 + p.mu2) + 1.0) *
               detail::wpow(std::abs(std::cos(theta)), 2.0 * p.mu3);
    }

private:
    // In y = cos 2theta on the first quadrant (doubled by theta -> pi - theta
    // symmetry of the integrand):
    //   norm^2 = 2 int_{-1}^{1} ((1-y)/2)^(2m+mu1+mu2+1/2) ((1+y)/2)^(mu3[+1])
    //            P(y)^2 dy / (2 sqrt(1-y^2))
    double squared_norm_raw() const {
        const double e1 = 2.0 * m_ + p_.mu1 + p_.mu2 + 0.5;
        const double e2 = s3_ == 1 ? p_.mu3 : p_.mu3 + 1.0;
        auto integrand = [&](double y, double om, double op) {
            const double poly = specfun::jacobi(degree_, a_, b_, y);
            return detail::wpow(0.5 * om, e1) * detail::wpow(0.5 * op, e2) *
                   poly * poly / (2.0 * std::sqrt(om * op));
        };
        return 2.0 * quadrature::tanh_sinh_pm1(integrand, 1e-13, 1e-300);
    }

    int s3_;
    double ell_, m_;
    DunklParams p_;
    int two_m_ = 0;
    int degree_ = 0;
    double a_ = 0.0, b_ = 0.0;
    double norm_ = 1.0;
};

// Weighted overlap over [0, pi] within a (s3, m) sector, in y = cos 2theta.
inline double polar_overlap(const PolarWave& u, const PolarWave& v) {
    if (u.s3() != v.s3() || u.m() != v.m())
        throw std::domain_error("polar_overlap: mismatched sector (s3, m)");
    const DunklParams& p = u.params();
    if (p.mu1 != v.params().mu1 || p.mu2 != v.params().mu2 || p.mu3 != v.params().mu3)
        throw std::domain_error("polar_overlap: mismatched deformation parameters");
    const double e1 = 2.0 * u.m() + p.mu1 + p.mu2 + 0.5;
    const double e2 = u.s3() == 1 ? p.mu3 : p.mu3 + 1.0;
    auto integrand = [&](double y, double om, double op) {
        const double pu = specfun::jacobi(u.degree(), u.jacobi_a(), u.jacobi_b(), y);
        const double pv = specfun::jacobi(v.degree(), v.jacobi_a(), v.jacobi_b(), y);
        return detail::wpow(0.5 * om, e1) * detail::wpow(0.5 * op, e2) * pu * pv /
               (2.0 * std::sqrt(om * op));
    };
    return 2.0 * u.norm_constant() * v.norm_constant() *
           quadrature::tanh_sinh_pm1(integrand, 1e-12, 1e-14);
}

namespace detail {

// 8th-order central difference weights for f' and f''.
inline constexpr double d1w[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
inline constexpr double d2w0 = -205.0 / 72.0;
inline constexpr double d2w[4] = {8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0};

}

// Applies the azimuthal Dunkl operator J_phi numerically to the analytic
// family (derivatives by 8th-order central differences on a periodic
// half-offset grid; reflections are exact index maps on that grid) and
// returns max|(J_phi + lambda^2) Phi| with Phi at unit weighted norm.
inline double verify_azimuthal_eigen(const ParityLabels& labels, double m,
                                     const DunklParams& p, int grid_size) {
    if (grid_size < 64)
        throw std::domain_error("verify_azimuthal_eigen: grid_size must be >= 64");
    const int n = grid_size;
    const double pi = std::acos(-1.0);
    const double h = 2.0 * pi / n;
    // half-offset grid must stay clear of the coordinate singularities k*pi/2
    for (int k = 0; k < 4; ++k) {
        const double sing = k * pi / 2.0;
        const double j = (sing / h) - 0.5;
        if (std::abs(j - std::round(j)) < 1e-9)
            throw std::domain_error("verify_azimuthal_eigen: grid point hits a coordinate singularity");
    }

    const AzimuthalWave wave(labels, m, p);
    const double lambda2 = azimuthal_eigenvalue(m, p);

    std::vector<double> f(n);
    for (int j = 0; j < n; ++j) f[j] = wave((j + 0.5) * h);

    auto at = [&](int j) { return f[((j % n) + n) % n]; };

    double resid = 0.0;
    for (int j = 0; j < n; ++j) {
        const double phi = (j + 0.5) * h;
        double d1 = 0.0, d2 = detail::d2w0 * f[j];
        for (int s = 1; s <= 4; ++s) {
            d1 += detail::d1w[s - 1] * (at(j + s) - at(j - s));
            d2 += detail::d2w[s - 1] * (at(j + s) + at(j - s));
        }
        d1 /= h;
        d2 /= (h * h);
        const int jr1 = ((n / 2 - 1 - j) % n + n) % n;  // phi -> pi - phi
        const int jr2 = n - 1 - j;                      // phi -> -phi
        const double c = std::cos(phi), s_ = std::sin(phi);
        const double op = d2 + 2.0 * (p.mu2 * (c / s_) - p.mu1 * (s_ / c)) * d1 -
                          (p.mu1 / (c * c)) * (f[j] - f[jr1]) -
                          (p.mu2 / (s_ * s_)) * (f[j] - f[jr2]);
        resid = std::max(resid, std::abs(op + lambda2 * f[j]));
    }
    return resid;  // absolute max-norm; the family carries unit weighted norm
}

// Polar analogue: max|(J_theta - lambda^2/sin^2 theta + varpi^2) Theta| on the
// half-offset grid over (0, pi). The analytic family extends smoothly past
// the interval ends, so the stencil evaluates it directly there.
inline double verify_polar_eigen(int s3, double ell, double m,
                                 const DunklParams& p, int grid_size) {
    if (grid_size < 64)
        throw std::domain_error("verify_polar_eigen: grid_size must be >= 64");
    const int n = grid_size;
    const double pi = std::acos(-1.0);
    const double h = pi / n;
    {
        const double j = (pi / 2.0 / h) - 0.5;
        if (std::abs(j - std::round(j)) < 1e-9)
            throw std::domain_error("verify_polar_eigen: grid point hits a coordinate singularity");
    }

    const PolarWave wave(s3, ell, m, p);
    const double lambda2 = azimuthal_eigenvalue(m, p);
    const double varpi2 = polar_eigenvalue(ell, m, p);

    std::vector<double> f(n + 8);  // indices shifted by 4
    for (int j = -4; j < n + 4; ++j) f[j + 4] = wave((j + 0.5) * h);

    double resid = 0.0;
    for (int j = 0; j < n; ++j) {
        const double th = (j + 0.5) * h;
        const double f0 = f[j + 4];
        double d1 = 0.0, d2 = detail::d2w0 * f0;
        for (int s = 1; s <= 4; ++s) {
            d1 += detail::d1w[s - 1] * (f[j + 4 + s] - f[j + 4 - s]);
            d2 += detail::d2w[s - 1] * (f[j + 4 + s] + f[j + 4 - s]);
        }
        d1 /= h;
        d2 /= (h * h);
        const double fr = f[(n - 1 - j) + 4];  // theta -> pi - theta
        const double c = std::cos(th), s_ = std::sin(th);
        const double op = d2 +
                          2.0 * ((0.5 + p.mu1 + p.mu2) * (c / s_) - p.mu3 * (s_ / c)) * d1 -
                          (p.mu3 / (c * c)) * (f0 - fr);
        resid = std::max(resid, std::abs(op - lambda2 / (s_ * s_) * f0 + varpi2 * f0));
    }
    return resid;
}

}

#endif
