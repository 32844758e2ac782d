#ifndef DUNKLMORSE_DUNKL_HPP
#define DUNKLMORSE_DUNKL_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace dunklmorse {

// Reflection-deformation strengths. Square integrability of the weighted
// norm requires each mu_i > -1/2.
struct DunklParams {
    double mu1 = 0.0;
    double mu2 = 0.0;
    double mu3 = 0.0;

    DunklParams() = default;
    DunklParams(double m1, double m2, double m3) : mu1(m1), mu2(m2), mu3(m3) {
        if (!(mu1 > -0.5) || !(mu2 > -0.5) || !(mu3 > -0.5))
            throw std::domain_error("DunklParams: each mu_i must exceed -1/2");
    }
    static DunklParams uniform(double mu_i) { return {mu_i, mu_i, mu_i}; }

    double mu() const { return mu1 + mu2 + mu3; }
    double delta() const { return -(1.0 + mu()); }
};

// Reflection eigenvalues (s1, s2, s3), each +1 or -1.
struct ParityLabels {
    int s1 = +1;
    int s2 = +1;
    int s3 = +1;

    void validate() const {
        auto ok = [](int s) { return s == 1 || s == -1; };
        if (!ok(s1) || !ok(s2) || !ok(s3))
            throw std::domain_error("ParityLabels: each label must be +1 or -1");
    }
};

namespace halfint {

inline bool is_half_integer(double v) { return std::floor(2.0 * v) == 2.0 * v; }
inline bool is_integer(double v) { return std::floor(v) == v; }
inline bool is_half_odd(double v) { return is_half_integer(v) && !is_integer(v); }

}

// Quantum numbers (m, ell): m is an integer iff s1*s2 = +1 (half-odd
// otherwise), ell is an integer iff s3 = +1.
struct AngularQuantum {
    double m = 0.0;
    double ell = 0.0;

    void validate(const ParityLabels& labels) const {
        labels.validate();
        if (!(m >= 0.0) || !halfint::is_half_integer(m))
            throw std::domain_error("AngularQuantum: m must be a non-negative half-integer");
        if (!(ell >= 0.0) || !halfint::is_half_integer(ell))
            throw std::domain_error("AngularQuantum: ell must be a non-negative half-integer");
        if (labels.s1 * labels.s2 == 1 ? !halfint::is_integer(m) : !halfint::is_half_odd(m))
            throw std::domain_error("AngularQuantum: m parity inconsistent with (s1, s2)");
        if (labels.s3 == 1 ? !halfint::is_integer(ell) : !halfint::is_half_odd(ell))
            throw std::domain_error("AngularQuantum: ell parity inconsistent with s3");
    }
};

}

#endif
