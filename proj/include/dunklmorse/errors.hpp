#ifndef DUNKLMORSE_ERRORS_HPP
#define DUNKLMORSE_ERRORS_HPP

#include <stdexcept>

namespace dunklmorse {

// A series or iteration failed to reach its tolerance within the allowed work.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters outside the bound-state regime (eta^2 <= 0).
struct unphysical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Effective well too shallow to bind (xi^2 <= 0).
struct no_binding_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Eigensolver box too small: wavefunction amplitude leaks into the boundary.
struct domain_too_small_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The extended-precision reference itself failed; tests must abort, never pass.
struct oracle_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive numerical differentiation did not settle.
struct differentiation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}

#endif
