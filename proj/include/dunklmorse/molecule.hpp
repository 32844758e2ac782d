#ifndef DUNKLMORSE_MOLECULE_HPP
#define DUNKLMORSE_MOLECULE_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace dunklmorse {

// Spectroscopic constants of a diatomic species: kinetic prefactor
// P = hbar^2/(2 M r_e^2) and well depth D in cm^-1, width parameter alpha.
// alpha enters only through the dimensionless displacement chi = (r-r_e)/r_e;
// the built-in I2 value is carried verbatim from its source.
struct Molecule {
    std::string name;
    double P = 0.0;
    double D = 0.0;
    double alpha = 0.0;

    Molecule() = default;
    Molecule(std::string n, double p, double d, double a)
        : name(std::move(n)), P(p), D(d), alpha(a) {
        if (!(P > 0.0) || !(D > 0.0) || !(alpha > 0.0))
            throw std::domain_error("Molecule: P, D, alpha must all be positive");
    }
};

inline const std::vector<Molecule>& builtin_molecules() {
    static const std::vector<Molecule> db = {
        {"H2", 60.8296, 38292.0, 1.440},
        {"HCl", 10.5930, 17244.0, 2.380},
        {"I2", 0.0374, 12550.0, 4954.0},
    };
    return db;
}

inline const Molecule& find_molecule(const std::string& name) {
    for (const auto& m : builtin_molecules())
        if (m.name == name) return m;
    std::string known;
    for (const auto& m : builtin_molecules())
        known += (known.empty() ? "" : ", ") + m.name;
    throw std::invalid_argument("unknown molecule '" + name + "'; available: " + known);
}

}

#endif
