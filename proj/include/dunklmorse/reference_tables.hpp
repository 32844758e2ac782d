#ifndef DUNKLMORSE_REFERENCE_TABLES_HPP
#define DUNKLMORSE_REFERENCE_TABLES_HPP

#include <array>

namespace dunklmorse::reference {

// Published reference energies E_{n,l,m} in eV for ell = m = 1 at uniform
// deformation mu_i = -0.4 and mu_i = +0.4, carried verbatim as the target of
// the reproduction harness.
struct ReferenceEnergy {
    const char* molecule;
    double mu_i;  // the common value of mu1 = mu2 = mu3
    int n;
    double e_ev;
};

inline constexpr std::array<ReferenceEnergy, 66> energy_table = {{
    {"H2", -0.4, 0, -3.99223},
    {"H2", -0.4, 3, -2.62833},
    {"H2", -0.4, 7, -1.24766},
    {"H2", -0.4, 10, -0.54057},
    {"H2", -0.4, 13, -0.114969},
    {"H2", -0.4, 15, 0.0123821},
    {"H2", -0.4, 16, 0.0291423},
    {"H2", -0.4, 17, 0.0146258},
    {"H2", -0.4, 18, -0.0311674},
    {"H2", -0.4, 19, -0.108237},
    {"H2", -0.4, 20, -0.216584},
    {"HCl", -0.4, 0, -1.97218},
    {"HCl", -0.4, 3, -1.31169},
    {"HCl", -0.4, 7, -0.639328},
    {"HCl", -0.4, 10, -0.29128},
    {"HCl", -0.4, 13, -0.0771368},
    {"HCl", -0.4, 15, -0.00876624},
    {"HCl", -0.4, 16, 0.00310151},
    {"HCl", -0.4, 17, 0.0000909185},
    {"HCl", -0.4, 18, -0.017798},
    {"HCl", -0.4, 19, -0.0505653},
    {"HCl", -0.4, 20, -0.0982109},
    {"I2", -0.4, 0, -16.6989},
    {"I2", -0.4, 3, -1302.44},
    {"I2", -0.4, 7, -6203.1},
    {"I2", -0.4, 10, -12268.8},
    {"I2", -0.4, 13, -20382.0},
    {"I2", -0.4, 15, -26929.1},
    {"I2", -0.4, 16, -30544.0},
    {"I2", -0.4, 17, -34386.5},
    {"I2", -0.4, 18, -38456.6},
    {"I2", -0.4, 19, -42754.4},
    {"I2", -0.4, 20, -47279.7},
    {"H2", 0.4, 0, -3.08793},
    {"H2", 0.4, 3, -1.89144},
    {"H2", 0.4, 7, -0.733998},
    {"H2", 0.4, 10, -0.194321},
    {"H2", 0.4, 13, 0.0638656},
    {"H2", 0.4, 15, 0.0796061},
    {"H2", 0.4, 16, 0.0405612},
    {"H2", 0.4, 17, -0.0297604},
    {"H2", 0.4, 18, -0.131359},
    {"H2", 0.4, 19, -0.264234},
    {"H2", 0.4, 20, -0.428386},
    {"HCl", 0.4, 0, -1.88912},
    {"HCl", 0.4, 3, -1.2426},
    {"HCl", 0.4, 7, -0.588979},
    {"HCl", 0.4, 10, -0.25495},
    {"HCl", 0.4, 13, -0.0548261},
    {"HCl", 0.4, 15, 0.00419822},
    {"HCl", 0.4, 16, 0.0113929},
    {"HCl", 0.4, 17, 0.00370922},
    {"HCl", 0.4, 18, -0.0188528},
    {"HCl", 0.4, 19, -0.0562931},
    {"HCl", 0.4, 20, -0.108612},
    {"I2", 0.4, 0, -16.6988},
    {"I2", 0.4, 3, -1302.44},
    {"I2", 0.4, 7, -6203.1},
    {"I2", 0.4, 10, -12268.4},
    {"I2", 0.4, 13, -20382.0},
    {"I2", 0.4, 15, -26929.1},
    {"I2", 0.4, 16, -30544.0},
    {"I2", 0.4, 17, -34386.5},
    {"I2", 0.4, 18, -38456.6},
    {"I2", 0.4, 19, -42754.4},
    {"I2", 0.4, 20, -47279.7},
}};

}

#endif
