#ifndef DUNKLMORSE_DUNKLMORSE_HPP
#define DUNKLMORSE_DUNKLMORSE_HPP

#include "dunklmorse/angular.hpp"
#include "dunklmorse/dunkl.hpp"
#include "dunklmorse/errors.hpp"
#include "dunklmorse/molecule.hpp"
#include "dunklmorse/oracle.hpp"
#include "dunklmorse/pekeris.hpp"
#include "dunklmorse/quadrature.hpp"
#include "dunklmorse/specfun.hpp"
#include "dunklmorse/thermo.hpp"
#include "dunklmorse/version.hpp"

#endif
