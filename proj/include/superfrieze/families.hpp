#pragma once

#include "superfrieze/hill.hpp"
#include "superfrieze/scalar.hpp"

namespace superfrieze {

/// The width-1 family over free (x, xi, eta):
/// a = (x, x', x, x'), beta = (xi, xi', xi - x eta, eta) with
/// x' = 2/x + eta xi / x and xi' = eta - 2 xi / x.
/// A point of the n = 4 supervariety for every value of the free data.
HillCoefficients width1_family();

/// The Pentagramma family over free (x, y, xi, eta, zeta): the n = 5
/// closed frieze whose free diagonal carries (x, y; xi, eta, zeta).
/// First rows: a = (y', x, x', x'', y), beta = (-zeta, xi, xi', nu, zeta*).
HillCoefficients pentagramma_family();

/// Named building blocks of the Pentagramma family, exposed so golden
/// tests can assert individual entries.
struct PentagrammaData {
    SuperScalar x, y, xi, eta, zeta;                  // free generators
    SuperScalar x1, y1, x2;                           // x', y', x''
    SuperScalar xi1, eta1, tau1;                      // xi', eta', tau'
    SuperScalar zeta_s, eta_s, nu, tau;               // zeta*, eta*, nu, tau
};
PentagrammaData pentagramma_data();

} // namespace superfrieze
