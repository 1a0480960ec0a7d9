#include "superfrieze/families.hpp"

namespace superfrieze {

HillCoefficients width1_family() {
    const SuperScalar x = sc_even("x");
    const SuperScalar xi = sc_odd("xi");
    const SuperScalar eta = sc_odd("eta");
    const SuperScalar inv_x = x.inverse();
    const SuperScalar x1 = 2 * inv_x + eta * xi * inv_x;
    const SuperScalar xi1 = eta - 2 * (inv_x * xi);
    return HillCoefficients({x, x1, x, x1}, {xi, xi1, xi - x * eta, eta});
}

PentagrammaData pentagrammaData_build() {
    PentagrammaData d;
    d.x = sc_even("x");
    d.y = sc_even("y");
    d.xi = sc_odd("xi");
    d.eta = sc_odd("eta");
    d.zeta = sc_odd("zeta");

    const SuperScalar inv_x = d.x.inverse();
    const SuperScalar inv_y = d.y.inverse();
    const SuperScalar inv_xy = (d.x * d.y).inverse();
    const SuperScalar one = SuperScalar::one();

    d.x1 = (1 + d.y) * inv_x + d.eta * d.xi * inv_x;
    d.y1 = (1 + d.x + d.y) * inv_xy + d.eta * d.xi * inv_xy + d.zeta * d.eta * inv_y;
    d.x2 = (1 + d.x) * inv_y + d.eta * d.xi * inv_y + d.xi * d.zeta +
           d.x * inv_y * (d.zeta * d.eta);

    d.xi1 = d.eta - (one + d.y) * inv_x * d.xi;
    // The sign of the cubic term and the overall sign of nu are fixed by
    // the frieze rule (the published closed-form expressions for eta' and
    // nu are inconsistent with the displayed array by exactly these signs).
    d.eta1 = d.zeta - (1 + d.x + d.y) * inv_xy * d.xi + d.xi * d.eta * d.zeta * inv_y;
    d.tau1 = (1 + d.y) * inv_x * d.zeta - (1 + d.x + d.y) * inv_xy * d.eta -
             d.xi * d.eta * d.zeta * inv_x;

    d.zeta_s = d.eta - d.y * d.zeta;
    d.eta_s = d.xi - d.x * d.zeta;
    d.nu = d.xi + d.zeta - (1 + d.x) * inv_y * d.eta;
    d.tau = d.x * d.eta - d.y * d.xi;
    return d;
}

PentagrammaData pentagramma_data() {
    static const PentagrammaData d = pentagrammaData_build();
    return d;
}

HillCoefficients pentagramma_family() {
    const PentagrammaData d = pentagramma_data();
    return HillCoefficients({d.y1, d.x, d.x1, d.x2, d.y},
                            {-d.zeta, d.xi, d.xi1, d.nu, d.zeta_s});
}

} // namespace superfrieze
