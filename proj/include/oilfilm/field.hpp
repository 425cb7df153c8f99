#pragma once

#include "oilfilm/transmission.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace oilfilm {

/*
 * Potential at a point strictly inside either region, recovered from the
 * interface data via the representation formulas
 *
 *   phi_1(p) = S(dphi_1/dnu)(p) - D(phi)(p) + phi_H(p),   p below the interface,
 *   phi_2(p) = D(phi)(p) - S(dphi_2/dnu)(p),              p above it.
 *
 * The layer potentials are evaluated by the periodic trapezoidal rule on
 * a refined grid: the nodal densities are band-limited trigonometric
 * interpolants, so upsampling them is exact, and the refinement drives the
 * quadrature's aliasing error (which decays like exp(-pi n_up d / L) in
 * the distance d to the interface) below the accuracy of the densities
 * themselves.  Points within half a coarse grid spacing of the interface
 * are refused.
 */
template <typename Scalar>
Scalar eval_domain_potential(const InterfaceSolution<Scalar>& sol,
                             const InterfaceProfile<Scalar>& profile,
                             const ProblemParams<Scalar>& params, const PlanePoint<Scalar>& p) {
    params.validate();
    if (!(p.y >= 0))
        throw std::invalid_argument("eval_domain_potential: point must satisfy y >= 0");

    const NodeGrid<Scalar>& grid = sol.grid;
    const Eigen::Index n = grid.size();
    const Scalar L = grid.half_period;

    Scalar dist = std::numeric_limits<Scalar>::infinity();
    for (Eigen::Index j = 0; j < n; ++j) {
        const Scalar dx = std::remainder(p.x - grid.x[j], 2 * L);
        dist = std::min(dist, std::hypot(dx, p.y - grid.h[j]));
    }
    if (dist < L / static_cast<Scalar>(n))
        throw std::invalid_argument("eval_domain_potential: too close to interface");

    const Region region = (p.y < profile(p.x)) ? Region::oil : Region::air;

    // Refine until exp(-pi n_up dist / L) is negligible, keeping the
    // coarse nodes as a subset.
    const Eigen::Index max_factor = std::max<Eigen::Index>(1, 16384 / n);
    const Eigen::Index want = static_cast<Eigen::Index>(std::ceil(13 * L / (dist * static_cast<Scalar>(n))));
    const Eigen::Index factor = std::clamp<Eigen::Index>(want, 1, max_factor);
    const Eigen::Index n_up = factor * n;

    const TrigPoly<Scalar> phi_poly = trig_fit(sol.phi, L);
    const TrigPoly<Scalar> psi_poly =
        trig_fit(region == Region::oil ? sol.dphi_dnu1 : sol.dphi_dnu2, L);

    const Scalar step = 2 * L / static_cast<Scalar>(n_up);
    Scalar sum = 0;
    for (Eigen::Index j = 0; j < n_up; ++j) {
        const Scalar x0 = -L + step * static_cast<Scalar>(j);
        const Scalar h0 = profile(x0, 0);
        const Scalar hp0 = profile(x0, 1);
        const PlanePoint<Scalar> q{x0, h0};
        const Scalar G = green_halfplane(p, q, L);
        const auto grad = grad_green_halfplane(p, q, L);
        // T_H(p, q) * arc = -h' dG/dx0 + dG/dy0 (the arc factors cancel)
        const Scalar T_arc = -hp0 * grad[0] + grad[1];
        const Scalar arc = std::sqrt(1 + hp0 * hp0);
        const Scalar single = G * psi_poly(x0) * arc;
        const Scalar dbl = T_arc * phi_poly(x0);
        sum += (region == Region::oil) ? (single - dbl) : (dbl - single);
    }
    sum *= step;
    if (region == Region::oil) sum += phi_H(params.boundary, p);
    return sum;
}

}  // namespace oilfilm
