#pragma once

#include "oilfilm/greens.hpp"
#include "oilfilm/problem.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oilfilm {

/*
 * Closed-form solution of the half-plane Dirichlet problem without an
 * interface: each boundary mode extends harmonically as
 *
 *   phi_H(x, y) = sum_m ( a_m cos(m pi x/L) + b_m sin(m pi x/L) ) e^{-m pi y/L},
 *
 * with the constant mode extending as a constant.
 */
template <typename Scalar>
Scalar phi_H(const BoundaryData<Scalar>& data, const PlanePoint<Scalar>& p) {
    const Scalar k0 = std::numbers::pi_v<Scalar> / data.half_period;
    Scalar sum = data.cos_amps[0];
    for (Eigen::Index m = 1; m <= data.modes(); ++m) {
        const Scalar km = k0 * static_cast<Scalar>(m);
        sum += std::exp(-km * p.y) *
               (data.cos_amps[m] * std::cos(km * p.x) + data.sin_amps[m] * std::sin(km * p.x));
    }
    return sum;
}

/*
 * The same half-plane solution evaluated from its double-layer boundary
 * integral representation,
 *
 *   phi_H(p) = int_{-L}^{L} dG_H/dy0 (p, (x0, 0)) f(x0) dx0,
 *
 * by the periodic trapezoidal rule.  Requires p.y > 0 (the kernel is
 * singular on the boundary itself).
 */
template <typename Scalar>
Scalar phi_H_by_quadrature(const BoundaryData<Scalar>& data, const PlanePoint<Scalar>& p,
                           Eigen::Index n_quad = 256) {
    if (!(p.y > 0))
        throw std::invalid_argument("phi_H_by_quadrature: evaluation point must have y > 0");
    const Scalar L = data.half_period;
    const Scalar step = 2 * L / static_cast<Scalar>(n_quad);
    Scalar sum = 0;
    for (Eigen::Index j = 0; j < n_quad; ++j) {
        const Scalar x0 = -L + step * static_cast<Scalar>(j);
        const auto grad = grad_green_halfplane(p, PlanePoint<Scalar>{x0, Scalar(0)}, L);
        sum += grad[1] * data.trace(x0);
    }
    return step * sum;
}

enum class Region { oil = 1, air = 2 };
enum class FlatQuantity { value, ddx, ddy };

/*
 * Separation-of-variables solution of the transmission problem for a flat
 * interface y = h0.  Per boundary mode m >= 1, with
 * D = (eps1 + eps2) e^{2 m pi h0/L} + (eps1 - eps2):
 *
 *   phi_1 = f_m(x) [ (eps1 - eps2) e^{m pi y/L} + (eps1 + eps2) e^{m pi (2 h0 - y)/L} ] / D,
 *   phi_2 = f_m(x) 2 eps1 e^{m pi (2 h0 - y)/L} / D,
 *
 * where f_m is the mode's trace.  Constant boundary data extends as that
 * constant in both regions.
 */
template <typename Scalar>
Scalar flat_exact(const ProblemParams<Scalar>& params, Scalar h0, const PlanePoint<Scalar>& p,
                  Region region, FlatQuantity quantity = FlatQuantity::value) {
    params.validate();
    if (!(h0 > 0)) throw std::invalid_argument("flat_exact: interface height must be positive");
    if (region == Region::oil && !(p.y >= 0 && p.y <= h0))
        throw std::invalid_argument("flat_exact: point not in the film region");
    if (region == Region::air && !(p.y >= h0))
        throw std::invalid_argument("flat_exact: point not in the ambient region");

    const BoundaryData<Scalar>& data = params.boundary;
    const Scalar k0 = std::numbers::pi_v<Scalar> / data.half_period;
    const Scalar e1 = params.eps1, e2 = params.eps2;

    Scalar sum = 0;
    if (quantity == FlatQuantity::value) sum += data.cos_amps[0];
    for (Eigen::Index m = 1; m <= data.modes(); ++m) {
        const Scalar km = k0 * static_cast<Scalar>(m);
        const Scalar D = (e1 + e2) * std::exp(2 * km * h0) + (e1 - e2);
        Scalar u, du;  // vertical factor and its y-derivative
        if (region == Region::oil) {
            const Scalar up = std::exp(km * p.y);
            const Scalar dn = std::exp(km * (2 * h0 - p.y));
            u = ((e1 - e2) * up + (e1 + e2) * dn) / D;
            du = km * ((e1 - e2) * up - (e1 + e2) * dn) / D;
        } else {
            u = 2 * e1 * std::exp(km * (2 * h0 - p.y)) / D;
            du = -km * u;
        }
        const Scalar c = std::cos(km * p.x), s = std::sin(km * p.x);
        switch (quantity) {
            case FlatQuantity::value:
                sum += (data.cos_amps[m] * c + data.sin_amps[m] * s) * u;
                break;
            case FlatQuantity::ddx:
                sum += km * (-data.cos_amps[m] * s + data.sin_amps[m] * c) * u;
                break;
            case FlatQuantity::ddy:
                sum += (data.cos_amps[m] * c + data.sin_amps[m] * s) * du;
                break;
        }
    }
    return sum;
}

}  // namespace oilfilm
