#pragma once

#include "oilfilm/interface.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace oilfilm {

template <typename Scalar>
struct PlanePoint {
    Scalar x{0};
    Scalar y{0};
};

namespace detail {

/*
 * ln(4 (sin^2 a + sinh^2 b)) = ln(4 |sin(a + i b)|^2), evaluated without
 * overflow for large |b| using ln(4 sinh^2 b) = 2(|b| + log1p(-e^{-2|b|})).
 */
template <typename Scalar>
Scalar log4_sin2_sinh2(Scalar a, Scalar b) {
    const Scalar s = std::sin(a);
    const Scalar ab = std::abs(b);
    if (ab < Scalar(1)) {
        const Scalar sh = std::sinh(b);
        return std::log(4 * (s * s + sh * sh));
    }
    const Scalar base = 2 * (ab + std::log1p(-std::exp(-2 * ab)));
    if (ab >= Scalar(30)) return base;  // sin^2/sinh^2 below machine precision
    const Scalar sh = std::sinh(ab);
    return base + std::log1p((s * s) / (sh * sh));
}

/*
 * cot(a + i b) = (sin 2a - i sinh 2b) / (2 (sin^2 a + sinh^2 b)).
 * Saturates to -i sign(b) once e^{-2|b|} drops below machine precision.
 */
template <typename Scalar>
std::complex<Scalar> cot_complex(Scalar a, Scalar b) {
    static const Scalar saturation =
        1 - std::log(std::numeric_limits<Scalar>::epsilon()) / 2;
    const Scalar ab = std::abs(b);
    if (ab >= saturation) return {Scalar(0), b > 0 ? Scalar(-1) : Scalar(1)};
    const Scalar s = std::sin(a);
    const Scalar sh = std::sinh(b);
    const Scalar den = 2 * (s * s + sh * sh);
    if (!(den > 0)) throw std::domain_error("kernel singularity");
    return {std::sin(2 * a) / den, -std::sinh(2 * b) / den};
}

template <typename Scalar>
void require_distinct(const PlanePoint<Scalar>& p, const PlanePoint<Scalar>& q, Scalar L) {
    if (std::remainder(p.x - q.x, 2 * L) == Scalar(0) && p.y == q.y)
        throw std::domain_error("kernel singularity");
}

}  // namespace detail

/*
 * 2L-periodic free-space Green's function for the Laplacian,
 *
 *   G(p, q) = -(1/2 pi) ln | 2 sin( (pi/2L)(z - z0) ) |,  z = x + i y.
 */
template <typename Scalar>
Scalar green_periodic(const PlanePoint<Scalar>& p, const PlanePoint<Scalar>& q, Scalar L) {
    detail::require_distinct(p, q, L);
    const Scalar k = std::numbers::pi_v<Scalar> / (2 * L);
    return -detail::log4_sin2_sinh2(k * (p.x - q.x), k * (p.y - q.y)) /
           (4 * std::numbers::pi_v<Scalar>);
}

/*
 * Periodic half-plane Green's function, vanishing on y = 0, obtained by
 * subtracting the kernel at the image source q' = (q.x, -q.y):
 * G_H(p, q) = G(p, q) - G(p, q').
 */
template <typename Scalar>
Scalar green_halfplane(const PlanePoint<Scalar>& p, const PlanePoint<Scalar>& q, Scalar L) {
    detail::require_distinct(p, q, L);
    const Scalar k = std::numbers::pi_v<Scalar> / (2 * L);
    const Scalar a = k * (p.x - q.x);
    return -(detail::log4_sin2_sinh2(a, k * (p.y - q.y)) -
             detail::log4_sin2_sinh2(a, k * (p.y + q.y))) /
           (4 * std::numbers::pi_v<Scalar>);
}

/*
 * Gradient of G_H with respect to the source point q = (x0, y0):
 *
 *   dG_H/dx0 =  (1/4L) Re( cot(w) - cot(w') ),
 *   dG_H/dy0 = -(1/4L) Im( cot(w) + cot(w') ),
 *
 * where w = (pi/2L)(z - z0) and w' = (pi/2L)(z - conj(z0)).
 */
template <typename Scalar>
Eigen::Vector2<Scalar> grad_green_halfplane(const PlanePoint<Scalar>& p,
                                            const PlanePoint<Scalar>& q, Scalar L) {
    detail::require_distinct(p, q, L);
    const Scalar k = std::numbers::pi_v<Scalar> / (2 * L);
    const Scalar a = k * (p.x - q.x);
    const std::complex<Scalar> cw = detail::cot_complex(a, k * (p.y - q.y));
    const std::complex<Scalar> cwi = detail::cot_complex(a, k * (p.y + q.y));
    const Scalar inv4L = Scalar(1) / (4 * L);
    return {inv4L * (cw.real() - cwi.real()), -inv4L * (cw.imag() + cwi.imag())};
}

/*
 * Double-layer kernel on the interface, T_H(x, x0) = dG_H/dnu0 with both
 * points on y = h(.) and nu0 the unit normal at x0 pointing out of the
 * film.  The diagonal is the smooth limit
 *
 *   T_H(x, x) = ( h''/(4 pi (1 + h'^2)) + coth(pi h / L) / (4 L) )
 *               / sqrt(1 + h'^2),
 *
 * i.e. the curvature kappa / (4 pi) of the classical double layer plus the
 * periodic image contribution.
 */
template <typename Scalar>
Scalar kernel_K(const InterfaceProfile<Scalar>& profile, Scalar x, Scalar x0) {
    const Scalar L = profile.half_period();
    if (x == x0) {
        const Scalar h = profile(x, 0);
        const Scalar hp = profile(x, 1);
        const Scalar hpp = profile(x, 2);
        const Scalar pi = std::numbers::pi_v<Scalar>;
        return (hpp / (4 * pi * (1 + hp * hp)) + Scalar(1) / (std::tanh(pi * h / L) * 4 * L)) /
               std::sqrt(1 + hp * hp);
    }
    const Scalar k = std::numbers::pi_v<Scalar> / (2 * L);
    const Scalar h = profile(x, 0);
    const Scalar h0 = profile(x0, 0);
    const Scalar hp0 = profile(x0, 1);
    const Scalar a = k * (x - x0);
    const std::complex<Scalar> cw = detail::cot_complex(a, k * (h - h0));
    const std::complex<Scalar> cwi = detail::cot_complex(a, k * (h + h0));
    return (hp0 * (cwi.real() - cw.real()) - (cw.imag() + cwi.imag())) /
           (4 * L * std::sqrt(1 + hp0 * hp0));
}

/*
 * Smooth remainder of the single-layer kernel after removing the
 * -(1/4 pi) ln(4 sin^2((pi/2L)(x - x0))) part:
 *
 *   s(x, x0) = -(1/4 pi) { ln(4(sin^2 + sinh^2((pi/2L)(h - h0))))
 *                        - ln(4(sin^2 + sinh^2((pi/2L)(h + h0))))
 *                        - ln(4 sin^2) },
 *   s(x, x)  = -(1/4 pi) { ln(1 + h'^2) - ln(4 sinh^2(pi h / L)) }.
 */
template <typename Scalar>
Scalar kernel_S(const InterfaceProfile<Scalar>& profile, Scalar x, Scalar x0) {
    const Scalar L = profile.half_period();
    const Scalar pi = std::numbers::pi_v<Scalar>;
    if (x == x0) {
        const Scalar h = profile(x, 0);
        const Scalar hp = profile(x, 1);
        const Scalar sh = std::sinh(pi * h / L);
        return -(std::log(1 + hp * hp) - std::log(4 * sh * sh)) / (4 * pi);
    }
    const Scalar k = pi / (2 * L);
    const Scalar h = profile(x, 0);
    const Scalar h0 = profile(x0, 0);
    const Scalar a = k * (x - x0);
    const Scalar s = std::sin(a);
    return -(detail::log4_sin2_sinh2(a, k * (h - h0)) -
             detail::log4_sin2_sinh2(a, k * (h + h0)) - std::log(4 * s * s)) /
           (4 * pi);
}

// Nodal kernel entries k_{i,j} and s_{i,j} from the cached grid values.

template <typename Scalar>
Scalar kernel_K_entry(const NodeGrid<Scalar>& grid, Eigen::Index i, Eigen::Index j) {
    const Scalar L = grid.half_period;
    const Scalar pi = std::numbers::pi_v<Scalar>;
    if (i == j) {
        return (grid.hpp[j] / (4 * pi * (1 + grid.hp[j] * grid.hp[j])) +
                Scalar(1) / (std::tanh(pi * grid.h[j] / L) * 4 * L)) /
               grid.arc[j];
    }
    const Scalar k = pi / (2 * L);
    const Scalar a = k * (grid.x[i] - grid.x[j]);
    const std::complex<Scalar> cw = detail::cot_complex(a, k * (grid.h[i] - grid.h[j]));
    const std::complex<Scalar> cwi = detail::cot_complex(a, k * (grid.h[i] + grid.h[j]));
    return (grid.hp[j] * (cwi.real() - cw.real()) - (cw.imag() + cwi.imag())) /
           (4 * L * grid.arc[j]);
}

template <typename Scalar>
Scalar kernel_S_entry(const NodeGrid<Scalar>& grid, Eigen::Index i, Eigen::Index j) {
    const Scalar L = grid.half_period;
    const Scalar pi = std::numbers::pi_v<Scalar>;
    if (i == j) {
        const Scalar sh = std::sinh(pi * grid.h[j] / L);
        return -(std::log(1 + grid.hp[j] * grid.hp[j]) - std::log(4 * sh * sh)) / (4 * pi);
    }
    const Scalar k = pi / (2 * L);
    const Scalar a = k * (grid.x[i] - grid.x[j]);
    const Scalar s = std::sin(a);
    return -(detail::log4_sin2_sinh2(a, k * (grid.h[i] - grid.h[j])) -
             detail::log4_sin2_sinh2(a, k * (grid.h[i] + grid.h[j])) - std::log(4 * s * s)) /
           (4 * pi);
}

}  // namespace oilfilm
