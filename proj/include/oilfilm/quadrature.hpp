#pragma once

#include "oilfilm/interface.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oilfilm {

/*
 * Arc-length weighted trapezoidal rule over one period of the interface:
 *
 *   int_Gamma F ds  ~  (2L/n) sum_j F(x_j) sqrt(1 + h'(x_j)^2).
 *
 * Spectrally accurate for smooth periodic integrands.
 */
template <typename Derived, typename Scalar>
Scalar trapezoid_integrate(const Eigen::MatrixBase<Derived>& values, const NodeGrid<Scalar>& grid) {
    if (values.size() != grid.size())
        throw std::invalid_argument("trapezoid_integrate: values do not match the grid");
    return grid.spacing() * values.dot(grid.arc);
}

/*
 * Product-quadrature weights for the 2L-periodic logarithmic kernel,
 *
 *   -(1/4 pi) int_{-L}^{L} ln(4 sin^2((pi/2L)(x - x0))) F(x0) dx0
 *        ~  sum_j R_j(x) F(x_j),
 *
 *   R_j(x) = (L / pi n) { sum_{m=1}^{N-1} (1/m) cos(m pi (x - x_j)/L)
 *                         + (1/n) cos(N pi (x - x_j)/L) },   N = n/2.
 *
 * The rule integrates trigonometric interpolants exactly: applied to
 * cos(m pi x0 / L) it returns (L / 2 pi m) cos(m pi x / L) for
 * 1 <= m <= N and annihilates constants.  At the nodes the weights depend
 * only on (i - j) mod n, so the table is stored as a single circulant row
 * mirrored about n/2, which also makes it exactly symmetric.
 */
template <typename Scalar>
struct LogWeightTable {
    Eigen::Index n{0};
    Scalar half_period{1};
    VectorX<Scalar> circulant;  // R_j(x_i) = circulant[(i - j) mod n]

    Scalar operator()(Eigen::Index i, Eigen::Index j) const {
        Eigen::Index d = (i - j) % n;
        if (d < 0) d += n;
        return circulant[d];
    }
};

template <typename Scalar>
LogWeightTable<Scalar> log_weights(Eigen::Index n, Scalar half_period) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("log_weights: node count must be even and at least 4");
    const Eigen::Index N = n / 2;
    const Scalar pi = std::numbers::pi_v<Scalar>;

    LogWeightTable<Scalar> table;
    table.n = n;
    table.half_period = half_period;
    table.circulant.resize(n);
    for (Eigen::Index d = 0; d <= N; ++d) {
        const Scalar u = 2 * pi * static_cast<Scalar>(d) / static_cast<Scalar>(n);
        Scalar sum = 0;
        for (Eigen::Index m = 1; m < N; ++m)
            sum += std::cos(static_cast<Scalar>(m) * u) / static_cast<Scalar>(m);
        sum += (d % 2 == 0 ? Scalar(1) : Scalar(-1)) / static_cast<Scalar>(n);
        table.circulant[d] = half_period * sum / (pi * static_cast<Scalar>(n));
        if (d > 0 && d < N) table.circulant[n - d] = table.circulant[d];
    }
    return table;
}

}  // namespace oilfilm
