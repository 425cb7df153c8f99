#pragma once

#include "oilfilm/halfplane.hpp"
#include "oilfilm/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace oilfilm {

template <typename Scalar>
struct DenseSystem {
    MatrixX<Scalar> matrix;
    VectorX<Scalar> rhs;
};

/*
 * Interface potential and its directional derivatives at the grid nodes.
 * The two normal derivatives satisfy dphi_dnu1 = (eps2/eps1) dphi_dnu2
 * exactly as computed; phi is the common trace of both regions.
 */
template <typename Scalar>
struct InterfaceSolution {
    NodeGrid<Scalar> grid;
    VectorX<Scalar> phi;
    VectorX<Scalar> dphi_dtau;
    VectorX<Scalar> dphi_dnu1;
    VectorX<Scalar> dphi_dnu2;
    Scalar residual_second_kind{0};
    Scalar residual_first_kind{0};
};

// Trapezoidal discretization of the double-layer operator:
// K[i][j] = (2L/n) k_{i,j} sqrt(1 + h'(x_j)^2).
template <typename Scalar>
MatrixX<Scalar> discrete_K_matrix(const NodeGrid<Scalar>& grid) {
    const Eigen::Index n = grid.size();
    const Scalar w = grid.spacing();
    MatrixX<Scalar> K(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            K(i, j) = w * kernel_K_entry(grid, i, j) * grid.arc[j];
    return K;
}

// Discretization of the single-layer operator with the log-kernel split:
// V[i][j] = (R_j(x_i) + (2L/n) s_{i,j}) sqrt(1 + h'(x_j)^2).
template <typename Scalar>
MatrixX<Scalar> discrete_V_matrix(const NodeGrid<Scalar>& grid) {
    const Eigen::Index n = grid.size();
    const Scalar w = grid.spacing();
    const LogWeightTable<Scalar> R = log_weights(n, grid.half_period);
    MatrixX<Scalar> V(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            V(i, j) = (R(i, j) + w * kernel_S_entry(grid, i, j)) * grid.arc[j];
    return V;
}

namespace detail {

template <typename Scalar>
VectorX<Scalar> phi_H_at_nodes(const NodeGrid<Scalar>& grid, const BoundaryData<Scalar>& data) {
    const Eigen::Index n = grid.size();
    VectorX<Scalar> values(n);
    for (Eigen::Index i = 0; i < n; ++i)
        values[i] = phi_H(data, PlanePoint<Scalar>{grid.x[i], grid.h[i]});
    return values;
}

template <typename Scalar>
Scalar solve_dense(const MatrixX<Scalar>& A, const VectorX<Scalar>& b, VectorX<Scalar>& x) {
    x = Eigen::PartialPivLU<MatrixX<Scalar>>(A).solve(b);
    if (!x.allFinite()) throw std::runtime_error("dense solve: numerically singular matrix");
    const Scalar bn = b.template lpNorm<Eigen::Infinity>();
    Scalar r = (A * x - b).template lpNorm<Eigen::Infinity>();
    if (bn > 0) r /= bn;
    if (!(r < Scalar(1e-11)))
        throw std::runtime_error("dense solve: residual exceeds 1e-11, matrix ill-conditioned");
    return r;
}

}  // namespace detail

/*
 * Second-kind system for the interface potential,
 *
 *   ( I - 2 mu K ) phi = (2 eps1 / (eps1 + eps2)) phi_H|_Gamma,
 *   mu = (eps2 - eps1) / (eps1 + eps2),
 *
 * collocated at the grid nodes.  For eps1 == eps2 the matrix is exactly
 * the identity and the solution reduces to phi_H.
 */
template <typename Scalar>
DenseSystem<Scalar> assemble_second_kind(const NodeGrid<Scalar>& grid,
                                         const ProblemParams<Scalar>& params) {
    params.validate();
    const Eigen::Index n = grid.size();
    const Scalar mu = (params.eps2 - params.eps1) / (params.eps1 + params.eps2);

    DenseSystem<Scalar> sys;
    if (mu == Scalar(0))
        sys.matrix = MatrixX<Scalar>::Identity(n, n);
    else
        sys.matrix = MatrixX<Scalar>::Identity(n, n) - 2 * mu * discrete_K_matrix(grid);
    sys.rhs = (2 * params.eps1 / (params.eps1 + params.eps2)) *
              detail::phi_H_at_nodes(grid, params.boundary);
    return sys;
}

template <typename Scalar>
DenseSystem<Scalar> assemble_second_kind(const InterfaceProfile<Scalar>& profile,
                                         const ProblemParams<Scalar>& params, Eigen::Index n) {
    return assemble_second_kind(build_grid(profile, n), params);
}

template <typename Scalar>
VectorX<Scalar> solve_potential(const DenseSystem<Scalar>& system,
                                Scalar* residual_out = nullptr) {
    VectorX<Scalar> phi;
    const Scalar r = detail::solve_dense(system.matrix, system.rhs, phi);
    if (residual_out) *residual_out = r;
    return phi;
}

/*
 * First-kind system for the normal derivative (the discrete
 * Dirichlet-to-Neumann map),
 *
 *   V (dphi_a/dnu) = (eps2/eps_a) ( -phi/2 + K phi ),   a = 1, 2.
 *
 * Both right-hand sides differ only by the factor eps2/eps_a, so the
 * system is solved once for a = 2 and rescaled.
 */
template <typename Scalar>
VectorX<Scalar> solve_normal_derivative(const NodeGrid<Scalar>& grid,
                                        const ProblemParams<Scalar>& params,
                                        const VectorX<Scalar>& phi, Region alpha,
                                        Scalar* residual_out = nullptr) {
    params.validate();
    if (phi.size() != grid.size())
        throw std::invalid_argument("solve_normal_derivative: phi does not match the grid");
    const VectorX<Scalar> rhs = -Scalar(0.5) * phi + discrete_K_matrix(grid) * phi;
    VectorX<Scalar> dnu2;
    const Scalar r = detail::solve_dense(discrete_V_matrix(grid), rhs, dnu2);
    if (residual_out) *residual_out = r;
    if (alpha == Region::air) return dnu2;
    return (params.eps2 / params.eps1) * dnu2;
}

// d phi / d tau: spectral x-derivative corrected for arc length.
template <typename Derived, typename Scalar>
VectorX<Scalar> tangential_derivative(const Eigen::MatrixBase<Derived>& phi,
                                      const NodeGrid<Scalar>& grid) {
    if (phi.size() != grid.size())
        throw std::invalid_argument("tangential_derivative: phi does not match the grid");
    return spectral_derivative(phi, grid.half_period).cwiseQuotient(grid.arc);
}

/*
 * Full interface solve: potential from the second-kind equation, the
 * normal derivative from the DtN equation (computed once for the ambient
 * side and rescaled for the film side) and the spectral tangential
 * derivative.
 */
template <typename Scalar>
InterfaceSolution<Scalar> solve_transmission(const InterfaceProfile<Scalar>& profile,
                                             const ProblemParams<Scalar>& params,
                                             Eigen::Index n) {
    params.validate();
    if (profile.half_period() != params.half_period())
        throw std::invalid_argument("solve_transmission: profile and boundary data periods differ");

    InterfaceSolution<Scalar> sol;
    sol.grid = build_grid(profile, n);
    const MatrixX<Scalar> K = discrete_K_matrix(sol.grid);
    const Scalar mu = (params.eps2 - params.eps1) / (params.eps1 + params.eps2);

    MatrixX<Scalar> A = MatrixX<Scalar>::Identity(n, n);
    if (mu != Scalar(0)) A -= 2 * mu * K;
    const VectorX<Scalar> rhs2nd = (2 * params.eps1 / (params.eps1 + params.eps2)) *
                                   detail::phi_H_at_nodes(sol.grid, params.boundary);
    sol.residual_second_kind = detail::solve_dense(A, rhs2nd, sol.phi);

    const VectorX<Scalar> rhs1st = -Scalar(0.5) * sol.phi + K * sol.phi;
    sol.residual_first_kind = detail::solve_dense(discrete_V_matrix(sol.grid), rhs1st, sol.dphi_dnu2);
    sol.dphi_dnu1 = (params.eps2 / params.eps1) * sol.dphi_dnu2;

    sol.dphi_dtau = tangential_derivative(sol.phi, sol.grid);
    return sol;
}

}  // namespace oilfilm
