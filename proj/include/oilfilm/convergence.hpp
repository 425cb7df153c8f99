#pragma once

#include "oilfilm/transmission.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oilfilm {

// || approx - reference ||_2 / || reference ||_2 over shared nodes.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar discrete_l2_error(const Eigen::MatrixBase<DerivedA>& approx,
                                            const Eigen::MatrixBase<DerivedB>& reference) {
    if (approx.size() != reference.size())
        throw std::invalid_argument("discrete_l2_error: size mismatch");
    const auto rn = reference.norm();
    if (!(rn > 0)) throw std::invalid_argument("discrete_l2_error: reference norm is zero");
    return (approx - reference).norm() / rn;
}

// Values of a 2n-grid function at the nodes it shares with the n-grid.
template <typename Derived>
VectorX<typename Derived::Scalar> restrict_to_coarse(const Eigen::MatrixBase<Derived>& fine) {
    if (fine.size() % 2 != 0)
        throw std::invalid_argument("restrict_to_coarse: fine grid size must be even");
    VectorX<typename Derived::Scalar> coarse(fine.size() / 2);
    for (Eigen::Index i = 0; i < coarse.size(); ++i) coarse[i] = fine[2 * i];
    return coarse;
}

enum class ReferenceKind { analytic_flat, self };

template <typename Scalar>
struct ConvergenceRow {
    Eigen::Index n{0};
    Scalar error_phi{0};
    Scalar error_dtau{0};
    Scalar error_dnu1{0};
    std::optional<Scalar> eoc_phi;
    std::optional<Scalar> eoc_dtau;
    std::optional<Scalar> eoc_dnu1;
};

/*
 * Discrete l2 relative errors of phi, dphi/dtau and dphi_1/dnu over a
 * doubling sequence of grid sizes, with the estimated order of
 * convergence EOC = log2( Error(n/2) / Error(n) ) between consecutive
 * rows (positive when the error decreases).
 *
 * The reference is either the flat-interface separation-of-variables
 * solution (valid only for a constant profile) or the solution on the
 * doubled grid restricted to the coincident nodes.
 */
template <typename Scalar>
std::vector<ConvergenceRow<Scalar>> convergence_study(const InterfaceProfile<Scalar>& profile,
                                                      const ProblemParams<Scalar>& params,
                                                      const std::vector<Eigen::Index>& ns,
                                                      ReferenceKind reference) {
    if (ns.empty()) throw std::invalid_argument("convergence_study: empty grid list");
    for (std::size_t k = 0; k + 1 < ns.size(); ++k)
        if (ns[k + 1] != 2 * ns[k])
            throw std::invalid_argument("convergence_study: grid sizes must double");

    Scalar h0 = 0;
    if (reference == ReferenceKind::analytic_flat) {
        h0 = profile.cosine_coeffs()[0];
        const Eigen::Index probes = 64;
        for (Eigen::Index k = 0; k < probes; ++k) {
            const Scalar x = -profile.half_period() +
                             2 * profile.half_period() * static_cast<Scalar>(k) / probes;
            if (std::abs(profile(x) - h0) > Scalar(1e-12) * std::abs(h0))
                throw std::invalid_argument(
                    "convergence_study: analytic reference requires a flat interface");
        }
    }

    std::vector<ConvergenceRow<Scalar>> rows;
    InterfaceSolution<Scalar> next;  // reused as the 2n reference solution
    bool have_next = false;
    for (std::size_t k = 0; k < ns.size(); ++k) {
        const Eigen::Index n = ns[k];
        InterfaceSolution<Scalar> sol =
            have_next ? std::move(next) : solve_transmission(profile, params, n);
        have_next = false;

        ConvergenceRow<Scalar> row;
        row.n = n;
        if (reference == ReferenceKind::analytic_flat) {
            VectorX<Scalar> phi_ref(n), dtau_ref(n), dnu1_ref(n);
            for (Eigen::Index i = 0; i < n; ++i) {
                const PlanePoint<Scalar> q{sol.grid.x[i], h0};
                phi_ref[i] = flat_exact(params, h0, q, Region::oil, FlatQuantity::value);
                dtau_ref[i] = flat_exact(params, h0, q, Region::oil, FlatQuantity::ddx);
                dnu1_ref[i] = flat_exact(params, h0, q, Region::oil, FlatQuantity::ddy);
            }
            row.error_phi = discrete_l2_error(sol.phi, phi_ref);
            row.error_dtau = discrete_l2_error(sol.dphi_dtau, dtau_ref);
            row.error_dnu1 = discrete_l2_error(sol.dphi_dnu1, dnu1_ref);
        } else {
            next = solve_transmission(profile, params, 2 * n);
            have_next = (k + 1 < ns.size() && ns[k + 1] == 2 * n);
            row.error_phi = discrete_l2_error(sol.phi, restrict_to_coarse(next.phi));
            row.error_dtau = discrete_l2_error(sol.dphi_dtau, restrict_to_coarse(next.dphi_dtau));
            row.error_dnu1 = discrete_l2_error(sol.dphi_dnu1, restrict_to_coarse(next.dphi_dnu1));
        }
        if (!rows.empty()) {
            const ConvergenceRow<Scalar>& prev = rows.back();
            row.eoc_phi = std::log2(prev.error_phi / row.error_phi);
            row.eoc_dtau = std::log2(prev.error_dtau / row.error_dtau);
            row.eoc_dnu1 = std::log2(prev.error_dnu1 / row.error_dnu1);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace oilfilm
