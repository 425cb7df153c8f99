#pragma once

#include "oilfilm/trig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oilfilm {

/*
 * A 2L-periodic interface height y = h(x), h > 0, represented by its
 * trigonometric interpolant so that values and the derivatives h', h''
 * are available with spectral accuracy at arbitrary points.
 */
template <typename Scalar>
struct InterfaceProfile {
    TrigPoly<Scalar> height;

    Scalar half_period() const { return height.half_period; }
    const VectorX<Scalar>& cosine_coeffs() const { return height.cos_coeffs; }
    const VectorX<Scalar>& sine_coeffs() const { return height.sin_coeffs; }

    Scalar operator()(Scalar x, int order = 0) const { return height(x, order); }
};

template <typename Scalar>
Scalar eval_profile(const InterfaceProfile<Scalar>& profile, Scalar x, int order = 0) {
    return profile(x, order);
}

/*
 * Fit an interface from equispaced height samples on [-L, L) starting at
 * x = -L.  Validates that the interpolant reproduces the samples and that
 * it stays strictly positive on a fine grid (16 points per mode).
 */
template <typename Derived>
InterfaceProfile<typename Derived::Scalar> fit_profile(const Eigen::MatrixBase<Derived>& samples,
                                                       typename Derived::Scalar half_period) {
    using Scalar = typename Derived::Scalar;
    InterfaceProfile<Scalar> profile{trig_fit(samples, half_period)};

    const Eigen::Index n = samples.size();
    Scalar scale = samples.cwiseAbs().maxCoeff();
    if (scale == Scalar(0)) scale = Scalar(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Scalar x = -half_period +
                         2 * half_period * static_cast<Scalar>(k) / static_cast<Scalar>(n);
        if (std::abs(profile(x) - samples[k]) > Scalar(1e-12) * scale)
            throw std::runtime_error("fit_profile: interpolant does not reproduce the samples");
    }

    const Eigen::Index fine = std::max<Eigen::Index>(64, 16 * profile.height.modes());
    for (Eigen::Index k = 0; k < fine; ++k) {
        const Scalar x = -half_period +
                         2 * half_period * static_cast<Scalar>(k) / static_cast<Scalar>(fine);
        if (!(profile(x) > Scalar(0)))
            throw std::invalid_argument("fit_profile: interface not positive");
    }
    return profile;
}

/*
 * Quadrature/collocation grid: n equispaced nodes x_j = -L + 2L j / n
 * (j = 0..n-1, n even) with cached interface values h_j, slopes h'_j,
 * curvatures h''_j and arc-length factors sqrt(1 + h'_j^2).
 */
template <typename Scalar>
struct NodeGrid {
    Scalar half_period{1};
    VectorX<Scalar> x;
    VectorX<Scalar> h;
    VectorX<Scalar> hp;
    VectorX<Scalar> hpp;
    VectorX<Scalar> arc;

    Eigen::Index size() const { return x.size(); }
    Scalar spacing() const { return 2 * half_period / static_cast<Scalar>(size()); }
};

template <typename Scalar>
NodeGrid<Scalar> build_grid(const InterfaceProfile<Scalar>& profile, Eigen::Index n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("build_grid: node count must be even and at least 4");
    const Scalar L = profile.half_period();

    NodeGrid<Scalar> grid;
    grid.half_period = L;
    grid.x.resize(n);
    grid.h.resize(n);
    grid.hp.resize(n);
    grid.hpp.resize(n);
    grid.arc.resize(n);
    const Scalar step = 2 * L / static_cast<Scalar>(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const Scalar xj = -L + step * static_cast<Scalar>(j);
        grid.x[j] = xj;
        grid.h[j] = profile(xj, 0);
        grid.hp[j] = profile(xj, 1);
        grid.hpp[j] = profile(xj, 2);
        grid.arc[j] = std::sqrt(Scalar(1) + grid.hp[j] * grid.hp[j]);
    }
    return grid;
}

}  // namespace oilfilm
