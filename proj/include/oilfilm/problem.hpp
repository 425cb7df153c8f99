#pragma once

#include "oilfilm/trig.hpp"

#include <stdexcept>

namespace oilfilm {

/*
 * Fourier description of the applied electrode potential on y = 0,
 *
 *   f(x) = sum_m ( cos_amps[m] cos(m pi x / L) + sin_amps[m] sin(m pi x / L) ),
 *
 * with mode 0 the constant part.  The experiments of interest use the
 * single cosine f(x) = A cos(pi x / L).
 */
template <typename Scalar>
struct BoundaryData {
    Scalar half_period{1};
    VectorX<Scalar> cos_amps;
    VectorX<Scalar> sin_amps;

    static BoundaryData single_cosine(Scalar amplitude, Scalar half_period) {
        BoundaryData data;
        data.half_period = half_period;
        data.cos_amps = VectorX<Scalar>::Zero(2);
        data.sin_amps = VectorX<Scalar>::Zero(2);
        data.cos_amps[1] = amplitude;
        return data;
    }

    Eigen::Index modes() const { return cos_amps.size() - 1; }

    Scalar trace(Scalar x) const {
        const Scalar k0 = std::numbers::pi_v<Scalar> / half_period;
        Scalar sum = cos_amps[0];
        for (Eigen::Index m = 1; m <= modes(); ++m) {
            const Scalar km = k0 * static_cast<Scalar>(m);
            sum += cos_amps[m] * std::cos(km * x) + sin_amps[m] * std::sin(km * x);
        }
        return sum;
    }
};

/*
 * Transmission-problem parameters: dielectric constants of the film
 * (region 1) and the ambient (region 2), plus the applied potential.
 */
template <typename Scalar>
struct ProblemParams {
    Scalar eps1{8};
    Scalar eps2{1};
    BoundaryData<Scalar> boundary;

    Scalar half_period() const { return boundary.half_period; }

    void validate() const {
        if (!(eps1 > 0) || !(eps2 > 0))
            throw std::invalid_argument("ProblemParams: dielectric constants must be positive");
        if (!(boundary.half_period > 0))
            throw std::invalid_argument("ProblemParams: half period must be positive");
        if (boundary.cos_amps.size() < 1 || boundary.sin_amps.size() != boundary.cos_amps.size())
            throw std::invalid_argument("ProblemParams: malformed boundary data");
    }
};

}  // namespace oilfilm
