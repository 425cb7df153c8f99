#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <type_traits>

namespace oilfilm {

template <typename Scalar>
using VectorX = Eigen::Vector<Scalar, Eigen::Dynamic>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/*
 * Real trigonometric polynomial on a 2L-periodic domain,
 *
 *   p(x) = a_0 + sum_{m=1}^{M} ( a_m cos(m pi x / L) + b_m sin(m pi x / L) ),
 *
 * stored as the coefficient vectors a (index 0..M, a[0] the mean) and
 * b (b[0] unused, kept zero).  Derivatives are obtained analytically by
 * differentiating the series term by term.
 */
template <typename Scalar>
struct TrigPoly {
    static_assert(std::is_floating_point_v<Scalar>);

    Scalar half_period{1};
    VectorX<Scalar> cos_coeffs;  // a_0 .. a_M
    VectorX<Scalar> sin_coeffs;  // b_0 (= 0) .. b_M

    Eigen::Index modes() const { return cos_coeffs.size() - 1; }

    // Value (order 0), first (order 1) or second (order 2) derivative at x.
    Scalar operator()(Scalar x, int order = 0) const {
        if (order < 0 || order > 2)
            throw std::invalid_argument("TrigPoly: derivative order must be 0, 1 or 2");
        const Scalar k0 = std::numbers::pi_v<Scalar> / half_period;
        Scalar sum = (order == 0) ? cos_coeffs[0] : Scalar(0);
        for (Eigen::Index m = 1; m <= modes(); ++m) {
            const Scalar km = k0 * static_cast<Scalar>(m);
            const Scalar c = std::cos(km * x);
            const Scalar s = std::sin(km * x);
            switch (order) {
                case 0: sum += cos_coeffs[m] * c + sin_coeffs[m] * s; break;
                case 1: sum += km * (-cos_coeffs[m] * s + sin_coeffs[m] * c); break;
                case 2: sum -= km * km * (cos_coeffs[m] * c + sin_coeffs[m] * s); break;
            }
        }
        return sum;
    }
};

namespace detail {

/*
 * Tables of cos/sin(2 pi r / n).  At the node theta_k = -pi + 2 pi k / n
 * the mode-m basis values reduce exactly via integer arithmetic,
 *
 *   cos(m theta_k) = (-1)^m cos(2 pi (m k mod n) / n),
 *
 * which keeps the argument small independently of m and so avoids the
 * m-amplified range-reduction roundoff of evaluating cos(m theta_k)
 * directly.
 */
template <typename Scalar>
struct NodeBasisTable {
    Eigen::Index n;
    VectorX<Scalar> cos_tab;
    VectorX<Scalar> sin_tab;

    explicit NodeBasisTable(Eigen::Index count) : n(count), cos_tab(count), sin_tab(count) {
        const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
        for (Eigen::Index r = 0; r < n; ++r) {
            const Scalar u = two_pi * static_cast<Scalar>(r) / static_cast<Scalar>(n);
            cos_tab[r] = std::cos(u);
            sin_tab[r] = std::sin(u);
        }
    }

    Scalar cos_mk(Eigen::Index m, Eigen::Index k) const {
        const Scalar sign = (m % 2 == 0) ? Scalar(1) : Scalar(-1);
        return sign * cos_tab[(m * k) % n];
    }
    Scalar sin_mk(Eigen::Index m, Eigen::Index k) const {
        const Scalar sign = (m % 2 == 0) ? Scalar(1) : Scalar(-1);
        return sign * sin_tab[(m * k) % n];
    }
};

}  // namespace detail

/*
 * Interpolating trigonometric polynomial through samples y_k taken at the
 * equispaced nodes x_k = -L + 2L k / n, k = 0..n-1.
 *
 * For even n = 2N the interpolant carries modes m = 0..N with a cosine-only
 * Nyquist mode (b_N = 0); for odd n it carries m = 0..(n-1)/2.  Discrete
 * orthogonality of the node set makes the direct sums below exact
 * interpolation formulas.
 */
template <typename Derived>
TrigPoly<typename Derived::Scalar> trig_fit(const Eigen::MatrixBase<Derived>& samples,
                                            typename Derived::Scalar half_period) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = samples.size();
    if (n < 2) throw std::invalid_argument("trig_fit: need at least two samples");
    if (!(half_period > 0)) throw std::invalid_argument("trig_fit: half period must be positive");
    if (!samples.allFinite()) throw std::invalid_argument("trig_fit: samples must be finite");

    const bool even = (n % 2 == 0);
    const Eigen::Index M = even ? n / 2 : (n - 1) / 2;

    TrigPoly<Scalar> p;
    p.half_period = half_period;
    p.cos_coeffs = VectorX<Scalar>::Zero(M + 1);
    p.sin_coeffs = VectorX<Scalar>::Zero(M + 1);

    const detail::NodeBasisTable<Scalar> basis(n);
    p.cos_coeffs[0] = samples.sum() / static_cast<Scalar>(n);
    for (Eigen::Index m = 1; m <= M; ++m) {
        Scalar ca = 0, sa = 0;
        for (Eigen::Index k = 0; k < n; ++k) {
            ca += samples[k] * basis.cos_mk(m, k);
            sa += samples[k] * basis.sin_mk(m, k);
        }
        const bool nyquist = even && (2 * m == n);
        const Scalar w = (nyquist ? Scalar(1) : Scalar(2)) / static_cast<Scalar>(n);
        p.cos_coeffs[m] = w * ca;
        p.sin_coeffs[m] = nyquist ? Scalar(0) : w * sa;
    }
    return p;
}

/*
 * Nodal derivative of the trigonometric interpolant of `values` on the even
 * grid x_j = -L + 2L j / n.  The Nyquist mode's derivative contribution is
 * dropped (the real symmetric convention), so a pure cos(N pi x / L) input
 * maps to zeros.
 */
template <typename Derived>
VectorX<typename Derived::Scalar> spectral_derivative(const Eigen::MatrixBase<Derived>& values,
                                                      typename Derived::Scalar half_period) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = values.size();
    if (n % 2 != 0) throw std::invalid_argument("spectral_derivative: node count must be even");

    const TrigPoly<Scalar> p = trig_fit(values, half_period);
    const Scalar k0 = std::numbers::pi_v<Scalar> / half_period;
    const detail::NodeBasisTable<Scalar> basis(n);
    VectorX<Scalar> out = VectorX<Scalar>::Zero(n);
    for (Eigen::Index m = 1; m <= p.modes(); ++m) {
        if (2 * m == n) continue;  // Nyquist
        const Scalar dc = k0 * static_cast<Scalar>(m) * p.sin_coeffs[m];
        const Scalar ds = -k0 * static_cast<Scalar>(m) * p.cos_coeffs[m];
        for (Eigen::Index j = 0; j < n; ++j)
            out[j] += dc * basis.cos_mk(m, j) + ds * basis.sin_mk(m, j);
    }
    return out;
}

}  // namespace oilfilm
