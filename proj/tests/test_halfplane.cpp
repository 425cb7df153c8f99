#include "oilfilm/halfplane.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace oilfilm;

namespace {

constexpr double pi = std::numbers::pi;

ProblemParams<double> benchmark_params(double A = 1.0, double L = 1.0) {
    ProblemParams<double> params;
    params.eps1 = 8.0;
    params.eps2 = 1.0;
    params.boundary = BoundaryData<double>::single_cosine(A, L);
    return params;
}

}  // namespace

TEST_CASE("phi_H: boundary trace and single-mode decay") {
    const auto data = BoundaryData<double>::single_cosine(1.0, 1.0);
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> xd(-1.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        const double x = xd(rng);
        CHECK(phi_H(data, {x, 0.0}) == doctest::Approx(std::cos(pi * x)).epsilon(1e-15));
    }
    CHECK(phi_H(data, {0.0, 1.0}) == doctest::Approx(std::exp(-pi)).epsilon(1e-15));
    CHECK(std::exp(-pi) == doctest::Approx(0.0432139).epsilon(1e-5));
}

TEST_CASE("phi_H: mode-2 data decays at twice the rate") {
    BoundaryData<double> data;
    data.half_period = 1.0;
    data.cos_amps = VectorX<double>::Zero(3);
    data.sin_amps = VectorX<double>::Zero(3);
    data.cos_amps[2] = 1.0;
    CHECK(phi_H(data, {0.0, 0.5}) == doctest::Approx(std::exp(-pi)).epsilon(1e-14));
    // cross-check via the double-layer boundary integral
    CHECK(phi_H_by_quadrature(data, {0.0, 0.5}, 10000) ==
          doctest::Approx(std::exp(-pi)).epsilon(1e-8));
}

TEST_CASE("phi_H_by_quadrature agrees with the closed form") {
    const auto data = BoundaryData<double>::single_cosine(1.0, 1.0);
    const PlanePoint<double> p{0.3, 0.2};
    CHECK(std::abs(phi_H_by_quadrature(data, p, 256) - phi_H(data, p)) < 1e-10);
}

TEST_CASE("phi_H_by_quadrature: constant data extends as the constant") {
    BoundaryData<double> data;
    data.half_period = 1.0;
    data.cos_amps = VectorX<double>::Constant(1, 0.7);
    data.sin_amps = VectorX<double>::Zero(1);
    for (const PlanePoint<double> p : {PlanePoint<double>{0.2, 0.3}, PlanePoint<double>{-0.6, 1.1}})
        CHECK(phi_H_by_quadrature(data, p, 256) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("phi_H_by_quadrature: periodic in x and singular on the boundary") {
    const auto data = BoundaryData<double>::single_cosine(1.0, 1.0);
    const PlanePoint<double> p{0.12, 0.4};
    CHECK(std::abs(phi_H_by_quadrature(data, {p.x + 2.0, p.y}, 256) -
                   phi_H_by_quadrature(data, p, 256)) < 1e-13);
    CHECK_THROWS_AS(phi_H_by_quadrature(data, {0.1, 0.0}), std::invalid_argument);
}

TEST_CASE("phi_H is discretely harmonic") {
    const auto data = BoundaryData<double>::single_cosine(1.0, 1.0);
    const double s = 1e-4;
    for (const PlanePoint<double> p : {PlanePoint<double>{0.4, 0.3}, PlanePoint<double>{-0.7, 0.9}}) {
        const double lap = (phi_H(data, {p.x + s, p.y}) + phi_H(data, {p.x - s, p.y}) +
                            phi_H(data, {p.x, p.y + s}) + phi_H(data, {p.x, p.y - s}) -
                            4 * phi_H(data, p)) /
                           (s * s);
        CHECK(std::abs(lap) < 1e-5);
    }
}

TEST_CASE("flat_exact: interface continuity and flux jump") {
    const double h0 = 0.03;
    const auto params = benchmark_params();
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> xd(-1.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        const double x = xd(rng);
        const PlanePoint<double> p{x, h0};
        const double oil = flat_exact(params, h0, p, Region::oil);
        const double air = flat_exact(params, h0, p, Region::air);
        CHECK(std::abs(oil - air) < 1e-14);
        const double flux_oil = params.eps1 * flat_exact(params, h0, p, Region::oil, FlatQuantity::ddy);
        const double flux_air = params.eps2 * flat_exact(params, h0, p, Region::air, FlatQuantity::ddy);
        CHECK(std::abs(flux_oil - flux_air) < 1e-13);
    }
}

TEST_CASE("flat_exact: value at the interface midpoint") {
    const double h0 = 0.03;
    const auto params = benchmark_params();
    // 2 eps1 A e^{pi h0/L} / ( (eps1+eps2) e^{2 pi h0/L} + eps1 - eps2 )
    const double expected =
        2 * 8 * std::exp(pi * h0) / (9 * std::exp(2 * pi * h0) + 7);
    CHECK(expected == doctest::Approx(0.98402).epsilon(1e-5));
    CHECK(flat_exact(params, h0, {0.0, h0}, Region::air) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(flat_exact(params, h0, {0.0, h0}, Region::oil) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("flat_exact: boundary trace, decay and region checks") {
    const double h0 = 0.03;
    const auto params = benchmark_params();
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> xd(-1.0, 1.0);
    for (int t = 0; t < 10; ++t) {
        const double x = xd(rng);
        CHECK(flat_exact(params, h0, {x, 0.0}, Region::oil) ==
              doctest::Approx(std::cos(pi * x)).epsilon(1e-14));
    }
    double prev = flat_exact(params, h0, {0.0, 0.5}, Region::air);
    for (double y : {1.0, 2.0, 4.0}) {
        const double value = flat_exact(params, h0, {0.0, y}, Region::air);
        CHECK(value < prev);
        CHECK(value > 0);
        prev = value;
    }
    CHECK_THROWS_AS(flat_exact(params, h0, {0.0, 2 * h0}, Region::oil), std::invalid_argument);
    CHECK_THROWS_AS(flat_exact(params, h0, {0.0, h0 / 2}, Region::air), std::invalid_argument);
}

TEST_CASE("flat_exact: multi-mode data superposes by linearity") {
    const double h0 = 0.05;
    ProblemParams<double> params = benchmark_params();
    params.boundary.cos_amps = VectorX<double>::Zero(4);
    params.boundary.sin_amps = VectorX<double>::Zero(4);
    params.boundary.cos_amps[0] = 0.3;
    params.boundary.cos_amps[1] = 1.0;
    params.boundary.sin_amps[3] = -0.4;

    ProblemParams<double> each = params;
    const PlanePoint<double> p{0.37, 0.6};
    double sum = 0;
    for (int m = 0; m < 4; ++m) {
        each.boundary.cos_amps = VectorX<double>::Zero(4);
        each.boundary.sin_amps = VectorX<double>::Zero(4);
        each.boundary.cos_amps[m] = params.boundary.cos_amps[m];
        each.boundary.sin_amps[m] = params.boundary.sin_amps[m];
        sum += flat_exact(each, h0, p, Region::air);
    }
    CHECK(flat_exact(params, h0, p, Region::air) == doctest::Approx(sum).epsilon(1e-14));
}
