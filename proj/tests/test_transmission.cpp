#include "oilfilm/transmission.hpp"

#include "oilfilm/convergence.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace oilfilm;

namespace {

constexpr double pi = std::numbers::pi;

InterfaceProfile<double> builtin_profile(char kind, double h0, double L) {
    VectorX<double> samples(16);
    for (Eigen::Index k = 0; k < 16; ++k) {
        const double x = -L + 2 * L * k / 16.0;
        if (kind == '1') samples[k] = h0;
        else if (kind == '2') samples[k] = h0 * (1 + 0.2 * std::sin(pi * x / L));
        else samples[k] = h0 * (1 - std::cos(2 * pi * x / L) / (2 * pi));
    }
    return fit_profile(samples, L);
}

ProblemParams<double> benchmark_params(double eps1 = 8.0, double eps2 = 1.0) {
    ProblemParams<double> params;
    params.eps1 = eps1;
    params.eps2 = eps2;
    params.boundary = BoundaryData<double>::single_cosine(1.0, 1.0);
    return params;
}

VectorX<double> flat_reference(const NodeGrid<double>& grid, const ProblemParams<double>& params,
                               double h0, FlatQuantity quantity) {
    VectorX<double> ref(grid.size());
    for (Eigen::Index i = 0; i < grid.size(); ++i)
        ref[i] = flat_exact(params, h0, {grid.x[i], h0}, Region::oil, quantity);
    return ref;
}

}  // namespace

TEST_CASE("assemble_second_kind: equal dielectric constants give the identity") {
    const auto profile = builtin_profile('2', 0.03, 1.0);
    ProblemParams<double> params = benchmark_params(5.0, 5.0);
    const auto grid = build_grid(profile, 32);
    const auto sys = assemble_second_kind(grid, params);
    CHECK(sys.matrix == MatrixX<double>::Identity(32, 32));
    for (Eigen::Index i = 0; i < 32; ++i)
        CHECK(sys.rhs[i] ==
              doctest::Approx(phi_H(params.boundary, {grid.x[i], grid.h[i]})).epsilon(1e-15));
}

TEST_CASE("assemble_second_kind: diagonal structure and dominance for the flat case") {
    const double h0 = 0.03;
    const auto profile = builtin_profile('1', h0, 1.0);
    const auto grid = build_grid(profile, 64);
    const auto sys = assemble_second_kind(grid, benchmark_params());

    const double mu = (1.0 - 8.0) / 9.0;
    for (Eigen::Index i = 0; i < 64; ++i) {
        const double expected = 1.0 - 2 * mu * grid.spacing() * kernel_K_entry(grid, i, i);
        CHECK(sys.matrix(i, i) == doctest::Approx(expected).epsilon(1e-15));
        double off = 0;
        for (Eigen::Index j = 0; j < 64; ++j)
            if (j != i) off += std::abs(sys.matrix(i, j));
        CHECK(std::abs(sys.matrix(i, i)) > off);
    }
}

TEST_CASE("discrete K row sums are stable under grid doubling") {
    const auto profile = builtin_profile('3', 0.03, 1.0);
    ProblemParams<double> params = benchmark_params();
    // (K 1)(x) at the shared node x = -L, compared against a fine reference
    auto row_sum = [&](Eigen::Index n) {
        const auto grid = build_grid(profile, n);
        double sum = 0;
        for (Eigen::Index j = 0; j < n; ++j)
            sum += grid.spacing() * kernel_K_entry(grid, 0, j) * grid.arc[j];
        return sum;
    };
    const double reference = row_sum(2048);
    for (Eigen::Index n : {64, 128, 256})
        CHECK(std::abs(row_sum(n) - reference) < 1e-4 * std::abs(reference) + 1e-12);
}

TEST_CASE("solve_potential: flat-interface errors reproduce the known table") {
    const double h0 = 0.03;
    const auto profile = builtin_profile('1', h0, 1.0);
    const auto params = benchmark_params();

    // midpoint value phi(0, h0) = 2 eps1 A e^{pi h0} / ((eps1+eps2) e^{2 pi h0} + eps1-eps2)
    const double phi0 = 2 * 8 * std::exp(pi * h0) / (9 * std::exp(2 * pi * h0) + 7);
    const auto sol64 = solve_transmission(profile, params, 64);
    CHECK(sol64.phi[32] == doctest::Approx(phi0).epsilon(5e-5));
    CHECK(phi0 == doctest::Approx(0.98402).epsilon(1e-5));

    const auto grid32 = build_grid(profile, 32);
    const auto phi32 = solve_potential(assemble_second_kind(profile, params, 32));
    const double err32 =
        discrete_l2_error(phi32, flat_reference(grid32, params, h0, FlatQuantity::value));
    CHECK(err32 > 2.25e-3);
    CHECK(err32 < 2.37e-3);  // table value 2.307e-3 (self) / 2.312e-3 (analytic)

    const double err64 =
        discrete_l2_error(sol64.phi, flat_reference(sol64.grid, params, h0, FlatQuantity::value));
    CHECK(err64 > 5.3e-6);
    CHECK(err64 < 5.8e-6);  // table value 5.551e-6
}

TEST_CASE("solve_potential: residual is checked and reported") {
    const auto profile = builtin_profile('2', 0.03, 1.0);
    const auto grid = build_grid(profile, 32);
    double residual = -1;
    const auto phi = solve_potential(assemble_second_kind(grid, benchmark_params()), &residual);
    CHECK(residual >= 0);
    CHECK(residual < 1e-13);
    CHECK(phi.allFinite());
}

TEST_CASE("solve_normal_derivative: flat values, table error and the eps scaling") {
    const double h0 = 0.03;
    const auto profile = builtin_profile('1', h0, 1.0);
    const auto params = benchmark_params();
    const auto sol = solve_transmission(profile, params, 64);

    // d phi_1 / d nu (0, h0) = -2 pi eps2 A e^{pi h0} / ((eps1+eps2) e^{2 pi h0} + eps1-eps2)
    const double dnu0 = -2 * pi * std::exp(pi * h0) / (9 * std::exp(2 * pi * h0) + 7);
    CHECK(dnu0 == doctest::Approx(-0.386422).epsilon(1e-5));
    CHECK(sol.dphi_dnu1[32] == doctest::Approx(dnu0).epsilon(5e-4));

    const double err64 =
        discrete_l2_error(sol.dphi_dnu1, flat_reference(sol.grid, params, h0, FlatQuantity::ddy));
    CHECK(err64 > 6.9e-5);
    CHECK(err64 < 7.7e-5);  // table value 7.279e-5

    // both sides are the same solve, rescaled
    for (Eigen::Index j = 0; j < sol.grid.size(); ++j)
        CHECK(sol.dphi_dnu1[j] == (params.eps2 / params.eps1) * sol.dphi_dnu2[j]);

    const auto dnu1 = solve_normal_derivative(sol.grid, params, sol.phi, Region::oil);
    const auto dnu2 = solve_normal_derivative(sol.grid, params, sol.phi, Region::air);
    for (Eigen::Index j = 0; j < sol.grid.size(); ++j)
        CHECK(dnu1[j] == (params.eps2 / params.eps1) * dnu2[j]);
}

TEST_CASE("tangential_derivative: constants, flat values and the table error") {
    const double h0 = 0.03;
    const auto profile = builtin_profile('1', h0, 1.0);
    const auto params = benchmark_params();
    const auto sol = solve_transmission(profile, params, 64);

    CHECK(tangential_derivative(VectorX<double>::Constant(64, 3.0), sol.grid)
              .cwiseAbs()
              .maxCoeff() < 5e-13);

    // d phi / d tau (-1/2, h0) = pi * phi(0, h0)
    const double phi0 = 2 * 8 * std::exp(pi * h0) / (9 * std::exp(2 * pi * h0) + 7);
    CHECK(sol.dphi_dtau[16] == doctest::Approx(pi * phi0).epsilon(5e-5));

    const double err64 =
        discrete_l2_error(sol.dphi_dtau, flat_reference(sol.grid, params, h0, FlatQuantity::ddx));
    CHECK(err64 > 5.3e-6);
    CHECK(err64 < 5.8e-6);  // matches the phi error before roundoff
}

TEST_CASE("equal dielectric constants reduce the solution to phi_H on any profile") {
    for (char kind : {'1', '2', '3'}) {
        const auto profile = builtin_profile(kind, 0.03, 1.0);
        const auto params = benchmark_params(3.7, 3.7);
        const auto sol = solve_transmission(profile, params, 32);
        for (Eigen::Index j = 0; j < 32; ++j)
            CHECK(std::abs(sol.phi[j] - phi_H(params.boundary, {sol.grid.x[j], sol.grid.h[j]})) <
                  1e-13);
    }
}

TEST_CASE("even data on even profiles gives mirror-symmetric potentials") {
    for (char kind : {'1', '3'}) {  // flat and the cosine profile are even
        const auto profile = builtin_profile(kind, 0.03, 1.0);
        const auto sol = solve_transmission(profile, benchmark_params(), 64);
        for (Eigen::Index j = 1; j < 64; ++j) {
            // node j mirrors to node n - j (x = -L maps to itself)
            CHECK(std::abs(sol.phi[j] - sol.phi[64 - j]) < 1e-12);
        }
    }
}

TEST_CASE("first-kind matrix is symmetric up to the arc-length column scaling") {
    const auto profile = builtin_profile('2', 0.03, 1.0);
    const auto grid = build_grid(profile, 32);
    const auto V = discrete_V_matrix(grid);
    for (Eigen::Index i = 0; i < 32; ++i)
        for (Eigen::Index j = 0; j < 32; ++j)
            CHECK(V(i, j) / grid.arc[j] == doctest::Approx(V(j, i) / grid.arc[i]).epsilon(1e-13));
}

TEST_CASE("solution is grid-converged past n = 128") {
    const auto profile = builtin_profile('1', 0.03, 1.0);
    const auto params = benchmark_params();
    const auto coarse = solve_transmission(profile, params, 256);
    const auto fine = solve_transmission(profile, params, 512);
    double max_diff = 0;
    for (Eigen::Index i = 0; i < 256; ++i)
        max_diff = std::max(max_diff, std::abs(coarse.phi[i] - fine.phi[2 * i]));
    CHECK(max_diff < 1e-12);
}

TEST_CASE("the whole solve runs in long double precision") {
    using Scalar = long double;
    const auto profile = fit_profile(VectorX<Scalar>::Constant(8, 0.03L), Scalar(1));
    ProblemParams<Scalar> params;
    params.eps1 = 8;
    params.eps2 = 1;
    params.boundary = BoundaryData<Scalar>::single_cosine(Scalar(1), Scalar(1));
    const auto sol = solve_transmission(profile, params, Eigen::Index(32));

    const auto dprofile = builtin_profile('1', 0.03, 1.0);
    const auto dsol = solve_transmission(dprofile, benchmark_params(), 32);
    for (Eigen::Index j = 0; j < 32; ++j)
        CHECK(std::abs(static_cast<double>(sol.phi[j]) - dsol.phi[j]) < 1e-13);
}

TEST_CASE("solve_transmission validates its inputs") {
    const auto profile = builtin_profile('1', 0.03, 1.0);
    ProblemParams<double> params = benchmark_params();
    params.boundary.half_period = 2.0;  // mismatched period
    CHECK_THROWS_AS(solve_transmission(profile, params, 32), std::invalid_argument);
    params = benchmark_params();
    params.eps1 = -1;
    CHECK_THROWS_AS(solve_transmission(profile, params, 32), std::invalid_argument);
}
