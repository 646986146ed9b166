#include "ovenctl/heat_transfer.hpp"

#include <cmath>

#include <doctest.h>

#include "ovenctl/errors.hpp"
#include "ovenctl/plant.hpp"

using namespace ovenctl;

namespace {

AirProperties unit_air() { return AirProperties{.cp = 1.0, .rho = 1.0, .k = 1.0, .beta = 1.0, .mu = 1.0, .g = 1.0}; }

}  // namespace

TEST_CASE("grashof: no buoyancy without a temperature difference") {
    CHECK(grashof(standard_oven().air, 2.0, 0.0) == 0.0);
}

TEST_CASE("grashof: unit inputs") { CHECK(grashof(unit_air(), 1.0, 1.0) == doctest::Approx(1.0)); }

TEST_CASE("grashof: oven wall with standard air") {
    // Frozen by direct evaluation of D^3 rho^2 g dT beta / mu^2 with the
    // standard air table, D = 2 ft, dT = 320 F.
    CHECK(grashof(standard_oven().air, 2.0, 320.0) == doctest::Approx(5415097387.456859).epsilon(1e-12));
}

TEST_CASE("grashof: invalid geometry") {
    CHECK_THROWS_AS(grashof(unit_air(), 0.0, 1.0), InvalidGeometry);
    CHECK_THROWS_AS(grashof(unit_air(), -1.0, 1.0), InvalidGeometry);
    CHECK_THROWS_AS(grashof(unit_air(), 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("grashof: linear in dT, cubic in D") {
    const auto air = standard_oven().air;
    const double base = grashof(air, 0.7, 55.0);
    CHECK(grashof(air, 0.7, 110.0) == doctest::Approx(2.0 * base).epsilon(1e-12));
    CHECK(grashof(air, 1.4, 55.0) == doctest::Approx(8.0 * base).epsilon(1e-12));
}

TEST_CASE("prandtl: unit and standard air values") {
    CHECK(prandtl(unit_air()) == 1.0);
    // 3.852e-7 * 7.731 / 4.233e-6, frozen by direct evaluation.
    CHECK(prandtl(standard_oven().air) == doctest::Approx(0.703515520907158).epsilon(1e-12));
    auto doubled = standard_oven().air;
    doubled.mu *= 2.0;
    CHECK(prandtl(doubled) == doctest::Approx(2.0 * 0.703515520907158).epsilon(1e-12));
}

TEST_CASE("nusselt: laminar branch value") {
    // 0.683 * (1 / 1.861)^0.25, frozen by direct evaluation.
    CHECK(nusselt(1.0, 1.0) == doctest::Approx(0.5847686887282304).epsilon(1e-12));
    CHECK(nusselt(0.0, 1.0) == 0.0);
}

TEST_CASE("nusselt: turbulent branch value") {
    CHECK(nusselt(1e10, 0.703515520907158) == doctest::Approx(434.24278774631216).epsilon(1e-12));
}

TEST_CASE("nusselt: branch boundary belongs to the laminar correlation") {
    const double pr = 0.7;
    const double at_boundary = nusselt(1e9, pr);
    const double laminar_form = 0.683 * std::pow(1e9, 0.25) * std::pow(pr, 0.25) *
                                std::pow(pr / (0.861 + pr), 0.25);
    CHECK(at_boundary == doctest::Approx(laminar_form).epsilon(1e-14));
    // Discontinuous by construction: the branches disagree at the boundary.
    const double turbulent_form =
        0.138 * std::pow(1e9, 0.36) * std::pow(std::pow(pr, 0.175) - 0.55, 0.25);
    CHECK(std::abs(at_boundary - turbulent_form) > 1.0);
}

TEST_CASE("nusselt: correlation domain error for tiny Prandtl on the turbulent branch") {
    CHECK_THROWS_AS(nusselt(1e10, 0.03), CorrelationDomain);
    CHECK_NOTHROW(nusselt(1e8, 0.03));  // laminar branch has no such restriction
}

TEST_CASE("nusselt: monotone nondecreasing in Gr on each branch") {
    const double pr = 0.703515520907158;
    double previous = 0.0;
    // Log-spaced sweep across both branches; monotonicity within each branch.
    for (double exponent = 0.0; exponent <= 12.0; exponent += 0.125) {
        const double gr = std::pow(10.0, exponent);
        const double nu = nusselt(gr, pr);
        const bool crossed = gr > 1e9 && std::pow(10.0, exponent - 0.125) <= 1e9;
        if (!crossed) CHECK(nu >= previous);
        previous = nu;
    }
}

TEST_CASE("htc: Nu k / D") {
    CHECK(htc(1.0, 1.0, 1.0) == 1.0);
    CHECK(htc(2.0, 3.0, 6.0) == 1.0);
    CHECK_THROWS_AS(htc(1.0, 1.0, 0.0), InvalidGeometry);
}

TEST_CASE("htc: full wall pipeline is exploratory against the published constant") {
    // The published coefficient table lists 1.069 for the wall, but the
    // temperature difference behind it is not recorded; the pipeline result
    // for dT = 320 is orders of magnitude away in these units. Documented,
    // not asserted against the constant.
    const auto estimate = estimate_htc(standard_oven().air, 2.0, 320.0);
    CHECK(estimate.groups.gr > 1e9);
    CHECK(estimate.h == doctest::Approx(0.0007369688721234086).epsilon(1e-10));
}

TEST_CASE("conv_heat_rate: equilibrium, unit case and frozen preset value") {
    CHECK(conv_heat_rate(2.0, 3.0, 150.0, 150.0) == 0.0);
    CHECK(conv_heat_rate(1.0, 1.0, 1.0, 0.0) == 1.0);
    CHECK(conv_heat_rate(1.189, 0.375, 400.0, 80.0) == doctest::Approx(142.68).epsilon(1e-12));
    CHECK_THROWS_AS(conv_heat_rate(0.0, 1.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("conv_heat_rate: antisymmetric in the two temperatures") {
    for (double t1 : {80.0, 200.0, 400.0}) {
        for (double t2 : {65.0, 135.0, 350.0}) {
            CHECK(conv_heat_rate(1.1, 0.4, t1, t2) == -conv_heat_rate(1.1, 0.4, t2, t1));
        }
    }
}

TEST_CASE("make_exchange fills the resulting heat rate") {
    const auto exchange = make_exchange(1.189, 0.375, 400.0, 80.0);
    CHECK(exchange.q_rate == doctest::Approx(142.68));
    CHECK(exchange.t_i == 400.0);
}

TEST_CASE("pipeline determinism: identical inputs, bitwise identical outputs") {
    const auto a = estimate_htc(standard_oven().air, 0.5, 123.456);
    const auto b = estimate_htc(standard_oven().air, 0.5, 123.456);
    CHECK(a.groups.gr == b.groups.gr);
    CHECK(a.groups.pr == b.groups.pr);
    CHECK(a.groups.nu == b.groups.nu);
    CHECK(a.h == b.h);
}
