#include "doctest.h"

#include "nuosc/coherence.hpp"
#include "nuosc/errors.hpp"
#include "nuosc/matter.hpp"
#include "nuosc/probability.hpp"
#include "nuosc/units.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace nuosc;

namespace {

const OscillationParams defaults = default_params();
constexpr double e0 = 4.5e10;
const WavePacketConfig wp_mode{};
const WavePacketConfig pw_mode{0.5e-9, 1.0, TreatmentMode::plane_wave};

double rel_diff(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

std::vector<double> log_grid(double lo, double hi, int n)
{
    std::vector<double> grid;
    grid.reserve(n + 1);
    for (int k = 0; k <= n; ++k)
        grid.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / n));
    return grid;
}

} // namespace

TEST_CASE("l1 norm of diagonal and maximally coherent states")
{
    FlavorDensityMatrix dm;
    dm.initial = Flavor::e;
    dm.baseline_m = 0.0;
    dm.energy_eV = e0;
    dm.potential_eV = 0.0;
    dm.kind = ParticleKind::neutrino;

    dm.rho = ComplexMatrix3{};
    dm.rho(0, 0) = 0.2;
    dm.rho(1, 1) = 0.3;
    dm.rho(2, 2) = 0.5;
    CHECK(l1_norm(dm) == 0.0);

    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            dm.rho(r, c) = 1.0 / 3.0;
    CHECK(std::abs(l1_norm(dm) - 2.0) < 1e-15);
}

TEST_CASE("l1 from probability rows covers the full coherence range")
{
    CHECK(l1_from_probabilities({1.0, 0.0, 0.0}) == 0.0);
    CHECK(std::abs(l1_from_probabilities({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}) - 2.0)
          < 1e-15);
    CHECK(std::abs(l1_from_probabilities({0.5, 0.5, 0.0}) - 1.0) < 1e-15);

    // Tiny numerical undershoots are clipped; genuine violations are refused.
    CHECK(l1_from_probabilities({1.0, -1e-13, 1e-13}) >= 0.0);
    CHECK_THROWS_AS(l1_from_probabilities({1.0, -1e-3, 0.0}), domain_error);
    CHECK_THROWS_AS(l1_from_probabilities({1.1, 0.0, 0.0}), domain_error);
}

TEST_CASE("plane-wave density matrices are pure and consistent")
{
    struct Point {
        double baseline, potential;
    };
    const Point points[] = {{1e13, 0.0}, {1e15, 1e-14}, {3e17, 2.242e-15}};
    for (const Point& pt : points) {
        const FlavorDensityMatrix dm = plane_wave_density_matrix(
            defaults, Flavor::e, pt.baseline, e0, pt.potential,
            ParticleKind::neutrino);

        std::complex<double> trace = 0.0;
        for (int r = 0; r < 3; ++r)
            trace += dm.rho(r, r);
        CHECK(std::abs(trace - 1.0) < 1e-12);

        double herm = 0.0;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                herm = std::max(herm,
                                std::abs(dm.rho(r, c) - std::conj(dm.rho(c, r))));
        CHECK(herm < 1e-14);

        const ComplexMatrix3 sq = dm.rho * dm.rho;
        CHECK(max_abs_diff(sq, dm.rho) < 1e-10);

        const std::array<double, 3> row = probability_row(
            defaults, pw_mode, Flavor::e, pt.baseline, e0, pt.potential,
            ParticleKind::neutrino);
        std::array<double, 3> diag;
        for (int b = 0; b < 3; ++b)
            diag[b] = dm.rho(b, b).real();
        // The amplitude path and the interference kernel round the huge
        // oscillation phase differently, so agreement is limited to a few
        // ulps of that phase, not of the probability.
        const double phase = matter_eigenvalues(defaults, e0, pt.potential,
                                                ParticleKind::neutrino)
                                 .e3m
                             * length_to_natural(pt.baseline);
        const double tol = 2e-15 * (1.0 + phase);
        for (int b = 0; b < 3; ++b)
            CHECK(std::abs(diag[b] - row[b]) < tol);

        CHECK(std::abs(l1_norm(dm) - l1_from_probabilities(diag)) < 1e-10);
    }
}

TEST_CASE("coherence vanishes at zero baseline")
{
    const FlavorDensityMatrix dm = plane_wave_density_matrix(
        defaults, Flavor::mu, 0.0, e0, 1e-14, ParticleKind::neutrino);
    CHECK(l1_norm(dm) < 1e-14);
}

TEST_CASE("frozen coherence values at the reference points")
{
    const std::array<double, 3> wp_row = probability_row(
        defaults, wp_mode, Flavor::e, 1e15, e0, 1e-14, ParticleKind::neutrino);
    CHECK(std::abs(l1_from_probabilities(wp_row) - 0.82177632492560596) < 2e-8);

    const std::array<double, 3> pw_row = probability_row(
        defaults, pw_mode, Flavor::e, 1e15, e0, 0.0, ParticleKind::neutrino);
    CHECK(std::abs(l1_from_probabilities(pw_row) - 1.7142919546747369) < 5e-8);
}

TEST_CASE("averaged rows freeze the late-time coherence")
{
    const std::array<double, 3> avg_matter =
        averaged_row(defaults, Flavor::e, e0, 1e-12, ParticleKind::neutrino);
    CHECK(rel_diff(avg_matter[0], 0.99996639737843055) < 1e-10);
    CHECK(rel_diff(avg_matter[1], 1.9575045609473816e-5) < 1e-10);
    CHECK(rel_diff(avg_matter[2], 1.4027575959977632e-5) < 1e-10);
    CHECK(rel_diff(l1_from_probabilities(avg_matter), 0.016372287179467931) < 1e-11);

    const std::array<double, 3> avg_vacuum =
        averaged_row(defaults, Flavor::e, e0, 0.0, ParticleKind::neutrino);
    CHECK(rel_diff(avg_vacuum[0], 0.54749529287589392) < 1e-10);
    CHECK(rel_diff(avg_vacuum[1], 0.17464138596082681) < 1e-10);
    CHECK(rel_diff(avg_vacuum[2], 0.27786332116327927) < 1e-10);
}

TEST_CASE("wave-packet coherence settles onto the averaged value")
{
    SUBCASE("vacuum far past the longest coherence length")
    {
        const double target = l1_from_probabilities(
            averaged_row(defaults, Flavor::e, e0, 0.0, ParticleKind::neutrino));
        for (double baseline : {7.75e18, 2e19, 1e20}) {
            const std::array<double, 3> row =
                probability_row(defaults, wp_mode, Flavor::e, baseline, e0, 0.0,
                                ParticleKind::neutrino);
            CHECK(std::abs(l1_from_probabilities(row) - target) < 1e-6);
        }
    }
    SUBCASE("strong matter keeps a small but nonzero residual coherence")
    {
        const double target = 0.016372287179467931;
        for (double baseline : {2.47e17, 1e18, 1e19}) {
            const std::array<double, 3> row =
                probability_row(defaults, wp_mode, Flavor::e, baseline, e0, 1e-12,
                                ParticleKind::neutrino);
            const double c = l1_from_probabilities(row);
            CHECK(std::abs(c - target) < 1e-6);
            CHECK(c < 1.0);
            CHECK(c > 0.0);
        }
    }
}

TEST_CASE("baseline scans separate damped and undamped potentials")
{
    const std::vector<double> grid = log_grid(3e17, 1e18, 200);

    const std::vector<ScanPoint> vacuum_tail =
        l1_scan(defaults, wp_mode, Flavor::e, ScanAxis::baseline, grid, 1e15, e0,
                0.0, ParticleKind::neutrino);
    const std::vector<ScanPoint> zero_dv_tail =
        l1_scan(defaults, wp_mode, Flavor::e, ScanAxis::baseline, grid, 1e15, e0,
                2.2420110881507885e-15, ParticleKind::neutrino);

    REQUIRE(vacuum_tail.size() == grid.size());
    REQUIRE(zero_dv_tail.size() == grid.size());

    double vac_lo = 3.0, vac_hi = -1.0, zero_lo = 3.0, zero_hi = -1.0;
    for (size_t k = 0; k < grid.size(); ++k) {
        CHECK(vacuum_tail[k].axis_value == grid[k]);
        for (double c : {vacuum_tail[k].c_l1, zero_dv_tail[k].c_l1}) {
            CHECK(c >= 0.0);
            CHECK(c <= 2.0 + 1e-10);
        }
        vac_lo = std::min(vac_lo, vacuum_tail[k].c_l1);
        vac_hi = std::max(vac_hi, vacuum_tail[k].c_l1);
        zero_lo = std::min(zero_lo, zero_dv_tail[k].c_l1);
        zero_hi = std::max(zero_hi, zero_dv_tail[k].c_l1);
    }
    // Vacuum interference is fully damped out here; at the potential where
    // the 1-2 pair velocities match, the undamped term keeps a wide swing.
    CHECK(vac_hi - vac_lo < 1e-3);
    CHECK(zero_hi - zero_lo > 0.3);
}

TEST_CASE("potential scans stay inside the coherence bounds")
{
    const std::vector<double> grid = log_grid(1e-17, 1e-12, 300);
    const std::vector<ScanPoint> scan =
        l1_scan(defaults, pw_mode, Flavor::e, ScanAxis::potential, grid, 1e15, e0,
                0.0, ParticleKind::neutrino);
    REQUIRE(scan.size() == grid.size());
    for (const ScanPoint& pt : scan) {
        CHECK(pt.c_l1 >= 0.0);
        CHECK(pt.c_l1 <= 2.0 + 1e-10);
        CHECK(std::isfinite(pt.c_l1));
    }
}
