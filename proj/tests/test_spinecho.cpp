#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "nse/constants.hpp"
#include "nse/errors.hpp"
#include "nse/kinematics.hpp"
#include "nse/precession.hpp"
#include "nse/spinecho.hpp"
#include "test_helpers.hpp"

using namespace nse;
namespace k = nse::constants;

TEST_CASE("echo rotation over one arm")
{
    const double phi = spin_echo_rotation(0.25e-9, 0.01, 1.0);
    CHECK(rel_close(phi, 1158.0232263625733, 1e-12));
    // Same statement as field precession at the beam speed.
    CHECK(rel_close(phi, larmor_phase(0.01, 1.0, neutron_velocity(0.25e-9)), 1e-12));
    // Linear in every argument.
    CHECK(rel_close(spin_echo_rotation(0.5e-9, 0.01, 1.0), 2.0 * phi, 1e-14));
    CHECK(rel_close(spin_echo_rotation(0.25e-9, 0.02, 1.0), 2.0 * phi, 1e-14));
    CHECK(rel_close(spin_echo_rotation(0.25e-9, 0.01, 3.0), 3.0 * phi, 1e-14));
    CHECK_THROWS_AS(spin_echo_rotation(0.0, 0.01, 1.0), domain_error);
    CHECK_THROWS_AS(spin_echo_rotation(0.25e-9, -0.01, 1.0), domain_error);
    CHECK_THROWS_AS(spin_echo_rotation(0.25e-9, 0.01, 0.0), domain_error);
}

TEST_CASE("echo length")
{
    const double delta = spin_echo_length(0.25e-9, 0.01, 1.0, k::pi / 4.0);
    CHECK(rel_close(delta, 4.6076280172707091e-08, 1e-12));
    // Ratio of the two arm formulas.
    const double phi = spin_echo_rotation(0.25e-9, 0.01, 1.0);
    CHECK(rel_close(delta,
                    phi * 0.25e-9 * checked_cot(k::pi / 4.0) / (2.0 * k::pi), 1e-12));
    // Quadratic in the wavelength.
    CHECK(rel_close(spin_echo_length(0.5e-9, 0.01, 1.0, k::pi / 4.0), 4.0 * delta,
                    1e-13));
    CHECK_THROWS_AS(spin_echo_length(0.25e-9, 0.01, 1.0, 0.0), domain_error);
    CHECK_THROWS_AS(spin_echo_length(0.25e-9, 0.0, 1.0, k::pi / 4.0), domain_error);
}

TEST_CASE("split trajectory heights")
{
    const SplitTrajectories split = split_trajectories(1.22e-12, 2.0);
    CHECK(split.delta1 == -1.22e-12 * 2.0);
    CHECK(split.delta2 == 1.22e-12 * 2.0);
    CHECK(rel_close(split.separation(), 4.88e-12, 1e-14));
    CHECK(split.separation() == split_separation(1.22e-12, 2.0));

    CHECK(split_separation(0.0, 2.0) == 0.0);
    CHECK(split_separation(-1.22e-12, 2.0) == -split_separation(1.22e-12, 2.0));
    CHECK_THROWS_AS(split_trajectories(1e-12, 0.0), domain_error);
}

TEST_CASE("enhanced phase, both routes, frozen values")
{
    CHECK(rel_close(enhanced_phase_path(0.01, 2.513e10, k::pi / 4.0, 2.44e-12),
                    2.8258848916609322e-09, 1e-12));
    CHECK(rel_close(enhanced_phase_path(0.01, 2.513e10, k::pi / 4.0, 4.88e-12),
                    5.6517697833218644e-09, 1e-12));
    CHECK(enhanced_phase_path(0.01, 2.513e10, k::pi / 4.0, 0.0) == 0.0);
    CHECK(rel_close(enhanced_phase_path(0.01, 2.513e10, k::pi / 4.0, 3.0 * 2.44e-12),
                    3.0 * enhanced_phase_path(0.01, 2.513e10, k::pi / 4.0, 2.44e-12),
                    1e-14));

    CHECK(rel_close(enhanced_phase_delta(4.6078e-8, 2.513e10, 1.22e-12),
                    2.8253739416000001e-09, 1e-12));
    CHECK(enhanced_phase_delta(4.6078e-8, 2.513e10, 0.0) == 0.0);
    CHECK(enhanced_phase_delta(4.6078e-8, 2.513e10, -1.22e-12)
          == -enhanced_phase_delta(4.6078e-8, 2.513e10, 1.22e-12));

    CHECK_THROWS_AS(enhanced_phase_path(0.0, 2.513e10, k::pi / 4.0, 2.44e-12),
                    domain_error);
}

TEST_CASE("the two enhanced-phase routes are the same quantity")
{
    std::mt19937_64 rng(77120482ULL);
    std::uniform_real_distribution<double> lambda_dist(0.1e-9, 1.0e-9);
    std::uniform_real_distribution<double> field_dist(1e-4, 0.1);
    std::uniform_real_distribution<double> length_dist(0.1, 3.0);
    std::uniform_real_distribution<double> theta_dist(0.2, 1.2);
    std::uniform_real_distribution<double> alpha_dist(1e-13, 1e-9);

    for (int i = 0; i < 200; ++i) {
        const double lambda = lambda_dist(rng);
        const double field = field_dist(rng);
        const double arm = length_dist(rng);
        const double theta0 = theta_dist(rng);
        const double alpha = alpha_dist(rng);
        const double kk = neutron_wavenumber(lambda);

        const double via_path =
            enhanced_phase_path(field, kk, theta0, split_separation(alpha, arm));
        const double via_delta = enhanced_phase_delta(
            spin_echo_length(lambda, field, arm, theta0), kk, alpha);
        CHECK(rel_close(via_path, via_delta, 1e-12));

        CHECK(rel_close(spin_echo_rotation(lambda, field, arm),
                        larmor_phase(field, arm, neutron_velocity(lambda)), 1e-12));
    }

    // Only the product B * L_arm matters.
    const double base = enhanced_phase_delta(
        spin_echo_length(0.25e-9, 0.01, 1.0, 0.9), 2.513e10, 1e-12);
    const double traded = enhanced_phase_delta(
        spin_echo_length(0.25e-9, 0.02, 0.5, 0.9), 2.513e10, 1e-12);
    CHECK(rel_close(base, traded, 1e-13));
}

TEST_CASE("enhancement assessment against the direct rotation")
{
    const NeutronBeam beam(0.25e-9);
    const TriangleRegion region{0.01, k::pi / 4.0, 0.53e-6, 1e-6};
    const SpinEchoArm arm{0.01, 1.0, k::pi / 4.0,
                          SplittingOrientation::parallel_to_guide_field};

    const EnhancementReport report = enhancement_assessment(beam, region, arm);
    CHECK(rel_close(report.delta, 4.6076280172707091e-08, 1e-12));
    CHECK(rel_close(report.alpha,
                    refraction_angle_from_B(0.53e-6, beam.wavenumber(), region.theta),
                    1e-15));
    CHECK(rel_close(report.phi_direct,
                    triangle_rotation(beam.wavenumber(), report.alpha, region.length,
                                      region.theta, 0.0),
                    1e-15));
    CHECK(rel_close(report.phi_enhanced,
                    enhanced_phase_delta(report.delta, beam.wavenumber(),
                                         report.alpha),
                    1e-15));
    // ratio computed from the geometry equals the phase ratio.
    CHECK(rel_close(report.ratio, report.phi_enhanced / report.phi_direct, 1e-12));
    CHECK(report.ratio < 1e-4);
    CHECK(!report.enhanced_dominant);
    CHECK(report.dominant == "direct");
    CHECK(!report.rotator_required);
    CHECK(report.orientation_note.find("rotator") == std::string::npos);
    CHECK(!report.diagnostics.has_value());

    // Perpendicular splitting needs the rotation plane turned first.
    SpinEchoArm tilted = arm;
    tilted.orientation = SplittingOrientation::perpendicular_to_guide_field;
    const EnhancementReport tilted_report =
        enhancement_assessment(beam, region, tilted);
    CHECK(tilted_report.rotator_required);
    CHECK(tilted_report.orientation_note.find("rotator") != std::string::npos);

    // Diagnostics expose the deliberately neglected terms, and they are small.
    const EnhancementReport with_diag =
        enhancement_assessment(beam, region, arm, true);
    REQUIRE(with_diag.diagnostics.has_value());
    CHECK(rel_close(with_diag.diagnostics->zero_field_phase,
                    4.0 * beam.wavenumber() * report.alpha * report.alpha * arm.length,
                    1e-15));
    CHECK(rel_close(with_diag.diagnostics->arm_boundary_alpha,
                    refraction_angle_from_B(arm.field, beam.wavenumber(), arm.theta0),
                    1e-15));
    CHECK(with_diag.diagnostics->zero_field_phase
          < 1e-3 * std::abs(with_diag.phi_enhanced));

    // A short enough device flips the verdict.
    const TriangleRegion tiny{1e-8, k::pi / 4.0, 0.53e-6, 1e-6};
    const EnhancementReport flipped = enhancement_assessment(beam, tiny, arm);
    CHECK(flipped.ratio > 1.0);
    CHECK(flipped.enhanced_dominant);
    CHECK(flipped.dominant == "enhanced");

    SpinEchoArm bad = arm;
    bad.field = 0.0;
    CHECK_THROWS_AS(enhancement_assessment(beam, region, bad), domain_error);
    bad = arm;
    bad.theta0 = k::pi;
    CHECK_THROWS_AS(enhancement_assessment(beam, region, bad), domain_error);
}
