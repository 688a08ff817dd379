#include "nse/spinecho.hpp"

#include <cmath>

#include "nse/constants.hpp"
#include "nse/errors.hpp"
#include "nse/precession.hpp"

namespace nse {

namespace {

void check_positive(double value, const char* what)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw domain_error(std::string(what) + " must be positive and finite");
}

} // namespace

double spin_echo_rotation(double wavelength, double field, double arm_length)
{
    check_positive(wavelength, "wavelength");
    check_positive(field, "arm field");
    check_positive(arm_length, "arm length");
    using namespace constants;
    const double h2 = planck * planck;
    return 4.0 * pi * neutron_mass * neutron_moment_abs * wavelength * field
           * arm_length / h2;
}

double spin_echo_length(double wavelength, double field, double arm_length,
                        double theta0)
{
    check_positive(wavelength, "wavelength");
    check_positive(field, "arm field");
    check_positive(arm_length, "arm length");
    const double cot = checked_cot(theta0);
    using namespace constants;
    const double h2 = planck * planck;
    return 2.0 * neutron_mass * neutron_moment_abs * wavelength * wavelength * field
           * arm_length * cot / h2;
}

SplitTrajectories split_trajectories(double alpha, double arm_length)
{
    check_positive(arm_length, "arm length");
    return {-alpha * arm_length, alpha * arm_length};
}

double split_separation(double alpha, double arm_length)
{
    return 2.0 * alpha * arm_length;
}

double enhanced_phase_path(double field, double wavenumber, double theta0,
                           double separation)
{
    check_positive(field, "arm field");
    check_positive(wavenumber, "wavenumber");
    const double cot = checked_cot(theta0);
    if (!std::isfinite(separation))
        throw domain_error("trajectory separation must be finite");
    using namespace constants;
    return 2.0 * neutron_mass * neutron_moment_abs * field
           / (wavenumber * hbar * hbar) * separation * cot;
}

double enhanced_phase_delta(double delta, double wavenumber, double alpha)
{
    return 2.0 * wavenumber * delta * alpha;
}

EnhancementReport enhancement_assessment(const NeutronBeam& beam,
                                         const TriangleRegion& region,
                                         const SpinEchoArm& arm,
                                         bool include_diagnostics)
{
    check_positive(arm.field, "arm field");
    check_positive(arm.length, "arm length");
    checked_cot(arm.theta0);

    // Route the triangle through the propagator so the region is validated and
    // the refraction angle carries the field's sign consistently.
    const PiecewiseSpinorWave wave = propagate_triangle(beam, region);
    const double k = wave.wavenumber();
    const double alpha = wave.alpha();

    EnhancementReport report;
    report.alpha = alpha;
    report.delta = spin_echo_length(beam.wavelength(), arm.field, arm.length,
                                    arm.theta0);
    report.phi_direct = triangle_rotation(k, alpha, region.length, region.theta, 0.0);
    report.phi_enhanced = enhanced_phase_delta(report.delta, k, alpha);
    report.ratio = report.delta / (region.length * std::tan(region.theta));
    report.enhanced_dominant = report.ratio > 1.0;
    report.dominant = report.enhanced_dominant ? "enhanced" : "direct";

    report.rotator_required =
        arm.orientation == SplittingOrientation::perpendicular_to_guide_field;
    report.orientation_note =
        report.rotator_required
            ? "splitting perpendicular to the guide field: a rotator must turn "
              "the plane of polarization rotation ahead of the arm"
            : "splitting parallel to the guide field: precession plane unchanged";

    if (include_diagnostics) {
        EnhancementDiagnostics diag;
        diag.zero_field_phase = 4.0 * k * alpha * alpha * arm.length;
        diag.arm_boundary_alpha = refraction_angle_from_B(arm.field, k, arm.theta0);
        report.diagnostics = diag;
    }
    return report;
}

} // namespace nse
