// One arm of a spin-echo spectrometer: echo rotation and echo length, the
// transverse splitting of the two spin states, and the comparison between the
// direct polarization rotation in a triangular field region and the
// splitting-enhanced route.
#pragma once

#include <optional>
#include <string>

#include "nse/kinematics.hpp"
#include "nse/spinor_wave.hpp"

namespace nse {

enum class SplittingOrientation {
    parallel_to_guide_field,
    perpendicular_to_guide_field,
};

struct SpinEchoArm {
    double field = 0.0;    // B, T
    double length = 0.0;   // L_arm, m
    double theta0 = 0.0;   // rad, field-boundary inclination
    SplittingOrientation orientation = SplittingOrientation::parallel_to_guide_field;
};

// Transverse heights of the two split trajectories at the field regions.
struct SplitTrajectories {
    double delta1 = 0.0; // m
    double delta2 = 0.0; // m
    double separation() const { return delta2 - delta1; }
};

// Magnitudes of effects the enhanced-route model deliberately drops, reported
// so their smallness can be checked rather than assumed: the zero-field
// precession caused by the path splitting itself, and the refraction the arm's
// own field boundary would add.
struct EnhancementDiagnostics {
    double zero_field_phase = 0.0;   // rad
    double arm_boundary_alpha = 0.0; // rad
};

struct EnhancementReport {
    double alpha = 0.0;        // triangle refraction angle, rad
    double delta = 0.0;        // spin-echo length, m
    double phi_direct = 0.0;   // rad
    double phi_enhanced = 0.0; // rad
    double ratio = 0.0;        // phi_enhanced / phi_direct = delta / (L tan theta)
    bool enhanced_dominant = false;
    std::string dominant;         // "enhanced" or "direct"
    bool rotator_required = false;
    std::string orientation_note;
    std::optional<EnhancementDiagnostics> diagnostics;
};

// Echo rotation 4 pi m |mu| lambda B L_arm / h^2; identical to the Larmor
// phase accumulated over the arm at the beam speed.
double spin_echo_rotation(double wavelength, double field, double arm_length);

// Spin-echo length delta = 2 m |mu| lambda^2 B L_arm cot(theta0) / h^2.
double spin_echo_length(double wavelength, double field, double arm_length,
                        double theta0);

// Heights +/- alpha L_arm of the split trajectories, and their separation
// 2 alpha L_arm.
SplitTrajectories split_trajectories(double alpha, double arm_length);
double split_separation(double alpha, double arm_length);

// Extra phase of the spin-up wave from traversing the arm field over a path
// lengthened by the splitting: (2 m |mu| B / (k hbar^2)) separation cot(theta0).
double enhanced_phase_path(double field, double wavenumber, double theta0,
                           double separation);

// The same phase written through the spin-echo length: 2 k delta alpha.
double enhanced_phase_delta(double delta, double wavenumber, double alpha);

// Compares the direct rotation 2 k alpha L tan(theta) in the triangle with the
// enhanced route 2 k delta alpha through the arm; the enhanced route dominates
// only when delta exceeds L tan(theta).
EnhancementReport enhancement_assessment(const NeutronBeam& beam,
                                         const TriangleRegion& region,
                                         const SpinEchoArm& arm,
                                         bool include_diagnostics = false);

} // namespace nse
