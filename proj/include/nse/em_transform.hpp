// Electromagnetic fields seen by a slowly moving neutron, computed by three
// independent routes that must agree:
//   1. a charged parallel-plate capacitor moving past the neutron, whose
//      surface charges form sheet currents,
//   2. the low-velocity (Galilean) limit of the constitutive equations for
//      moving media,
//   3. the full Lorentz boost of the lab-frame field tensor.
// Route 3 differs from the first two only at order (v/c)^2.
//
// Velocity conventions, because they bite: functions describing what the
// neutron experiences take the NEUTRON's velocity in the lab frame; the
// constitutive-equation functions take the MEDIUM's velocity in the frame
// where the fields are evaluated (in the neutron's rest frame the medium
// moves opposite to the neutron's lab velocity).
#pragma once

#include "nse/vec3.hpp"

namespace nse {

// Parallel-plate capacitor: plates of size plate_length x plate_width
// separated by gap, filled with a dielectric of relative permittivity eps_r,
// charged to voltage.  The thin-gap approximation requires
// gap < plate_length/10 and gap < plate_width/10.
struct CapacitorSpec {
    double voltage = 0.0;      // V
    double gap = 0.0;          // m
    double plate_length = 0.0; // m
    double plate_width = 0.0;  // m
    double eps_r = 1.0;
};

struct CapacitorState {
    double charge = 0.0; // C on the positive plate
    double field = 0.0;  // V/m between the plates
};

// Fields in one frame.  E and B always; D and H where a medium is involved.
struct LabFields {
    Vec3 E; // V/m
    Vec3 B; // T
};

struct FrameFields {
    Vec3 E; // V/m
    Vec3 B; // T
    Vec3 D; // C/m^2
    Vec3 H; // A/m
};

// Charge Q = eps_r eps0 (plate area / gap) voltage and the gap field
// E = voltage / gap.  Throws geometry_error when the thin-gap approximation
// does not hold or a dimension is non-positive; material_error for eps_r < 1.
CapacitorState capacitor_charge_and_field(const CapacitorSpec& spec);

// Sheet current density j = eps_r eps0 E v [A/m] produced by the capacitor's
// surface charge sliding past at speed v.  Negative inputs are rejected.
double surface_current(double field, double eps_r, double speed);

// Magnetic field at a neutron moving at velocity v (lab frame) through a
// static lab field E in vacuum: B = -(v x E)/c^2.  Valid for |v| < c/100.
Vec3 neutron_frame_field_vacuum(const Vec3& E, const Vec3& v);

// Low-velocity constitutive closure for a medium moving at velocity v_medium
// in the evaluation frame:
//   D = eps_r eps0 E,   B = mu_r mu0 H - (mu_r eps_r - 1)(v_medium x E)/c^2.
// Throws material_error for eps_r < 1 or mu_r <= 0; domain_error for
// |v_medium| >= c/100.
FrameFields galilean_fields(const Vec3& E, const Vec3& H, const Vec3& v_medium,
                            double eps_r, double mu_r);

// Exact field transformation into a frame moving at velocity v:
//   E' = G (E + v x B) + (1 - G)(v.E) v / v^2
//   B' = G (B - (v x E)/c^2) + (1 - G)(v.B) v / v^2,  G = 1/sqrt(1 - v^2/c^2).
// v = 0 returns the input unchanged.  Throws domain_error for |v| >= c.
LabFields lorentz_boost_fields(const LabFields& lab, const Vec3& v);

// Residuals of the moving-medium constitutive equations
//   D + (v x H)/c^2 = eps_r eps0 (E + v x B)
//   B - (v x E)/c^2 = mu_r mu0 (H - v x D)
// with v the medium velocity; a self-consistent field set drives both to
// terms of order (v/c)^2.
struct MinkowskiResidual {
    Vec3 electric; // first equation, C/m^2
    Vec3 magnetic; // second equation, T
};
MinkowskiResidual minkowski_residual(const FrameFields& fields, const Vec3& v_medium,
                                     double eps_r, double mu_r);

// All three routes side by side for a lab field E and a neutron moving at
// velocity v (lab frame) through a medium (eps_r, mu_r).  The medium
// dependence must cancel, so all routes land on -(v x E)/c^2 up to (v/c)^2.
// Deviations are relative to the larger |B| of each pair.
struct ConsistencyReport {
    Vec3 b_capacitor;
    Vec3 b_galilean;
    Vec3 b_lorentz;
    double dev_capacitor_galilean = 0.0;
    double dev_lorentz_galilean = 0.0;
    double max_deviation = 0.0;
};
ConsistencyReport transform_consistency_report(const Vec3& E, const Vec3& v,
                                               double eps_r, double mu_r);

} // namespace nse
