// Spin rotation phases for a neutron crossing field regions, the two
// equivalent forms of the boundary refraction angle, and the small
// spin-independent energy terms that accompany the motional coupling.
#pragma once

#include <string>

namespace nse {

// Which formula a rotation angle came from; kept alongside the number so
// outputs comparing routes stay self-describing.
enum class PhaseRoute { larmor, schwinger, triangle, spinecho_path, spinecho_delta };

std::string to_string(PhaseRoute route);

struct PhaseResult {
    double phi = 0.0; // rad, signed
    PhaseRoute route = PhaseRoute::larmor;
};

// Larmor rotation over a path of length L at speed v:
//   phi = gamma_larmor * B * L / v.
// Throws domain_error for v <= 0 or L < 0.
double larmor_phase(double b_field, double length, double speed);

// Rotation picked up from a lab electric field E over length L:
//   phi = (gamma_larmor / c^2) * E * L.
// The speed dependence cancels against the motion-induced field, so the
// phase depends only on the E*L product.  Throws domain_error for L < 0.
double schwinger_phase(double e_field, double length);

// Rotation per volt of E*L product: gamma_larmor / c^2 (~2.04e-9 rad/V,
// i.e. ~2.0 urad/kV).
double schwinger_rate();

// Spin-independent contact interaction with a charge density rho_c:
//   U = -(hbar * mu_n / (2 m_n c)) * rho_c,
// with the signed moment, exactly as the coupling is written.
double foldy_energy(double charge_density);

// Induced-dipole energy in an electric field: U = -(1/2) alpha_pol E^2.
// Throws domain_error for alpha_pol < 0.
double polarizability_energy(double alpha_pol, double e_field);

// Refraction angle of one spin component at a field boundary inclined by
// theta, magnetic form:
//   alpha = m_n |mu_n| B_eff / (hbar^2 k^2) * cot(theta).
// Throws domain_error for k <= 0 or theta within 1e-6 rad of 0 or pi/2.
double refraction_angle_from_B(double b_eff, double wavenumber, double theta);

// Same angle written against the driving electric field:
//   alpha = gamma_larmor * lambda * E / (pi c^2) * cot(theta).
// Note: with the spin-1/2 Larmor coupling this form evaluates to 4x the
// magnetic form for the matched B_eff = E v / c^2; both are provided so the
// discrepancy is visible rather than hidden.
double refraction_angle_from_E(double e_field, double wavelength, double theta);

// Validates theta in (1e-6, pi/2 - 1e-6) and returns cot(theta).
double checked_cot(double theta);

} // namespace nse
