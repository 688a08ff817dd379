// Dielectric database: breakdown field and permittivity per material, plus
// the quantities derived from them for a given beam (effective magnetic
// field at breakdown, minimum interaction length for a target rotation, and
// the spin-split refraction angle at an inclined field boundary).
#pragma once

#include <string>
#include <vector>

namespace nse {

struct Material {
    std::string name;
    double breakdown_field = 0.0; // V/m
    double eps_r = 1.0;
    double mu_r = 1.0;
};

struct Table1Row {
    Material material;
    double wavelength = 0.0;   // m
    double phi_target = 0.0;   // rad
    double theta = 0.0;        // rad, boundary inclination
    double b_eff = 0.0;        // T at the breakdown field
    double l_min = 0.0;        // m for the target rotation
    double alpha = 0.0;        // rad, refraction angle at the boundary
};

// The built-in database: seven common insulation choices, air through SiC.
const std::vector<Material>& builtin_materials();

// Loads a material CSV with header "name,E_b_MV_per_m,eps_r,mu_r".
// '#'-prefixed comment lines and blank lines are skipped.  Throws parse_error
// (with file:line) on malformed rows, duplicate names, E_b <= 0, eps_r < 1 or
// mu_r <= 0; io_error when the file cannot be read.
std::vector<Material> load_materials(const std::string& path);

// Derived quantities for one material:
//   b_eff  = E_b * v(lambda) / c^2
//   l_min  = phi_target * c^2 / (gamma_larmor * E_b)
//   alpha  = m |mu_n| b_eff / (hbar^2 k^2) * cot(theta)
// Throws domain_error for non-positive lambda or phi_target, or theta outside
// (0, pi/2) by less than 1e-6 rad.
Table1Row derived_row(const Material& material, double wavelength,
                      double phi_target, double theta);

} // namespace nse
