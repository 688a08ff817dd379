#include "nse/precession.hpp"

#include <cmath>

#include "nse/constants.hpp"
#include "nse/errors.hpp"

namespace nse {

namespace c = constants;

std::string to_string(PhaseRoute route) {
    switch (route) {
        case PhaseRoute::larmor: return "larmor";
        case PhaseRoute::schwinger: return "schwinger";
        case PhaseRoute::triangle: return "triangle";
        case PhaseRoute::spinecho_path: return "spinecho-path";
        case PhaseRoute::spinecho_delta: return "spinecho-delta";
    }
    return "unknown";
}

double checked_cot(double theta) {
    constexpr double margin = 1e-6;
    if (!std::isfinite(theta) || theta <= margin || theta >= c::pi / 2.0 - margin) {
        throw domain_error("boundary inclination must lie in (0, pi/2) with 1e-6 rad margin, got " +
                           std::to_string(theta) + " rad");
    }
    return std::cos(theta) / std::sin(theta);
}

double larmor_phase(double b_field, double length, double speed) {
    if (!std::isfinite(speed) || speed <= 0.0) {
        throw domain_error("speed must be positive, got " + std::to_string(speed));
    }
    if (!std::isfinite(length) || length < 0.0) {
        throw domain_error("path length must be non-negative, got " + std::to_string(length));
    }
    return c::gamma_larmor * b_field * length / speed;
}

double schwinger_phase(double e_field, double length) {
    if (!std::isfinite(length) || length < 0.0) {
        throw domain_error("path length must be non-negative, got " + std::to_string(length));
    }
    if (!std::isfinite(e_field)) {
        throw domain_error("electric field must be finite");
    }
    return c::gamma_larmor / c::c_squared * e_field * length;
}

double schwinger_rate() {
    return c::gamma_larmor / c::c_squared;
}

double foldy_energy(double charge_density) {
    return -(c::hbar * c::neutron_moment / (2.0 * c::neutron_mass * c::speed_of_light)) *
           charge_density;
}

double polarizability_energy(double alpha_pol, double e_field) {
    if (!std::isfinite(alpha_pol) || alpha_pol < 0.0) {
        throw domain_error("polarizability must be non-negative, got " + std::to_string(alpha_pol));
    }
    return -0.5 * alpha_pol * e_field * e_field;
}

double refraction_angle_from_B(double b_eff, double wavenumber, double theta) {
    const double cot = checked_cot(theta);
    if (!std::isfinite(wavenumber) || wavenumber <= 0.0) {
        throw domain_error("wavenumber must be positive, got " + std::to_string(wavenumber));
    }
    const double hk = c::hbar * wavenumber;
    return c::neutron_mass * c::neutron_moment_abs * b_eff / (hk * hk) * cot;
}

double refraction_angle_from_E(double e_field, double wavelength, double theta) {
    const double cot = checked_cot(theta);
    if (!std::isfinite(wavelength) || wavelength <= 0.0) {
        throw domain_error("wavelength must be positive, got " + std::to_string(wavelength));
    }
    return c::gamma_larmor * wavelength * e_field / (c::pi * c::c_squared) * cot;
}

} // namespace nse
