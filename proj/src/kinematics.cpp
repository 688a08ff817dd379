#include "nse/kinematics.hpp"

#include <cmath>
#include <string>

#include "nse/constants.hpp"
#include "nse/errors.hpp"

namespace nse {

namespace {

void require_positive_finite(double wavelength) {
    if (!std::isfinite(wavelength) || wavelength <= 0.0) {
        throw domain_error("wavelength must be positive and finite, got " +
                           std::to_string(wavelength));
    }
}

} // namespace

double neutron_velocity(double wavelength) {
    require_positive_finite(wavelength);
    return constants::planck / (constants::neutron_mass * wavelength);
}

double neutron_wavenumber(double wavelength) {
    require_positive_finite(wavelength);
    return 2.0 * constants::pi / wavelength;
}

NeutronBeam::NeutronBeam(double wavelength, double phi0)
    : wavelength_(wavelength),
      wavenumber_(neutron_wavenumber(wavelength)),
      speed_(neutron_velocity(wavelength)),
      phi0_(phi0) {
    if (!std::isfinite(phi0)) {
        throw domain_error("phase split must be finite");
    }
    // The whole treatment is first order in v/c; refuse beams where that
    // premise is shaky.
    if (speed_ / constants::speed_of_light >= 1e-3) {
        throw domain_error("beam is too fast for the non-relativistic model: v/c = " +
                           std::to_string(speed_ / constants::speed_of_light) +
                           " (wavelength " + std::to_string(wavelength * 1e12) + " pm)");
    }
}

} // namespace nse
