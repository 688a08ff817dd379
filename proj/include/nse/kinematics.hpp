// Neutron beam kinematics: wavelength <-> velocity <-> wavenumber.
#pragma once

namespace nse {

// v = h / (m_n * lambda).  Throws domain_error for lambda <= 0 or non-finite.
double neutron_velocity(double wavelength);

// k = 2 pi / lambda.  Throws domain_error for lambda <= 0 or non-finite.
double neutron_wavenumber(double wavelength);

// A monochromatic beam with an initial polarization phase split phi0 between
// the two spin components.  Construction validates that the beam is firmly
// non-relativistic (v/c < 1e-3); everything downstream relies on that.
class NeutronBeam {
public:
    explicit NeutronBeam(double wavelength, double phi0 = 0.0);

    double wavelength() const { return wavelength_; }
    double wavenumber() const { return wavenumber_; }
    double speed() const { return speed_; }
    double phase_split() const { return phi0_; }

private:
    double wavelength_;
    double wavenumber_;
    double speed_;
    double phi0_;
};

} // namespace nse
