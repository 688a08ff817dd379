// Two-component spinor plane wave crossing a triangular field region.
// The field boundary entering the triangle is the line y = x tan(theta), the
// exit boundary y = (L - x) tan(theta); inside, the two spin states refract
// by +/-alpha, and after the region their phase difference carries the
// polarization rotation phi = 2 k alpha (L tan(theta) - 2y) on top of the
// incident split phi0.
#pragma once

#include <complex>
#include <optional>

#include "nse/kinematics.hpp"

namespace nse {

struct TriangleRegion {
    double length = 0.0;   // L, m, base along the beam
    double theta = 0.0;    // rad, boundary inclination
    double b_eff = 0.0;    // T, effective field inside (signed)
    double y_extent = 0.0; // m, transverse half-height of the modeled region
};

// One plane wave: amplitude * exp(i(kx*x + ky*y + phase0)).
struct PlaneWaveComponent {
    double kx = 0.0;     // 1/m
    double ky = 0.0;     // 1/m
    double phase0 = 0.0; // rad, offset at the origin
    std::complex<double> amplitude;
};

struct ZonePair {
    PlaneWaveComponent up;
    PlaneWaveComponent down;
};

struct Spinor {
    std::complex<double> up;
    std::complex<double> down;
};

enum class Zone { before, inside, after };

class PiecewiseSpinorWave {
public:
    // The incident 1/sqrt(2) (e^{i phi0/2}, e^{-i phi0/2}) e^{ikx} state with
    // no field region; evaluates to the "before" zone everywhere.
    static PiecewiseSpinorWave incident(double k, double phi0);

    // The full three-zone solution from matching the incident wave at the
    // entry and exit boundary lines.  The refraction angle alpha follows from
    // region.b_eff; the construction is first order in alpha and refuses
    // |alpha| >= 1e-3 (model_error).
    static PiecewiseSpinorWave through_triangle(const NeutronBeam& beam,
                                                const TriangleRegion& region);

    // Zone selection; boundary points belong to the earlier zone.
    Zone zone_at(double x, double y) const;

    // Pointwise values.  The common propagation phase is factored out before
    // exponentiation so that up/down phase differences stay accurate even
    // where the absolute phase k*x is ~1e9 rad; see polarization_phase.
    // Throws domain_error when |y| exceeds the modeled extent.
    Spinor value_at(double x, double y) const;

    const ZonePair& zone(Zone z) const;
    double wavenumber() const { return k_; }
    double alpha() const { return alpha_; }
    double phase_split() const { return phi0_; }
    const std::optional<TriangleRegion>& region() const { return region_; }

private:
    PiecewiseSpinorWave() = default;

    double k_ = 0.0;
    double alpha_ = 0.0;
    double phi0_ = 0.0;
    std::optional<TriangleRegion> region_;
    ZonePair before_, inside_, after_;
    // Cached trig of alpha and tan(theta) shared by evaluation and residual.
    double tan_theta_ = 0.0;
    double sin_a_ = 0.0;
    double cos_a_m1_ = 0.0;  // cos(alpha) - 1, kept as the small quantity
    double sin_2a_ = 0.0;
    double cos_2a_m1_ = 0.0; // cos(2 alpha) - 1
};

PiecewiseSpinorWave incident_wave(double k, double phi0);
PiecewiseSpinorWave propagate_triangle(const NeutronBeam& beam, const TriangleRegion& region);
Spinor evaluate(const PiecewiseSpinorWave& wave, double x, double y);

// arg(up) - arg(down) in (-pi, pi].  Throws domain_error on a zero component.
double polarization_phase(const Spinor& spinor);

// Shifts phase by the multiple of 2 pi that lands it nearest to reference;
// use to track winding continuity along a path.
double unwrap_phase(double phase, double reference);

// Closed form of the rotation after the triangle:
//   phi = 2 k alpha (L tan(theta) - 2 y).
double triangle_rotation(double k, double alpha, double length, double theta, double y);

// Worst mismatch of the matched solutions on the two boundary lines, sampled
// at `samples` points each: the larger of the componentwise value deviation
// and the componentwise gradient deviation (normalized by k).  The matching
// is first order in alpha, so this measures the neglected O(alpha) direction
// error and O(alpha^2) value error rather than hiding them.
double boundary_residual(const PiecewiseSpinorWave& wave, int samples);

// True when the modeled transverse extent fits within the beam's transverse
// coherence length, i.e. the y-dependent (zero-field) part of the rotation
// averages out and only the y-independent part survives.
bool splitting_within_coherence(const TriangleRegion& region,
                                double coherence_length = 50e-9);

} // namespace nse
