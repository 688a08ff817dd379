#include "nse/spinor_wave.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nse/constants.hpp"
#include "nse/errors.hpp"
#include "nse/precession.hpp"

namespace nse {

namespace {

constexpr double alpha_model_limit = 1e-3;
constexpr double inv_sqrt2 = 0.70710678118654752440;

void check_region(const TriangleRegion& region)
{
    if (!(region.length > 0.0) || !std::isfinite(region.length))
        throw geometry_error("triangle region length must be positive");
    checked_cot(region.theta); // rejects theta outside (0, pi/2) with margin
    if (!(region.y_extent > 0.0) || !std::isfinite(region.y_extent))
        throw geometry_error("triangle region transverse extent must be positive");
    if (!std::isfinite(region.b_eff))
        throw domain_error("triangle region field must be finite");
}

} // namespace

PiecewiseSpinorWave PiecewiseSpinorWave::incident(double k, double phi0)
{
    if (!(k > 0.0) || !std::isfinite(k))
        throw domain_error("wavenumber must be positive and finite");
    if (!std::isfinite(phi0))
        throw domain_error("incident phase split must be finite");

    PiecewiseSpinorWave wave;
    wave.k_ = k;
    wave.phi0_ = phi0;
    wave.before_.up = {k, 0.0, +0.5 * phi0, inv_sqrt2};
    wave.before_.down = {k, 0.0, -0.5 * phi0, inv_sqrt2};
    wave.inside_ = wave.before_;
    wave.after_ = wave.before_;
    return wave;
}

PiecewiseSpinorWave PiecewiseSpinorWave::through_triangle(const NeutronBeam& beam,
                                                          const TriangleRegion& region)
{
    check_region(region);

    const double k = beam.wavenumber();
    const double mag = std::abs(region.b_eff);
    double alpha = 0.0;
    if (mag > 0.0) {
        alpha = refraction_angle_from_B(mag, k, region.theta);
        if (region.b_eff < 0.0)
            alpha = -alpha; // reversed field swaps the refracted spin states
    }
    if (std::abs(alpha) >= alpha_model_limit)
        throw model_error("refraction angle exceeds the first-order propagation model");

    PiecewiseSpinorWave wave = incident(k, beam.phase_split());
    wave.region_ = region;
    wave.alpha_ = alpha;

    const double t = std::tan(region.theta);
    const double half = std::sin(0.5 * alpha);
    wave.tan_theta_ = t;
    wave.sin_a_ = std::sin(alpha);
    wave.cos_a_m1_ = -2.0 * half * half;
    wave.sin_2a_ = std::sin(2.0 * alpha);
    wave.cos_2a_m1_ = -2.0 * wave.sin_a_ * wave.sin_a_;

    const double phi0 = wave.phi0_;
    const double at = alpha * t;
    const double cos_a = wave.cos_a_m1_ + 1.0;
    const double cos_2a = wave.cos_2a_m1_ + 1.0;
    const double L = region.length;

    wave.inside_.up = {k * (1.0 + at) * cos_a, -k * (1.0 + at) * wave.sin_a_,
                       +0.5 * phi0, inv_sqrt2};
    wave.inside_.down = {k * (1.0 - at) * cos_a, +k * (1.0 - at) * wave.sin_a_,
                         -0.5 * phi0, inv_sqrt2};

    // Exit-zone offsets written as k L (alpha tan(theta) + 2 sin^2 alpha)
    // so the large k L pieces cancel analytically instead of numerically.
    const double exit_shift = k * L * (at - wave.cos_2a_m1_);
    const double exit_shift_down = k * L * (-at - wave.cos_2a_m1_);
    wave.after_.up = {k * cos_2a, -k * wave.sin_2a_, exit_shift + 0.5 * phi0, inv_sqrt2};
    wave.after_.down = {k * cos_2a, +k * wave.sin_2a_, exit_shift_down - 0.5 * phi0,
                        inv_sqrt2};
    return wave;
}

Zone PiecewiseSpinorWave::zone_at(double x, double y) const
{
    if (!std::isfinite(x) || !std::isfinite(y))
        throw domain_error("evaluation point must be finite");
    if (!region_)
        return Zone::before;
    const double t = tan_theta_;
    if (y - x * t >= 0.0)
        return Zone::before;
    if (y - (region_->length - x) * t <= 0.0)
        return Zone::inside;
    return Zone::after;
}

Spinor PiecewiseSpinorWave::value_at(double x, double y) const
{
    Zone z = zone_at(x, y);
    if (region_ && std::abs(y) > region_->y_extent)
        throw domain_error("evaluation point outside the modeled transverse extent");
    // With no deflection every zone formula collapses to the incident wave;
    // route through the incident branch so the phase is k*x to the last bit
    // instead of the reassociated k*((x-L)+L).
    if (alpha_ == 0.0)
        z = Zone::before;

    // Factor the value as exp(i big) * exp(i small): `big` is the common
    // propagation phase (can be ~1e9 rad), `small` the per-component
    // remainder, so the up/down phase difference never touches the large
    // cancellation.
    double big = 0.0;
    double small_up = 0.0;
    double small_down = 0.0;
    const double half = 0.5 * phi0_;

    switch (z) {
    case Zone::before:
        big = k_ * x;
        small_up = +half;
        small_down = -half;
        break;
    case Zone::inside: {
        const double at = alpha_ * tan_theta_;
        big = k_ * x;
        small_up = k_ * x * ((1.0 + at) * cos_a_m1_ + at)
                   - k_ * (1.0 + at) * sin_a_ * y + half;
        small_down = k_ * x * ((1.0 - at) * cos_a_m1_ - at)
                     + k_ * (1.0 - at) * sin_a_ * y - half;
        break;
    }
    case Zone::after: {
        const double at = alpha_ * tan_theta_;
        const double L = region_->length;
        big = k_ * (cos_2a_m1_ + 1.0) * (x - L) + k_ * L;
        small_up = k_ * L * at - k_ * sin_2a_ * y + half;
        small_down = -k_ * L * at + k_ * sin_2a_ * y - half;
        break;
    }
    }

    const std::complex<double> common = std::polar(inv_sqrt2, big);
    return {common * std::polar(1.0, small_up), common * std::polar(1.0, small_down)};
}

const ZonePair& PiecewiseSpinorWave::zone(Zone z) const
{
    switch (z) {
    case Zone::before: return before_;
    case Zone::inside: return inside_;
    case Zone::after: return after_;
    }
    throw domain_error("unknown zone");
}

PiecewiseSpinorWave incident_wave(double k, double phi0)
{
    return PiecewiseSpinorWave::incident(k, phi0);
}

PiecewiseSpinorWave propagate_triangle(const NeutronBeam& beam, const TriangleRegion& region)
{
    return PiecewiseSpinorWave::through_triangle(beam, region);
}

Spinor evaluate(const PiecewiseSpinorWave& wave, double x, double y)
{
    return wave.value_at(x, y);
}

double polarization_phase(const Spinor& spinor)
{
    if (std::abs(spinor.up) == 0.0 || std::abs(spinor.down) == 0.0)
        throw domain_error("polarization phase is undefined for a zero spin component");
    return std::arg(spinor.up * std::conj(spinor.down));
}

double unwrap_phase(double phase, double reference)
{
    constexpr double two_pi = 2.0 * constants::pi;
    return phase + two_pi * std::round((reference - phase) / two_pi);
}

double triangle_rotation(double k, double alpha, double length, double theta, double y)
{
    if (!(k > 0.0) || !std::isfinite(k))
        throw domain_error("wavenumber must be positive and finite");
    if (!(length >= 0.0) || !std::isfinite(length))
        throw geometry_error("region length must be non-negative");
    if (!std::isfinite(alpha) || !std::isfinite(y))
        throw domain_error("rotation arguments must be finite");
    const double tan_theta = 1.0 / checked_cot(theta);
    return 2.0 * k * alpha * (length * tan_theta - 2.0 * y);
}

double boundary_residual(const PiecewiseSpinorWave& wave, int samples)
{
    if (samples < 2)
        throw domain_error("boundary residual needs at least two sample points");
    if (!wave.region() || wave.alpha() == 0.0)
        return 0.0;

    const TriangleRegion& region = *wave.region();
    const double k = wave.wavenumber();
    const double alpha = wave.alpha();
    const double L = region.length;
    const double t = std::tan(region.theta);
    const double at = alpha * t;
    const double sa = std::sin(alpha);
    const double half = std::sin(0.5 * alpha);
    const double c1 = -2.0 * half * half;          // cos(alpha) - 1
    const double s2 = std::sin(2.0 * alpha);
    const double c2 = -2.0 * sa * sa;              // cos(2 alpha) - 1

    // The phase mismatches below are the exact differences of the two matched
    // zone phases on each boundary line, but algebraically regrouped so each
    // bracket is a sum of O(alpha)-small terms: evaluating the zone phases
    // separately and subtracting would lose the residual (~alpha^2 * k * L)
    // under the ~1e9 rad absolute phase.
    const double x_lim = std::min(0.5 * L, region.y_extent / t);

    // Gradient mismatches (independent of position along the line), already
    // divided by k.  Entry line: inside minus before.
    const double entry_up_gx = (1.0 + at) * c1 + at;
    const double entry_up_gy = -(1.0 + at) * sa;
    const double entry_dn_gx = (1.0 - at) * c1 - at;
    const double entry_dn_gy = (1.0 - at) * sa;
    // Exit line: after minus inside.
    const double exit_up_gx = (c2 - c1) - at * (1.0 + c1);
    const double exit_up_gy = (sa - s2) + at * sa;
    const double exit_dn_gx = (c2 - c1) + at * (1.0 + c1);
    const double exit_dn_gy = (s2 - sa) + at * sa;

    double worst = std::max({std::hypot(entry_up_gx, entry_up_gy),
                             std::hypot(entry_dn_gx, entry_dn_gy),
                             std::hypot(exit_up_gx, exit_up_gy),
                             std::hypot(exit_dn_gx, exit_dn_gy)});

    const auto value_mismatch = [](double dphi) {
        return 2.0 * std::abs(std::sin(0.5 * dphi));
    };

    for (int i = 0; i < samples; ++i) {
        const double s = (samples == 1) ? 0.0
                                        : -1.0 + 2.0 * static_cast<double>(i)
                                                     / static_cast<double>(samples - 1);
        // Entry line y = x tan(theta), sampled around the apex at the origin.
        const double x = s * x_lim;
        const double entry_up = k * x * ((1.0 + at) * (c1 - t * sa) + at);
        const double entry_dn = k * x * ((1.0 - at) * (c1 + t * sa) - at);
        // Exit line y = (L - x) tan(theta); u = L - x sampled around u = 0.
        const double u = s * x_lim;
        const double exit_up =
            k * (u * (-c2 + t * (alpha + sa - s2) + at * t * sa)
                 + (1.0 + at) * c1 * (u - L));
        const double exit_dn =
            k * (u * (-c2 + t * (s2 - alpha - sa) + at * t * sa)
                 + (1.0 - at) * c1 * (u - L));

        worst = std::max({worst, value_mismatch(entry_up), value_mismatch(entry_dn),
                          value_mismatch(exit_up), value_mismatch(exit_dn)});
    }
    return worst;
}

bool splitting_within_coherence(const TriangleRegion& region, double coherence_length)
{
    check_region(region);
    if (!(coherence_length > 0.0) || !std::isfinite(coherence_length))
        throw domain_error("coherence length must be positive");
    return 2.0 * region.y_extent <= coherence_length;
}

} // namespace nse
