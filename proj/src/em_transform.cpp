#include "nse/em_transform.hpp"

#include <cmath>
#include <string>

#include "nse/constants.hpp"
#include "nse/errors.hpp"

namespace nse {

namespace {

using constants::c_squared;
using constants::speed_of_light;
using constants::vacuum_permeability;
using constants::vacuum_permittivity;

void check_material(double eps_r, double mu_r) {
    if (!std::isfinite(eps_r) || eps_r < 1.0) {
        throw material_error("eps_r must be >= 1, got " + std::to_string(eps_r));
    }
    if (!std::isfinite(mu_r) || mu_r <= 0.0) {
        throw material_error("mu_r must be > 0, got " + std::to_string(mu_r));
    }
}

void check_slow(const Vec3& v) {
    if (norm(v) >= speed_of_light / 100.0) {
        throw domain_error("speed " + std::to_string(norm(v)) +
                           " m/s is outside the low-velocity regime (v < c/100)");
    }
}

double relative_deviation(const Vec3& a, const Vec3& b) {
    const double scale = std::max(norm(a), norm(b));
    if (scale == 0.0) return 0.0;
    return norm(a - b) / scale;
}

} // namespace

CapacitorState capacitor_charge_and_field(const CapacitorSpec& spec) {
    if (!std::isfinite(spec.voltage)) {
        throw domain_error("capacitor voltage must be finite");
    }
    if (spec.gap <= 0.0 || spec.plate_length <= 0.0 || spec.plate_width <= 0.0 ||
        !std::isfinite(spec.gap) || !std::isfinite(spec.plate_length) ||
        !std::isfinite(spec.plate_width)) {
        throw geometry_error("capacitor dimensions must be positive and finite");
    }
    if (spec.gap >= spec.plate_length / 10.0 || spec.gap >= spec.plate_width / 10.0) {
        throw geometry_error(
            "gap " + std::to_string(spec.gap) +
            " m is too wide for the thin-gap approximation (needs gap < min(length, width)/10)");
    }
    if (!std::isfinite(spec.eps_r) || spec.eps_r < 1.0) {
        throw material_error("eps_r must be >= 1, got " + std::to_string(spec.eps_r));
    }
    const double area = spec.plate_length * spec.plate_width;
    const double capacitance = spec.eps_r * vacuum_permittivity * area / spec.gap;
    return {capacitance * spec.voltage, spec.voltage / spec.gap};
}

double surface_current(double field, double eps_r, double speed) {
    if (field < 0.0 || speed < 0.0 || !std::isfinite(field) ||
        !std::isfinite(speed)) {
        throw domain_error("surface_current inputs must be non-negative and finite");
    }
    if (!(eps_r >= 1.0) || !std::isfinite(eps_r))
        throw material_error("relative permittivity must be >= 1");
    return eps_r * vacuum_permittivity * field * speed;
}

Vec3 neutron_frame_field_vacuum(const Vec3& E, const Vec3& v) {
    check_slow(v);
    return cross(v, E) / -c_squared;
}

FrameFields galilean_fields(const Vec3& E, const Vec3& H, const Vec3& v_medium,
                            double eps_r, double mu_r) {
    check_material(eps_r, mu_r);
    check_slow(v_medium);
    FrameFields out;
    out.E = E;
    out.H = H;
    out.D = eps_r * vacuum_permittivity * E;
    out.B = mu_r * vacuum_permeability * H -
            (mu_r * eps_r - 1.0) * cross(v_medium, E) / c_squared;
    return out;
}

LabFields lorentz_boost_fields(const LabFields& lab, const Vec3& v) {
    const double v2 = dot(v, v);
    if (v2 == 0.0) {
        return lab;
    }
    const double beta2 = v2 / c_squared;
    if (beta2 >= 1.0) {
        throw domain_error("boost speed must be below c");
    }
    const double gamma = 1.0 / std::sqrt(1.0 - beta2);
    LabFields out;
    out.E = gamma * (lab.E + cross(v, lab.B)) + (1.0 - gamma) * (dot(v, lab.E) / v2) * v;
    out.B = gamma * (lab.B - cross(v, lab.E) / c_squared) +
            (1.0 - gamma) * (dot(v, lab.B) / v2) * v;
    return out;
}

MinkowskiResidual minkowski_residual(const FrameFields& fields, const Vec3& v_medium,
                                     double eps_r, double mu_r) {
    check_material(eps_r, mu_r);
    MinkowskiResidual r;
    r.electric = (fields.D + cross(v_medium, fields.H) / c_squared) -
                 eps_r * vacuum_permittivity * (fields.E + cross(v_medium, fields.B));
    r.magnetic = (fields.B - cross(v_medium, fields.E) / c_squared) -
                 mu_r * vacuum_permeability * (fields.H - cross(v_medium, fields.D));
    return r;
}

ConsistencyReport transform_consistency_report(const Vec3& E, const Vec3& v,
                                               double eps_r, double mu_r) {
    check_material(eps_r, mu_r);
    check_slow(v);
    ConsistencyReport report;

    // In the neutron's rest frame the capacitor and its filling move at -v.
    const Vec3 u = -v;

    // Route 1: a virtual thin capacitor producing this field.  Going through
    // the charge bookkeeping keeps the route independent of route 2's direct
    // constitutive evaluation even though the algebra cancels the same way.
    const double e_mag = norm(E);
    Vec3 h_cap{};
    if (e_mag > 0.0) {
        const double gap = 1e-3;
        const CapacitorSpec spec{e_mag * gap, gap, 0.1, 0.1, eps_r};
        const CapacitorState state = capacitor_charge_and_field(spec);
        const double sigma = state.charge / (spec.plate_length * spec.plate_width);
        // The sliding surface charge is a sheet current sigma * u_tangential;
        // between the sheets it produces H = sigma * (u x E)/|E|.  The
        // component of u along E moves charge across the gap and makes no
        // sheet current, which the cross product drops automatically.
        h_cap = sigma * cross(u, E / e_mag);
    }
    report.b_capacitor = mu_r * vacuum_permeability * h_cap -
                         (mu_r * eps_r - 1.0) * cross(u, E) / c_squared;

    // Route 2: constitutive closure fed with the sheet-current H.
    const Vec3 h_direct = eps_r * vacuum_permittivity * cross(u, E);
    report.b_galilean = galilean_fields(E, h_direct, u, eps_r, mu_r).B;

    // Route 3: exact boost of the static lab field into the neutron frame.
    // No medium appears; it still must agree to order (v/c)^2 because the
    // medium dependence cancels in the first two routes.
    report.b_lorentz = lorentz_boost_fields({E, Vec3{}}, v).B;

    report.dev_capacitor_galilean = relative_deviation(report.b_capacitor, report.b_galilean);
    report.dev_lorentz_galilean = relative_deviation(report.b_lorentz, report.b_galilean);
    report.max_deviation = std::max(report.dev_capacitor_galilean, report.dev_lorentz_galilean);
    return report;
}

} // namespace nse
