#include <doctest.h>

#include <cmath>

#include "nse/constants.hpp"
#include "nse/em_transform.hpp"
#include "nse/errors.hpp"
#include "nse/kinematics.hpp"
#include "test_helpers.hpp"

using namespace nse;
namespace k = nse::constants;

TEST_CASE("capacitor charge and gap field")
{
    const CapacitorSpec spec{1000.0, 1e-3, 0.1, 0.1, 1.0};
    const CapacitorState state = capacitor_charge_and_field(spec);
    CHECK(rel_close(state.charge, 8.8541878128e-08, 1e-12));
    CHECK(rel_close(state.field, 1e6, 1e-15));

    // Dielectric filling scales the stored charge, not the gap field.
    CapacitorSpec filled = spec;
    filled.eps_r = 2.0;
    const CapacitorState state2 = capacitor_charge_and_field(filled);
    CHECK(rel_close(state2.charge, 2.0 * state.charge, 1e-15));
    CHECK(state2.field == state.field);

    CapacitorSpec thick = spec;
    thick.gap = 0.02; // violates gap < plate/10
    CHECK_THROWS_AS(capacitor_charge_and_field(thick), geometry_error);
    CapacitorSpec degenerate = spec;
    degenerate.plate_length = 0.0;
    CHECK_THROWS_AS(capacitor_charge_and_field(degenerate), geometry_error);
    CapacitorSpec bad_medium = spec;
    bad_medium.eps_r = 0.5;
    CHECK_THROWS_AS(capacitor_charge_and_field(bad_medium), material_error);
}

TEST_CASE("sliding surface charge forms a sheet current")
{
    CHECK(rel_close(surface_current(3e7, 1.0, 1582.0), 0.42021975359548797, 1e-12));
    CHECK(rel_close(surface_current(3e7, 2.0, 1582.0),
                    2.0 * surface_current(3e7, 1.0, 1582.0), 1e-15));
    CHECK(surface_current(0.0, 1.0, 1582.0) == 0.0);
    CHECK_THROWS_AS(surface_current(-1.0, 1.0, 1582.0), domain_error);
    CHECK_THROWS_AS(surface_current(3e7, 0.5, 1582.0), material_error);
}

TEST_CASE("motion-induced field in vacuum")
{
    const Vec3 E{0.0, 3e7, 0.0};
    const Vec3 v{1582.0, 0.0, 0.0};
    const Vec3 B = neutron_frame_field_vacuum(E, v);
    CHECK(B.x == 0.0);
    CHECK(B.y == 0.0);
    CHECK(rel_close(B.z, -5.2806371660304729e-07, 1e-12));

    CHECK(norm(neutron_frame_field_vacuum(E, Vec3{})) == 0.0);
    // Parallel velocity and field produce nothing.
    CHECK(norm(neutron_frame_field_vacuum(Vec3{3e7, 0, 0}, v)) == 0.0);
    CHECK_THROWS_AS(neutron_frame_field_vacuum(E, Vec3{1e7, 0, 0}), domain_error);
}

TEST_CASE("moving-medium closure is material independent")
{
    const Vec3 E{0.0, 3e7, 0.0};
    const double speed = 1582.4136048285854;
    const Vec3 v_neutron{speed, 0.0, 0.0};
    // In the neutron frame the medium moves backwards.
    const Vec3 u = -1.0 * v_neutron;
    const Vec3 b_ref = neutron_frame_field_vacuum(E, v_neutron);

    for (const double eps_r : {1.0, 3.8, 9.7}) {
        for (const double mu_r : {1.0, 2.0}) {
            const Vec3 h = eps_r * k::vacuum_permittivity * cross(u, E);
            const FrameFields fields = galilean_fields(E, h, u, eps_r, mu_r);
            CHECK(rel_close(fields.B.z, b_ref.z, 1e-12));
            CHECK(norm(fields.B - b_ref) <= 1e-12 * norm(b_ref));
            CHECK(rel_close(fields.D.y, eps_r * k::vacuum_permittivity * E.y, 1e-15));

            const MinkowskiResidual residual =
                minkowski_residual(fields, u, eps_r, mu_r);
            CHECK(norm(residual.electric) <= 1e-12 * norm(fields.D));
            CHECK(norm(residual.magnetic) <= 1e-12 * norm(fields.B));
        }
    }

    CHECK_THROWS_AS(galilean_fields(E, Vec3{}, u, 0.5, 1.0), material_error);
    CHECK_THROWS_AS(galilean_fields(E, Vec3{}, u, 1.0, 0.0), material_error);
    CHECK_THROWS_AS(galilean_fields(E, Vec3{}, Vec3{1e7, 0, 0}, 1.0, 1.0),
                    domain_error);
}

TEST_CASE("exact boost reduces to the low-velocity field")
{
    const LabFields lab{Vec3{0.0, 3e7, 0.0}, Vec3{}};
    const Vec3 v{1582.4136048285854, 0.0, 0.0};

    // v = 0 is the identity, bit for bit.
    const LabFields same = lorentz_boost_fields(lab, Vec3{});
    CHECK(same.E.y == lab.E.y);
    CHECK(norm(same.B) == 0.0);

    const LabFields boosted = lorentz_boost_fields(lab, v);
    const Vec3 expected = neutron_frame_field_vacuum(lab.E, v);
    // Agreement up to the (v/c)^2 ~ 2.8e-11 relativistic correction.
    CHECK(norm(boosted.B - expected) <= 1e-9 * norm(expected));
    CHECK(norm(boosted.B - expected) > 0.0);

    // A field along the boost axis is untouched.
    const LabFields axial{Vec3{5.0, 0.0, 0.0}, Vec3{7e-6, 0.0, 0.0}};
    const LabFields still = lorentz_boost_fields(axial, v);
    CHECK(rel_close(still.E.x, 5.0, 1e-15));
    CHECK(rel_close(still.B.x, 7e-6, 1e-15));

    CHECK_THROWS_AS(lorentz_boost_fields(lab, Vec3{3e8, 0, 0}), domain_error);
}

TEST_CASE("three routes agree on the induced field")
{
    const Vec3 E{0.0, 3e7, 0.0};
    const Vec3 v{1582.4136048285854, 0.0, 0.0};

    const ConsistencyReport report = transform_consistency_report(E, v, 1.0, 1.0);
    CHECK(rel_close(report.b_galilean.z, -5.2820177583376022e-07, 1e-12));
    CHECK(report.dev_capacitor_galilean <= 1e-13);
    CHECK(report.dev_lorentz_galilean <= 1e-10);
    CHECK(report.max_deviation ==
          std::max(report.dev_capacitor_galilean, report.dev_lorentz_galilean));

    for (const double eps_r : {1.0, 2.0, 3.8, 8.5, 9.7}) {
        for (const double mu_r : {1.0, 2.0}) {
            const ConsistencyReport r = transform_consistency_report(E, v, eps_r, mu_r);
            CHECK(r.dev_capacitor_galilean <= 1e-12);
            CHECK(r.dev_lorentz_galilean <= 1e-9);
            CHECK(norm(r.b_capacitor - report.b_galilean)
                  <= 1e-11 * norm(report.b_galilean));
        }
    }

    // E parallel to v induces nothing, and the deviations stay defined.
    const ConsistencyReport axial =
        transform_consistency_report(Vec3{3e7, 0, 0}, v, 1.0, 1.0);
    CHECK(norm(axial.b_galilean) == 0.0);
    CHECK(axial.max_deviation == 0.0);
}
