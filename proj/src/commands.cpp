#include "nse/commands.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "nse/constants.hpp"
#include "nse/em_transform.hpp"
#include "nse/errors.hpp"
#include "nse/kinematics.hpp"
#include "nse/materials.hpp"
#include "nse/precession.hpp"
#include "nse/spinecho.hpp"
#include "nse/spinor_wave.hpp"
#include "nse/vec3.hpp"

namespace nse {

namespace {

std::string format(const char* spec, double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, spec, value);
    return buffer;
}

// Full precision: every digit needed to reproduce the double exactly.
std::string full(double value)
{
    return format("%.16e", value);
}

// Default CSV precision: 6 significant digits, scientific.
std::string sci(double value, bool raw)
{
    return raw ? full(value) : format("%.5e", value);
}

// Human Table-1 view: two significant digits in plain fixed notation.
std::string sig2(double value)
{
    if (value == 0.0)
        return "0.0";
    int decimals = 1 - static_cast<int>(std::floor(std::log10(std::abs(value))));
    if (decimals < 0)
        decimals = 0;
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

// Identity columns echoing the material database: shortest round representation.
std::string echoed(double value, bool raw)
{
    return raw ? full(value) : format("%g", value);
}

double gamma_scale(const RunConfig& cfg)
{
    return cfg.gamma == GammaConvention::half ? 0.5 : 1.0;
}

void run_table1(const RunConfig& cfg, std::ostream& out)
{
    const std::vector<Material> materials = cfg.materials_file.empty()
                                                ? builtin_materials()
                                                : load_materials(cfg.materials_file);
    const double scale = gamma_scale(cfg);
    out << "name,E_b_MV_per_m,eps_r,B_eff_uT,L_min_m,alpha_picorad\n";
    for (const Material& material : materials) {
        const Table1Row row =
            derived_row(material, cfg.wavelength, cfg.phi_target, cfg.theta);
        const double l_min = row.l_min / scale; // halved rate doubles the length
        out << material.name << ',' << echoed(material.breakdown_field / 1e6, cfg.raw)
            << ',' << echoed(material.eps_r, cfg.raw) << ',';
        if (cfg.raw)
            out << full(row.b_eff * 1e6) << ',' << full(l_min) << ','
                << full(row.alpha * 1e12);
        else
            out << sig2(row.b_eff * 1e6) << ',' << sig2(l_min) << ','
                << sig2(row.alpha * 1e12);
        out << '\n';
    }
}

void run_transform(const RunConfig& cfg, std::ostream& out)
{
    const NeutronBeam beam(cfg.wavelength, cfg.phase_split);
    const Vec3 efield{0.0, cfg.efield, 0.0};
    const Vec3 velocity{beam.speed(), 0.0, 0.0};
    const ConsistencyReport report =
        transform_consistency_report(efield, velocity, cfg.eps_r, cfg.mu_r);
    out << "E_V_per_m,v_m_per_s,eps_r,mu_r,B_capacitor_T,B_galilean_T,B_lorentz_T,"
           "dev_capacitor_galilean,dev_lorentz_galilean\n";
    out << sci(cfg.efield, cfg.raw) << ',' << sci(beam.speed(), cfg.raw) << ','
        << echoed(cfg.eps_r, cfg.raw) << ',' << echoed(cfg.mu_r, cfg.raw) << ','
        << sci(norm(report.b_capacitor), cfg.raw) << ','
        << sci(norm(report.b_galilean), cfg.raw) << ','
        << sci(norm(report.b_lorentz), cfg.raw) << ','
        << sci(report.dev_capacitor_galilean, cfg.raw) << ','
        << sci(report.dev_lorentz_galilean, cfg.raw) << '\n';
}

void run_phase(const RunConfig& cfg, std::ostream& out)
{
    const double scale = gamma_scale(cfg);
    const double rate = schwinger_rate() * scale;  // rad per volt of E·L
    const double rate_urad_per_kv = rate * 1e9;    // to microradians per kilovolt
    const double phi = schwinger_phase(cfg.efield, cfg.length) * scale;
    out << "E_V_per_m,L_m,rate_urad_per_kV,phi_S_rad\n";
    out << sci(cfg.efield, cfg.raw) << ',' << sci(cfg.length, cfg.raw) << ','
        << sci(rate_urad_per_kv, cfg.raw) << ',' << sci(phi, cfg.raw) << '\n';
}

void run_wave(const RunConfig& cfg, std::ostream& out)
{
    const NeutronBeam beam(cfg.wavelength, cfg.phase_split);
    const TriangleRegion region{cfg.length, cfg.theta, cfg.b_eff, cfg.y_extent};
    const PiecewiseSpinorWave wave = propagate_triangle(beam, region);

    out << "x_m,y_m,re_up,im_up,re_dn,im_dn,phase_rad\n";
    const double x_lo = -0.5 * cfg.length;
    const double x_hi = 1.5 * cfg.length;
    for (int ix = 0; ix < cfg.nx; ++ix) {
        const double x = x_lo + (x_hi - x_lo) * ix / (cfg.nx - 1);
        for (int iy = 0; iy < cfg.ny; ++iy) {
            const double y =
                -cfg.y_extent + 2.0 * cfg.y_extent * iy / (cfg.ny - 1);
            const Spinor psi = evaluate(wave, x, y);
            out << full(x) << ',' << full(y) << ',' << full(psi.up.real()) << ','
                << full(psi.up.imag()) << ',' << full(psi.down.real()) << ','
                << full(psi.down.imag()) << ',' << full(polarization_phase(psi))
                << '\n';
        }
    }
}

void run_scan(const RunConfig& cfg, std::ostream& out)
{
    const double scale = gamma_scale(cfg);
    const bool sweep_field = cfg.scan_param == "E";
    out << (sweep_field ? "E_V_per_m" : "L_m") << ",phi_S_rad\n";
    for (int i = 0; i < cfg.scan_count; ++i) {
        const double value = cfg.scan_from
                             + (cfg.scan_to - cfg.scan_from) * i / (cfg.scan_count - 1);
        const double phi = (sweep_field ? schwinger_phase(value, cfg.length)
                                        : schwinger_phase(cfg.efield, value))
                           * scale;
        out << sci(value, cfg.raw) << ',' << sci(phi, cfg.raw) << '\n';
    }
}

void run_assess(const RunConfig& cfg, std::ostream& out)
{
    const NeutronBeam beam(cfg.wavelength, cfg.phase_split);
    const TriangleRegion region{cfg.length, cfg.theta, cfg.b_eff, cfg.y_extent};
    const SpinEchoArm arm{cfg.arm_field, cfg.arm_length, cfg.theta0, cfg.orientation};
    const EnhancementReport report =
        enhancement_assessment(beam, region, arm, cfg.diagnostics);

    out << "alpha_rad,delta_m,phi_direct_rad,phi_enhanced_rad,ratio,dominant,"
           "rotator_required";
    if (report.diagnostics)
        out << ",zero_field_phase_rad,arm_boundary_alpha_rad";
    out << ",orientation_note\n";
    out << sci(report.alpha, cfg.raw) << ',' << sci(report.delta, cfg.raw) << ','
        << sci(report.phi_direct, cfg.raw) << ',' << sci(report.phi_enhanced, cfg.raw)
        << ',' << sci(report.ratio, cfg.raw) << ',' << report.dominant << ','
        << (report.rotator_required ? "true" : "false");
    if (report.diagnostics)
        out << ',' << sci(report.diagnostics->zero_field_phase, cfg.raw) << ','
            << sci(report.diagnostics->arm_boundary_alpha, cfg.raw);
    out << ',' << report.orientation_note << '\n';
}

} // namespace

int run(const RunConfig& config, std::ostream& out)
{
    switch (config.command) {
    case Command::table1: run_table1(config, out); break;
    case Command::transform: run_transform(config, out); break;
    case Command::phase: run_phase(config, out); break;
    case Command::wave: run_wave(config, out); break;
    case Command::scan: run_scan(config, out); break;
    case Command::assess: run_assess(config, out); break;
    }
    if (!out)
        throw io_error("failed while writing command output");
    return 0;
}

} // namespace nse
