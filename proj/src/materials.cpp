#include "nse/materials.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "nse/constants.hpp"
#include "nse/errors.hpp"
#include "nse/kinematics.hpp"
#include "nse/precession.hpp"

namespace nse {

namespace {

constexpr char kHeader[] = "name,E_b_MV_per_m,eps_r,mu_r";

std::string strip(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& token, const std::string& where) {
    const std::string t = strip(token);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw parse_error(where, "not a number: '" + token + "'");
    }
    return value;
}

void validate_material(const Material& m, const std::string& where) {
    if (m.name.empty()) {
        throw parse_error(where, "material name must not be empty");
    }
    if (!std::isfinite(m.breakdown_field) || m.breakdown_field <= 0.0) {
        throw parse_error(where, "breakdown field must be positive, got " +
                                     std::to_string(m.breakdown_field / 1e6) + " MV/m");
    }
    if (!std::isfinite(m.eps_r) || m.eps_r < 1.0) {
        throw parse_error(where, "eps_r must be >= 1, got " + std::to_string(m.eps_r));
    }
    if (!std::isfinite(m.mu_r) || m.mu_r <= 0.0) {
        throw parse_error(where, "mu_r must be > 0, got " + std::to_string(m.mu_r));
    }
}

} // namespace

const std::vector<Material>& builtin_materials() {
    static const std::vector<Material> table = {
        {"Air", 3e6, 1.0, 1.0},
        {"Vacuum", 30e6, 1.0, 1.0},
        {"Fused Quartz", 25e6, 3.8, 1.0},
        {"Silicon", 60e6, 8.5, 1.0},
        {"AlN", 120e6, 8.5, 1.0},
        {"Teflon", 170e6, 2.0, 1.0},
        {"SiC", 300e6, 9.7, 1.0},
    };
    return table;
}

std::vector<Material> load_materials(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open material file '" + path + "'");
    }
    std::vector<Material> result;
    std::set<std::string> seen;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = path + ":" + std::to_string(line_no);
        const std::string text = strip(line);
        if (text.empty() || text[0] == '#') continue;
        if (!header_seen) {
            if (text != kHeader) {
                throw parse_error(where, std::string("expected header '") + kHeader +
                                             "', got '" + text + "'");
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(text);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 4) {
            throw parse_error(where, "expected 4 comma-separated fields, got " +
                                         std::to_string(fields.size()));
        }
        Material m;
        m.name = strip(fields[0]);
        m.breakdown_field = parse_number(fields[1], where) * 1e6; // MV/m -> V/m
        m.eps_r = parse_number(fields[2], where);
        m.mu_r = parse_number(fields[3], where);
        validate_material(m, where);
        if (!seen.insert(m.name).second) {
            throw parse_error(where, "duplicate material name '" + m.name + "'");
        }
        result.push_back(std::move(m));
    }
    if (!header_seen) {
        throw parse_error(path, std::string("missing header '") + kHeader + "'");
    }
    return result;
}

Table1Row derived_row(const Material& material, double wavelength,
                      double phi_target, double theta) {
    validate_material(material, "material '" + material.name + "'");
    if (!std::isfinite(phi_target) || phi_target <= 0.0) {
        throw domain_error("phi_target must be positive, got " + std::to_string(phi_target));
    }
    Table1Row row;
    row.material = material;
    row.wavelength = wavelength;
    row.phi_target = phi_target;
    row.theta = theta;
    const double v = neutron_velocity(wavelength);
    const double k = neutron_wavenumber(wavelength);
    row.b_eff = material.breakdown_field * v / constants::c_squared;
    row.l_min = phi_target * constants::c_squared /
                (constants::gamma_larmor * material.breakdown_field);
    row.alpha = refraction_angle_from_B(row.b_eff, k, theta);
    return row;
}

} // namespace nse
