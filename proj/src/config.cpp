#include "nse/config.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <string_view>

#include "nse/constants.hpp"
#include "nse/errors.hpp"
#include "nse/materials.hpp"
#include "nse/precession.hpp"
#include "nse/units.hpp"

namespace nse {

namespace {

constexpr std::array<std::string_view, 26> known_keys{
    "lambda", "phi0",     "theta",          "phi_target", "E",
    "L",      "B",        "y_extent",       "eps_r",      "mu_r",
    "material", "materials_file", "nx",     "ny",         "arm_B",
    "arm_L",  "theta0",   "orientation",    "diagnostics", "param",
    "from",   "to",       "count",          "out",        "raw",
    "gamma",
};

bool is_known_key(std::string_view key)
{
    for (const std::string_view known : known_keys)
        if (known == key)
            return true;
    return false;
}

std::string trim(const std::string& text)
{
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
        ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    return text.substr(begin, end - begin);
}

} // namespace

Command command_from_name(const std::string& name)
{
    if (name == "table1") return Command::table1;
    if (name == "transform") return Command::transform;
    if (name == "phase") return Command::phase;
    if (name == "wave") return Command::wave;
    if (name == "scan") return Command::scan;
    if (name == "assess") return Command::assess;
    throw config_error("unknown command '" + name + "'");
}

std::string to_string(Command command)
{
    switch (command) {
    case Command::table1: return "table1";
    case Command::transform: return "transform";
    case Command::phase: return "phase";
    case Command::wave: return "wave";
    case Command::scan: return "scan";
    case Command::assess: return "assess";
    }
    return "?";
}

void load_config_file(const std::string& path, EntryMap& into)
{
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open config file: " + path);

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string location = path + ":" + std::to_string(lineno);
        if (const std::size_t hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty())
            continue;
        if (stripped.front() == '[') {
            if (stripped.back() != ']' || stripped.size() < 3)
                throw parse_error(location, "malformed section header");
            continue; // sections are cosmetic grouping; keys are global
        }
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw parse_error(location, "expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw parse_error(location, "missing key before '='");
        if (!is_known_key(key))
            throw parse_error(location, "unknown key '" + key + "'");
        into[key] = ConfigEntry{value, location};
    }
}

RunConfig build_config(Command command, const EntryMap& entries)
{
    RunConfig cfg;
    cfg.command = command;
    cfg.theta = constants::pi / 4.0;
    cfg.theta0 = constants::pi / 4.0;
    switch (command) {
    case Command::phase:
    case Command::scan:
        cfg.length = 1.6;
        break;
    case Command::wave:
        cfg.length = 0.1;
        cfg.b_eff = 0.53e-6;
        break;
    case Command::assess:
        cfg.length = 0.01;
        cfg.b_eff = 0.53e-6;
        break;
    default:
        break;
    }

    const auto find = [&entries](std::string_view key) -> const ConfigEntry* {
        const auto it = entries.find(std::string(key));
        return it == entries.end() ? nullptr : &it->second;
    };
    const auto where = [&find](std::string_view key) -> std::string {
        const ConfigEntry* entry = find(key);
        return entry ? entry->origin : std::string("default");
    };
    const auto fail = [&where](std::string_view key, const std::string& why) -> void {
        throw config_error(std::string(key) + " (" + where(key) + "): " + why);
    };
    const auto number = [&](std::string_view key, Quantity quantity, double& target) {
        if (const ConfigEntry* entry = find(key)) {
            try {
                target = parse_quantity(entry->value, quantity);
            } catch (const config_error& err) {
                fail(key, err.what());
            }
        }
    };
    const auto integer = [&](std::string_view key, int& target) {
        if (const ConfigEntry* entry = find(key)) {
            try {
                target = static_cast<int>(parse_integer(entry->value));
            } catch (const config_error& err) {
                fail(key, err.what());
            }
        }
    };
    const auto boolean = [&](std::string_view key, bool& target) {
        if (const ConfigEntry* entry = find(key)) {
            try {
                target = parse_bool(entry->value);
            } catch (const config_error& err) {
                fail(key, err.what());
            }
        }
    };
    const auto text = [&](std::string_view key, std::string& target) {
        if (const ConfigEntry* entry = find(key))
            target = entry->value;
    };

    number("lambda", Quantity::length, cfg.wavelength);
    number("phi0", Quantity::angle, cfg.phase_split);
    number("theta", Quantity::angle, cfg.theta);
    number("phi_target", Quantity::angle, cfg.phi_target);
    number("E", Quantity::electric_field, cfg.efield);
    number("L", Quantity::length, cfg.length);
    number("B", Quantity::magnetic_field, cfg.b_eff);
    number("y_extent", Quantity::length, cfg.y_extent);
    text("material", cfg.material);
    if (!cfg.material.empty()) {
        const Material* found = nullptr;
        for (const Material& candidate : builtin_materials())
            if (candidate.name == cfg.material)
                found = &candidate;
        if (!found)
            fail("material", "unknown material '" + cfg.material + "'");
        cfg.eps_r = found->eps_r;
        cfg.mu_r = found->mu_r;
    }
    number("eps_r", Quantity::plain, cfg.eps_r);
    number("mu_r", Quantity::plain, cfg.mu_r);
    text("materials_file", cfg.materials_file);
    integer("nx", cfg.nx);
    integer("ny", cfg.ny);
    number("arm_B", Quantity::magnetic_field, cfg.arm_field);
    number("arm_L", Quantity::length, cfg.arm_length);
    number("theta0", Quantity::angle, cfg.theta0);
    boolean("diagnostics", cfg.diagnostics);
    text("param", cfg.scan_param);
    integer("count", cfg.scan_count);
    text("out", cfg.out_path);
    boolean("raw", cfg.raw);
    if (const ConfigEntry* entry = find("orientation")) {
        const std::string value = trim(entry->value);
        if (value == "parallel")
            cfg.orientation = SplittingOrientation::parallel_to_guide_field;
        else if (value == "perpendicular")
            cfg.orientation = SplittingOrientation::perpendicular_to_guide_field;
        else
            fail("orientation", "expected 'parallel' or 'perpendicular', got '" + value
                                    + "'");
    }
    if (const ConfigEntry* entry = find("gamma")) {
        const std::string value = trim(entry->value);
        if (value == "full")
            cfg.gamma = GammaConvention::full;
        else if (value == "half")
            cfg.gamma = GammaConvention::half;
        else
            fail("gamma", "expected 'full' or 'half', got '" + value + "'");
    }
    if (cfg.scan_param != "E" && cfg.scan_param != "L")
        fail("param", "scannable parameters are 'E' and 'L', got '" + cfg.scan_param
                          + "'");
    const Quantity axis_quantity =
        cfg.scan_param == "E" ? Quantity::electric_field : Quantity::length;
    number("from", axis_quantity, cfg.scan_from);
    number("to", axis_quantity, cfg.scan_to);

    // Physical validation.  A field is checked when the current command uses
    // it, or when the user set it explicitly (a bad value never passes
    // silently just because the command ignores it).  Every violation names
    // the key and its origin.
    const auto active = [&](std::initializer_list<Command> users,
                            std::initializer_list<std::string_view> keys) {
        for (const Command user : users)
            if (user == command)
                return true;
        for (const std::string_view key : keys)
            if (find(key))
                return true;
        return false;
    };
    try {
        NeutronBeam beam(cfg.wavelength, cfg.phase_split);
    } catch (const domain_error& err) {
        fail("lambda", err.what());
    }
    if (active({Command::table1, Command::wave, Command::assess}, {"theta"})) {
        try {
            checked_cot(cfg.theta);
        } catch (const domain_error& err) {
            fail("theta", err.what());
        }
    }
    if (active({Command::table1}, {"phi_target"})
        && (!(cfg.phi_target > 0.0) || !std::isfinite(cfg.phi_target)))
        fail("phi_target", "target rotation must be positive");
    if (active({Command::transform, Command::phase, Command::scan}, {"E"})
        && (!(cfg.efield >= 0.0) || !std::isfinite(cfg.efield)))
        fail("E", "electric field must be non-negative and finite");
    if (active({Command::phase, Command::wave, Command::scan, Command::assess},
               {"L"})
        && (!(cfg.length > 0.0) || !std::isfinite(cfg.length)))
        fail("L", "length must be positive and finite");
    if (active({Command::wave, Command::assess}, {"B"})
        && !std::isfinite(cfg.b_eff))
        fail("B", "field must be finite");
    if (active({Command::wave, Command::assess}, {"y_extent"})
        && (!(cfg.y_extent > 0.0) || !std::isfinite(cfg.y_extent)))
        fail("y_extent", "transverse extent must be positive");
    if (active({Command::transform}, {"eps_r", "material"})
        && (!(cfg.eps_r >= 1.0) || !std::isfinite(cfg.eps_r)))
        fail("eps_r", "relative permittivity must be >= 1");
    if (active({Command::transform}, {"mu_r", "material"})
        && (!(cfg.mu_r > 0.0) || !std::isfinite(cfg.mu_r)))
        fail("mu_r", "relative permeability must be positive");
    if (active({Command::wave}, {"nx"}) && cfg.nx < 2)
        fail("nx", "grid needs at least 2 points per axis");
    if (active({Command::wave}, {"ny"}) && cfg.ny < 2)
        fail("ny", "grid needs at least 2 points per axis");
    if (active({Command::assess}, {"arm_B"})
        && (!(cfg.arm_field > 0.0) || !std::isfinite(cfg.arm_field)))
        fail("arm_B", "arm field must be positive");
    if (active({Command::assess}, {"arm_L"})
        && (!(cfg.arm_length > 0.0) || !std::isfinite(cfg.arm_length)))
        fail("arm_L", "arm length must be positive");
    if (active({Command::assess}, {"theta0"})) {
        try {
            checked_cot(cfg.theta0);
        } catch (const domain_error& err) {
            fail("theta0", err.what());
        }
    }
    if (active({Command::scan}, {"count"}) && cfg.scan_count < 2)
        fail("count", "scan needs at least 2 points");
    if (active({Command::scan}, {"from"})
        && (!(cfg.scan_from >= 0.0) || !std::isfinite(cfg.scan_from)))
        fail("from", "scan start must be non-negative and finite");
    if (active({Command::scan}, {"to"})
        && (!(cfg.scan_to >= 0.0) || !std::isfinite(cfg.scan_to)))
        fail("to", "scan end must be non-negative and finite");
    if (active({Command::scan}, {"from", "to"})
        && cfg.scan_to == cfg.scan_from)
        fail("to", "scan end must differ from scan start");

    return cfg;
}

} // namespace nse
