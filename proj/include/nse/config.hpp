// Run configuration: defaults, config-file parsing, flag overlay, and
// validation.  Values arrive as raw strings tagged with their origin (file
// line or command-line flag) so that every rejection message can name the key
// and where its value came from.  All physical preconditions are checked here,
// before any computation runs.
#pragma once

#include <map>
#include <string>

#include "nse/spinecho.hpp"

namespace nse {

enum class Command { table1, transform, phase, wave, scan, assess };

Command command_from_name(const std::string& name);
std::string to_string(Command command);

struct ConfigEntry {
    std::string value;
    std::string origin; // "path:line" for file values, "--flag" for CLI values
};

// Key -> raw value; later insertions (flags) override earlier ones (file).
using EntryMap = std::map<std::string, ConfigEntry>;

// Parses a `key = value` file with [section] headers and '#' comments into
// `into`, overwriting existing keys.  Section headers are cosmetic grouping;
// keys are global and must be known.  Throws io_error if unreadable and
// parse_error (with path:line) on syntax or unknown keys.
void load_config_file(const std::string& path, EntryMap& into);

enum class GammaConvention { full, half };

struct RunConfig {
    Command command = Command::table1;

    // Beam
    double wavelength = 0.25e-9; // m
    double phase_split = 0.0;    // rad, incident up/down phase offset

    // Shared geometry / fields
    double theta = 0.0;      // rad (default set per command)
    double phi_target = 0.1; // rad, target rotation for minimum-length column
    double efield = 30e6;    // V/m
    double length = 0.0;     // m (capacitor or triangle length; per-command default)
    double b_eff = 0.0;      // T, triangle field
    double y_extent = 25e-9; // m
    double eps_r = 1.0;
    double mu_r = 1.0;
    std::string material;       // optional builtin-material name (transform)
    std::string materials_file; // optional CSV overriding the builtin table

    // Wave grid
    int nx = 5;
    int ny = 5;

    // Spin-echo arm
    double arm_field = 0.01; // T
    double arm_length = 1.0; // m
    double theta0 = 0.0;     // rad
    SplittingOrientation orientation = SplittingOrientation::parallel_to_guide_field;
    bool diagnostics = false;

    // Scan axis
    std::string scan_param = "E"; // "E" or "L"
    double scan_from = 0.0;
    double scan_to = 30e6;
    int scan_count = 11;

    // Output
    std::string out_path; // empty = standard output
    bool raw = false;     // full-precision output everywhere
    GammaConvention gamma = GammaConvention::full;
};

// Applies per-command defaults, parses units, and validates every value,
// throwing config_error naming the key and its origin on any violation.
RunConfig build_config(Command command, const EntryMap& entries);

} // namespace nse
