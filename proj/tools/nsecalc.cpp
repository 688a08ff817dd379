// nsecalc: command-line frontend for the neutron spin-echo field-coupling
// library.  Subcommands: table1, transform, phase, wave, scan, assess.
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "nse/commands.hpp"
#include "nse/config.hpp"
#include "nse/errors.hpp"

namespace {

// Raw string storage for every flag; stable addresses since std::map nodes
// never move.
using Store = std::map<std::string, std::string>;

struct BoundOption {
    CLI::Option* option;
    std::string key;
};

// Note: must not be named `bind` — the std:: arguments would make unqualified
// calls consider std::bind through argument-dependent lookup, and its
// perfect-forwarding overload wins for string literals, silently turning
// every registration into a discarded bind expression.
void bind_option(std::vector<BoundOption>& bound, Store& store, CLI::App* sub,
                 const std::string& flag, const std::string& key,
                 const std::string& help)
{
    bound.push_back({sub->add_option(flag, store[key], help), key});
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Neutron spin-echo field-coupling calculator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string gamma_name;
    bool raw = false;
    app.add_option("--config", config_path,
                   "configuration file ('key = value' lines, [section] headers, "
                   "# comments); flags override file values");
    auto* out_opt = app.add_option("--out", out_path, "write output to this file "
                                                      "instead of standard output");
    auto* raw_opt = app.add_flag("--raw", raw, "full-precision numeric output");
    auto* gamma_opt =
        app.add_option("--gamma", gamma_name,
                       "precession-rate convention: 'full' (default) or 'half' "
                       "(diagnostic halved rate)");

    Store store;
    std::vector<BoundOption> bound;

    CLI::App* table1 = app.add_subcommand(
        "table1", "Effective field, minimum device length, and refraction angle "
                  "for the material database");
    bind_option(bound, store, table1, "--lambda", "lambda", "neutron wavelength");
    bind_option(bound, store, table1, "--phi-target", "phi_target",
         "target polarization rotation");
    bind_option(bound, store, table1, "--theta", "theta", "field-boundary inclination");
    bind_option(bound, store, table1, "--materials-file", "materials_file",
         "CSV material database replacing the builtin table");

    CLI::App* transform = app.add_subcommand(
        "transform", "Motion-induced field via capacitor, constitutive, and boost "
                     "routes, with cross-route deviations");
    bind_option(bound, store, transform, "--lambda", "lambda", "neutron wavelength");
    bind_option(bound, store, transform, "--E", "E", "lab electric field");
    bind_option(bound, store, transform, "--eps-r", "eps_r", "relative permittivity");
    bind_option(bound, store, transform, "--mu-r", "mu_r", "relative permeability");
    bind_option(bound, store, transform, "--material", "material",
         "builtin material supplying permittivity/permeability");

    CLI::App* phase = app.add_subcommand(
        "phase", "Motion-induced precession phase for a field region");
    bind_option(bound, store, phase, "--lambda", "lambda", "neutron wavelength");
    bind_option(bound, store, phase, "--E", "E", "electric field");
    bind_option(bound, store, phase, "--L", "L", "region length");

    CLI::App* wave = app.add_subcommand(
        "wave", "Two-component wavefield sampled on a grid across a triangular "
                "field region");
    bind_option(bound, store, wave, "--lambda", "lambda", "neutron wavelength");
    bind_option(bound, store, wave, "--phi0", "phi0", "incident up/down phase offset");
    bind_option(bound, store, wave, "--L", "L", "triangle base length");
    bind_option(bound, store, wave, "--theta", "theta", "boundary inclination");
    bind_option(bound, store, wave, "--B", "B", "field inside the triangle");
    bind_option(bound, store, wave, "--y-extent", "y_extent", "transverse half-extent");
    bind_option(bound, store, wave, "--nx", "nx", "grid points along the beam");
    bind_option(bound, store, wave, "--ny", "ny", "grid points across the beam");

    CLI::App* scan = app.add_subcommand(
        "scan", "Sweep one parameter and emit the precession phase per point");
    bind_option(bound, store, scan, "--lambda", "lambda", "neutron wavelength");
    bind_option(bound, store, scan, "--param", "param", "swept parameter: E or L");
    bind_option(bound, store, scan, "--from", "from", "sweep start");
    bind_option(bound, store, scan, "--to", "to", "sweep end");
    bind_option(bound, store, scan, "--count", "count", "number of sweep points");
    bind_option(bound, store, scan, "--E", "E", "fixed electric field when sweeping L");
    bind_option(bound, store, scan, "--L", "L", "fixed region length when sweeping E");

    CLI::App* assess = app.add_subcommand(
        "assess", "Compare direct triangle rotation with the spin-echo enhanced "
                  "route");
    bind_option(bound, store, assess, "--lambda", "lambda", "neutron wavelength");
    bind_option(bound, store, assess, "--L", "L", "triangle base length");
    bind_option(bound, store, assess, "--theta", "theta", "triangle boundary inclination");
    bind_option(bound, store, assess, "--B", "B", "triangle field");
    bind_option(bound, store, assess, "--y-extent", "y_extent", "transverse half-extent");
    bind_option(bound, store, assess, "--arm-B", "arm_B", "spin-echo arm field");
    bind_option(bound, store, assess, "--arm-L", "arm_L", "spin-echo arm length");
    bind_option(bound, store, assess, "--theta0", "theta0", "arm boundary inclination");
    bind_option(bound, store, assess, "--orientation", "orientation",
         "splitting orientation: parallel or perpendicular");
    bool diagnostics = false;
    auto* diag_opt = assess->add_flag(
        "--diagnostics", diagnostics,
        "also report the neglected zero-field and arm-boundary effects");

    for (CLI::App* sub : {table1, transform, phase, wave, scan, assess})
        sub->fallthrough();

    try {
        app.parse(argc, argv);

        nse::EntryMap entries;
        if (!config_path.empty())
            nse::load_config_file(config_path, entries);
        for (const BoundOption& item : bound)
            if (item.option->count() > 0)
                entries[item.key] =
                    nse::ConfigEntry{store[item.key], item.option->get_name()};
        if (diag_opt->count() > 0)
            entries["diagnostics"] = nse::ConfigEntry{"true", "--diagnostics"};
        if (raw_opt->count() > 0)
            entries["raw"] = nse::ConfigEntry{"true", "--raw"};
        if (out_opt->count() > 0)
            entries["out"] = nse::ConfigEntry{out_path, "--out"};
        if (gamma_opt->count() > 0)
            entries["gamma"] = nse::ConfigEntry{gamma_name, "--gamma"};

        const CLI::App* sub = app.get_subcommands().front();
        const nse::Command command = nse::command_from_name(sub->get_name());
        const nse::RunConfig config = nse::build_config(command, entries);

        std::ostringstream buffer;
        nse::run(config, buffer);

        if (config.out_path.empty()) {
            std::cout << buffer.str();
            std::cout.flush();
            if (!std::cout)
                throw nse::io_error("failed writing to standard output");
        } else {
            std::ofstream file(config.out_path, std::ios::binary);
            if (!file)
                throw nse::io_error("cannot open output file: " + config.out_path);
            file << buffer.str();
            file.flush();
            if (!file)
                throw nse::io_error("failed writing output file: " + config.out_path);
        }
        return 0;
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    } catch (const nse::config_error& err) {
        std::cerr << "config error: " << err.what() << '\n';
        return 2;
    } catch (const nse::domain_error& err) {
        std::cerr << "domain error: " << err.what() << '\n';
        return 3;
    } catch (const nse::io_error& err) {
        std::cerr << "i/o error: " << err.what() << '\n';
        return 4;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
}
