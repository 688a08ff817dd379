// Error taxonomy.  The CLI maps these onto process exit codes, so the split
// matters: configuration/parse problems (exit 2), physics domain violations
// (exit 3), and I/O failures (exit 4).
#pragma once

#include <stdexcept>
#include <string>

namespace nse {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input or malformed configuration/data files.
struct config_error : error {
    using error::error;
};

// config_error with a source location (file:line or flag name) baked in.
struct parse_error : config_error {
    parse_error(const std::string& where, const std::string& what)
        : config_error(where + ": " + what), location(where) {}
    std::string location;
};

// A physically meaningless or out-of-domain input value.
struct domain_error : error {
    using error::error;
};

// Geometry that the model does not cover (e.g. a capacitor too thick for the
// infinite-plate approximation).
struct geometry_error : domain_error {
    using domain_error::domain_error;
};

// Material parameters outside the supported range.
struct material_error : domain_error {
    using domain_error::domain_error;
};

// Inputs formally valid but outside the model's validity envelope.
struct model_error : domain_error {
    using domain_error::domain_error;
};

// Filesystem failures (unreadable input, unwritable output).
struct io_error : error {
    using error::error;
};

} // namespace nse
