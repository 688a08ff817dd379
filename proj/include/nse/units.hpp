// Parsing of numeric values with an explicit unit whitelist.  A value is a
// number optionally followed by one of the accepted unit suffixes for its
// quantity kind (e.g. "0.25nm", "30 MV/m", "45deg", "0.1"); a bare number is
// taken in SI base units.  Parsing is locale-independent.
#pragma once

#include <string_view>

namespace nse {

enum class Quantity {
    length,         // m, nm
    angle,          // rad, deg
    magnetic_field, // T, uT
    electric_field, // V/m, MV/m
    time,           // s
    plain,          // dimensionless; no unit suffix accepted
};

// Returns the value converted to SI base units.  Throws config_error with a
// human-readable reason on malformed numbers, unknown units, or a unit that
// does not fit the quantity kind.
double parse_quantity(std::string_view text, Quantity quantity);

// Strict integer / boolean parsing with the same error behavior.
long parse_integer(std::string_view text);
bool parse_bool(std::string_view text);

} // namespace nse
