#include "nse/units.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "nse/constants.hpp"
#include "nse/errors.hpp"

namespace nse {

namespace {

struct UnitDef {
    std::string_view suffix;
    Quantity quantity;
    double factor;
};

constexpr std::array<UnitDef, 9> unit_table{{
    {"m", Quantity::length, 1.0},
    {"nm", Quantity::length, 1e-9},
    {"deg", Quantity::angle, constants::pi / 180.0},
    {"rad", Quantity::angle, 1.0},
    {"T", Quantity::magnetic_field, 1.0},
    {"uT", Quantity::magnetic_field, 1e-6},
    {"V/m", Quantity::electric_field, 1.0},
    {"MV/m", Quantity::electric_field, 1e6},
    {"s", Quantity::time, 1.0},
}};

std::string_view trim(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

} // namespace

double parse_quantity(std::string_view text, Quantity quantity)
{
    const std::string_view trimmed = trim(text);
    if (trimmed.empty())
        throw config_error("expected a number, got an empty value");

    double value = 0.0;
    const char* begin = trimmed.data();
    const char* end = begin + trimmed.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin)
        throw config_error("'" + std::string(trimmed) + "' is not a valid number");
    if (!std::isfinite(value))
        throw config_error("'" + std::string(trimmed) + "' is not finite");

    const std::string_view suffix = trim(std::string_view(ptr, end - ptr));
    if (suffix.empty())
        return value;

    for (const UnitDef& unit : unit_table) {
        if (unit.suffix != suffix)
            continue;
        if (unit.quantity != quantity)
            throw config_error("unit '" + std::string(suffix)
                               + "' does not apply to this quantity");
        return value * unit.factor;
    }
    if (quantity == Quantity::plain)
        throw config_error("no unit suffix accepted here, got '" + std::string(suffix)
                           + "'");
    throw config_error("unknown unit '" + std::string(suffix)
                       + "' (accepted: m, nm, deg, rad, T, uT, V/m, MV/m, s)");
}

long parse_integer(std::string_view text)
{
    const std::string_view trimmed = trim(text);
    long value = 0;
    const char* begin = trimmed.data();
    const char* end = begin + trimmed.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || trimmed.empty())
        throw config_error("'" + std::string(trimmed) + "' is not a valid integer");
    return value;
}

bool parse_bool(std::string_view text)
{
    const std::string_view trimmed = trim(text);
    if (trimmed == "true" || trimmed == "1" || trimmed == "yes" || trimmed == "on")
        return true;
    if (trimmed == "false" || trimmed == "0" || trimmed == "no" || trimmed == "off")
        return false;
    throw config_error("'" + std::string(trimmed) + "' is not a valid boolean");
}

} // namespace nse
