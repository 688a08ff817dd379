// Command execution: turns a validated RunConfig into deterministic text
// output on the given stream.  Identical configs produce byte-identical
// output; all formatting is locale-independent.
#pragma once

#include <iosfwd>

#include "nse/config.hpp"

namespace nse {

// Runs the configured command, writing its CSV to `out`.  Returns 0 on
// success; failures are reported by exception (config_error, domain_error,
// io_error) for the caller to map to an exit status.
int run(const RunConfig& config, std::ostream& out);

} // namespace nse
