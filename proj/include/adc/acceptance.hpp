#pragma once

#include <iosfwd>

namespace adc {

struct AcceptanceOptions {
    int jobs = 1;
};

// Runs the full acceptance battery, printing one pass/fail line per
// criterion.  Returns true when every criterion passes.
bool run_acceptance(std::ostream& out, const AcceptanceOptions& options = {});

}  // namespace adc
