#pragma once

// Named verification suites. Each one cross-checks independent routes to the
// same numbers and reports every instance it looked at.

#include "sytstrip/enumerate.hpp"
#include "sytstrip/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sytstrip {

struct SuiteOptions {
    std::optional<long> limit;  // suite-specific default when empty
    int hardin_width = 5;       // width k for the hardin suite
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 20240601;
    CountLimits limits;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SequenceReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// Default limit of a suite, as documented in the CLI help.
long default_suite_limit(const std::string& name, int hardin_width = 5);

}  // namespace sytstrip
