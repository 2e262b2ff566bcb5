#pragma once

#include "abfringe/config.hpp"
#include "abfringe/table.hpp"

namespace abfringe {

// Worker count for parallel sweeps: hardware concurrency clamped to [1, 8],
// further capped by the ABFRINGE_THREADS environment variable when set.
int worker_count();

// Execute the configured experiment and return its table (metadata echoes
// the config so a run can be reproduced exactly). Throws ConfigError,
// GeometryError, or NumericsError; the caller maps these to exit codes.
ResultTable run_experiment(const RunConfig& cfg);

}  // namespace abfringe
