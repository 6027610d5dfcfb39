#pragma once

#include "catswarm/core.hpp"
#include "catswarm/params.hpp"

namespace catswarm {

/// Runs the algorithm named by `config.algorithm`.
RunResult run_optimizer(const ObjectiveSpec& objective, const RunConfig& config);

}  // namespace catswarm
