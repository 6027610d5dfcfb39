#include "catswarm/optimizer.hpp"

#include <stdexcept>

#include "catswarm/cso.hpp"
#include "catswarm/dcso.hpp"
#include "catswarm/de.hpp"

namespace catswarm {

RunResult run_optimizer(const ObjectiveSpec& objective, const RunConfig& config) {
  switch (config.algorithm) {
    case Algorithm::Dcso: return dcso_run(objective, config);
    case Algorithm::Cso: return cso_run(objective, config);
    case Algorithm::De: return de_run(objective, config);
  }
  throw std::invalid_argument("run_optimizer: unknown algorithm");
}

}  // namespace catswarm
