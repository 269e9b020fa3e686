#pragma once
#include "rmlab/config.hpp"

namespace rmlab::cli {

// Each command renders one table per the external-interface contract and
// returns 0 on success. Config failures raise ConfigError (exit 2 at the
// entry point); numerical failures raise rmlab::Error subclasses (exit 3).
int cmd_transmission(const RunConfig& cfg);
int cmd_poles(const RunConfig& cfg);
int cmd_csm(const RunConfig& cfg);
int cmd_completeness(const RunConfig& cfg);

} // namespace rmlab::cli
