// log.hpp: stderr diagnostics controlled by DEPHASE_LOG={error,info,debug}.

#pragma once

#include <memory>

namespace spdlog {
class logger;
}

namespace dephase {

// Logger writing to stderr; level read from DEPHASE_LOG on first use
// (default: error).
std::shared_ptr<spdlog::logger> logger();

}  // namespace dephase
