#include "dephase/log.hpp"

#include <cstdlib>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>
#include <string_view>

namespace dephase {

std::shared_ptr<spdlog::logger> logger() {
    static std::shared_ptr<spdlog::logger> instance = [] {
        auto log = std::make_shared<spdlog::logger>("dephase", std::make_shared<spdlog::sinks::stderr_sink_mt>());
        log->set_pattern("[%l] %v");
        auto level = spdlog::level::err;
        if (const char* env = std::getenv("DEPHASE_LOG")) {
            const std::string_view v(env);
            if (v == "debug") level = spdlog::level::debug;
            else if (v == "info") level = spdlog::level::info;
        }
        log->set_level(level);
        return log;
    }();
    return instance;
}

}  // namespace dephase
