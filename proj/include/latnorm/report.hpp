#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "latnorm/io.hpp"

namespace latnorm {

inline constexpr const char* kVersion = "0.1.0";

// Envelope for one CLI invocation.  wall_ms is informational only and must be
// ignored when comparing runs for determinism.
struct RunReport {
    std::string command;
    std::uint64_t seed = 0;
    json params = json::object();
    json result = json::object();
    long long wall_ms = 0;
};

inline json run_report_to_json(const RunReport& r) {
    json j;
    j["tool"] = "latnorm";
    j["version"] = kVersion;
    j["command"] = r.command;
    j["seed"] = r.seed;
    j["params"] = r.params;
    j["result"] = r.result;
    j["wall_ms"] = r.wall_ms;
    return j;
}

class WallTimer {
  public:
    WallTimer() : start_(std::chrono::steady_clock::now()) {}
    long long elapsed_ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace latnorm
