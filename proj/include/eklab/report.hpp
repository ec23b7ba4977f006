#pragma once

#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "eklab/mp/real.hpp"
#include "eklab/util/rng.hpp"

namespace eklab {

inline const char* library_version() { return "eklab 1.0.0"; }

// One named check: status, the values it compared, its tolerance, timing.
// Everything but the wall time is deterministic given (descriptor, seed,
// version, precision); timing is therefore excluded from the canonical
// serialization unless explicitly requested.
struct CheckRecord {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::vector<std::pair<std::string, std::string>> values; // label -> canonical string
    std::string tolerance;
    double wall_ms = 0.0;

    const char* status() const { return skipped ? "skip" : (passed ? "pass" : "fail"); }
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    long precision_bits = 128;
    nlohmann::json settings; // effective suite parameters (plan echo)
    std::vector<CheckRecord> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.skipped && !c.passed) return false;
        return true;
    }

    nlohmann::json to_json(bool with_timing = false) const {
        nlohmann::json env;
        env["precision_bits"] = precision_bits;
        env["rng"] = Rng::version;
        env["seed"] = seed;
        env["version"] = library_version();
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json j;
            j["name"] = c.name;
            j["status"] = c.status();
            if (!c.tolerance.empty()) j["tolerance"] = c.tolerance;
            nlohmann::json vals;
            for (const auto& [k, v] : c.values) vals[k] = v;
            j["values"] = vals;
            if (with_timing) j["wall_ms"] = c.wall_ms;
            arr.push_back(std::move(j));
        }
        nlohmann::json out;
        out["checks"] = arr;
        out["environment"] = env;
        if (!settings.is_null()) out["settings"] = settings;
        out["suite"] = suite;
        return out;
    }
};

// timing helper for check bodies
class CheckTimer {
  public:
    CheckTimer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace eklab
