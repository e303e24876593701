#pragma once

#include <chrono>
#include <string>

#include <json.hpp>

namespace maasskit {

// Result record of one verification run. Serialized form is stable across
// runs except for runtime_ms.
struct CheckReport {
    std::string check_name;
    std::string paper_anchor;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json grid = nlohmann::json::array();
    double max_abs_residual = 0.0;
    double max_rel_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    long long runtime_ms = 0;

    void record(double abs_res, double rel_res) {
        if (abs_res > max_abs_residual) max_abs_residual = abs_res;
        if (rel_res > max_rel_residual) max_rel_residual = rel_res;
    }

    void finalize() { pass = max_rel_residual <= tolerance; }

    nlohmann::json to_json() const {
        return nlohmann::json{{"check_name", check_name},
                              {"paper_anchor", paper_anchor},
                              {"params", params},
                              {"grid", grid},
                              {"max_abs_residual", max_abs_residual},
                              {"max_rel_residual", max_rel_residual},
                              {"tolerance", tolerance},
                              {"pass", pass},
                              {"runtime_ms", runtime_ms}};
    }
};

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace maasskit
