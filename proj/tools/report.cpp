#include "report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <json.hpp>

namespace hforge::cli {

int Report::passed() const {
    int n = 0;
    for (const auto& c : checks)
        if (c.pass) ++n;
    return n;
}

std::string report_to_json(const Report& r, bool include_meta) {
    nlohmann::ordered_json j;
    if (include_meta) {
        const auto now = std::chrono::system_clock::now();
        j["meta"] = {{"timestamp_ms",
                      std::chrono::duration_cast<std::chrono::milliseconds>(
                          now.time_since_epoch())
                          .count()}};
    }
    j["suite"] = r.suite;
    j["config"] = {{"seed", r.config.seed},
                   {"samples", r.config.samples},
                   {"tol_override", r.config.tol_override},
                   {"step", r.config.step},
                   {"threads", r.config.threads}};
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"id", c.id},
                          {"ref", c.ref},
                          {"samples", c.samples},
                          {"max_residual", c.max_residual},
                          {"tol", c.tol},
                          {"pass", c.pass}});
    }
    j["checks"] = checks;
    j["summary"] = {{"total", r.total()}, {"passed", r.passed()},
                    {"failed", r.total() - r.passed()}};
    return j.dump(2) + "\n";
}

void write_report(const Report& r, const std::string& path) {
    std::ofstream f(path);
    f << report_to_json(r);
}

void print_report(const Report& r) {
    for (const auto& c : r.checks) {
        std::printf("[%s] %-40s residual %.3e  tol %.1e  (%ld samples, %.0f ms)\n",
                    c.pass ? "PASS" : "FAIL", c.id.c_str(), c.max_residual, c.tol,
                    c.samples, c.wall_ms);
    }
    std::printf("%s: %d/%d checks passed\n", r.suite.c_str(), r.passed(), r.total());
}

}  // namespace hforge::cli
