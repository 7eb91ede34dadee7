#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hforge::cli {

struct RunConfig {
    std::uint64_t seed = 42;
    int samples = 0;        ///< 0 = per-check defaults (the acceptance counts)
    double tol_override = 0.0;  ///< 0 = per-check defaults
    double step = 1e-3;
    int threads = 0;        ///< 0 = hardware
    std::string out_path;
};

struct CheckResult {
    std::string id;
    std::string ref;  ///< short description of the verified relation
    long samples = 0;
    double max_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    double wall_ms = 0.0;
};

struct Report {
    std::string suite;
    RunConfig config;
    std::vector<CheckResult> checks;
    int total() const { return static_cast<int>(checks.size()); }
    int passed() const;
    bool all_pass() const { return passed() == total(); }
};

/// Serializes with a stable key order; the timestamp lives in a separate
/// header object so comparison tooling can drop it.
std::string report_to_json(const Report& r, bool include_meta = true);
void write_report(const Report& r, const std::string& path);
void print_report(const Report& r);

}  // namespace hforge::cli
