#pragma once

#include "report.hpp"

namespace hforge::cli {

Report run_suite(const std::string& name, const RunConfig& cfg);

/// The degree checks of the acceptance set (power maps on S^6 and S^7).
Report run_degree_suite(const RunConfig& cfg);

}  // namespace hforge::cli
