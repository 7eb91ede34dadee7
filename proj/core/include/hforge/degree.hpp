#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>

#include "hforge/sphere.hpp"

namespace hforge {

struct DegreeConfig {
    std::uint64_t seed = 42;
    int starts_per_dim = 4096;  ///< start grid size is starts_per_dim * n
    int newton_iters = 40;
    double newton_tol = 1e-10;
    double dedup_dist = 1e-6;
    int regular_value_retries = 8;
};

struct DegreeReport {
    bool conclusive = false;
    int degree = 0;
    int preimages = 0;
    int retries_used = 0;
    double max_residual = 0.0;
};

/// Signed count of preimages of a regular value for a smooth map S^n -> S^n.
/// Newton refinement from a seeded quasi-random start grid; sign from the
/// determinant of the differential in orthonormal tangent frames.
DegreeReport degree(const std::function<Vec(const Vec&)>& map, int n,
                    const DegreeConfig& cfg = {});

}  // namespace hforge
