#pragma once

#include <functional>
#include <vector>

#include "hforge/bundle.hpp"

namespace hforge {

struct LiftConfig {
    double step = 1e-3;
    double fd_eps = 1e-6;         ///< finite-difference step for d(pi) and curve velocity
    double proj_tol = 1e-6;       ///< max allowed projection residual
    bool track_residuals = true;
};

struct LiftedPath {
    std::vector<double> times;
    std::vector<Mat> elements;
    double max_horiz_residual = 0.0;
    double max_proj_residual = 0.0;
    const Mat& endpoint() const { return elements.back(); }
};

/// Integrates the horizontal lift of base_curve over [0, t1] starting at the
/// identity: gamma' = gamma . xi(t) with xi the unique horizontal algebra
/// element projecting onto the base velocity. Fourth-order stepping with
/// polar re-projection onto the group after each step. Throws when the
/// per-step linear system is singular or the projection residual exceeds
/// tolerance.
LiftedPath horizontal_lift(const BundleDescriptor& bundle,
                           const std::function<Vec(double)>& base_curve,
                           double t1, const LiftConfig& cfg = {});

/// Duran boundary value: horizontal lift of alpha o gamma_v over [0, pi]
/// evaluated at pi, where gamma_v is the meridian geodesic with initial
/// velocity v and alpha maps the domain sphere into the bundle base.
Mat boundary(const BundleDescriptor& bundle,
             const std::function<Vec(const Vec&)>& alpha, const Vec& v,
             const LiftConfig& cfg = {});

/// The double-fibration curve: delta(t) = spin7_lift(t)^{-1} . sp2_lift(t)
/// over the geodesic gamma_v of S^7 (direction v in e-coordinates). The
/// Spin(7) factor uses the closed form; the Sp(2) = Spin(5) factor is
/// integrated numerically in triple form.
SpinTriple double_fibration_delta(const Vec7& v, double t,
                                  const LiftConfig& cfg = {});

/// Max trace-inner-product of the finite-difference logarithmic derivative
/// with the fiber subalgebra along a stored path (sampled).
double horizontality_residual(const BundleDescriptor& bundle,
                              const LiftedPath& path, int samples = 20);

}  // namespace hforge
