#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

namespace hforge {

using Vec = Eigen::VectorXd;

/// Polar split of a point of S^n in R^{n+1} about coordinate 0:
/// x = (cos t, v sin t) with t in [0, pi] and |v| = 1. Below the pole
/// threshold the direction defaults to the first tangent axis.
struct Polar {
    double t = 0.0;
    Vec v;  ///< unit direction, dimension n
};
Polar polar_split(const Vec& x, double pole_tol = 1e-13);

/// k-th power of S^n: (cos t, v sin t) |-> (cos kt, v sin kt).
Vec power_map(const Vec& x, int k);

/// Fractional-power variant used by staged homotopies; k real.
Vec power_map_real(const Vec& x, double k);

/// Suspension of rho: S^{n-1} -> S^{m-1}; x = (x0, v) |-> (x0, |v| rho(v/|v|)).
Vec suspend(const std::function<Vec(const Vec&)>& rho, const Vec& x);

/// Lower double suspension: (v, w) |-> (|v| rho(v/|v|), w) with w the last
/// two coordinates.
Vec suspend_lower2(const std::function<Vec(const Vec&)>& rho, const Vec& x);

/// Geodesic through the north pole: gamma_v(t) = (cos t, v sin t) for a unit
/// tangent v at N = (1, 0, ..., 0) of S^n.
Vec geodesic(const Vec& v, double t);

/// Explicit null homotopy of (Sigma rho) o p^{2j} into S^{2l} (target
/// dimension even). Stage schedule: the standard two-stage formula on
/// [0,1/2] and [1/2,1]; s = 0 gives the composition, s = 1 the constant
/// north pole. Throws on odd target dimension.
Vec null_homotopy_even_power(const std::function<Vec(const Vec&)>& rho,
                             int target_dim, int j, const Vec& x, double s);

/// One labeled sub-interval of a homotopy parameter.
struct Stage {
    std::string label;
    double s0 = 0.0, s1 = 1.0;
};

/// Evaluator bundle for a homotopy (point, s) -> target point with a
/// declared schedule and endpoint certificates.
struct HomotopyHandle {
    int domain_dim = 0;
    std::string target;  ///< descriptor, e.g. "S^3", "SU(2) fiber", "V_{7,2}"
    double s0 = 0.0, s1 = 1.0;
    std::vector<Stage> stages;
    std::function<Vec(const Vec&, double)> eval;
    std::string endpoint_s0, endpoint_s1;  ///< symbolic endpoint descriptors
};

}  // namespace hforge
