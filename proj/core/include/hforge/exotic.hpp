#pragma once

#include <Eigen/Dense>
#include <array>

#include "hforge/master.hpp"
#include "hforge/quaternion.hpp"

namespace hforge {

/// Quaternionic 2x2 matrix with quaternionically orthonormal columns.
struct Sp2Element {
    std::array<std::array<Quaternion, 2>, 2> m;  ///< m[row][col]
    Mat real8() const;
    static Sp2Element from_real8(const Mat& r);
    double membership_residual() const;
};

/// Point of S^7 x S^3: u in H^2 with |u| = 1, r a unit quaternion.
struct ProductPoint {
    Quaternion u1, u2;  ///< the two components of u
    Quaternion r;
};

/// Quaternionic Hopf map S^7 -> S^4: (u,v) |-> (|u|^2 - |v|^2, 2 u conj(v)).
Eigen::Matrix<double, 5, 1> hopf(const Quaternion& u, const Quaternion& v);

/// Hermitian quaternionic product <<a, b>> = conj(a1) b1 + conj(a2) b2.
Quaternion herm_h2(const Quaternion& a1, const Quaternion& a2,
                   const Quaternion& b1, const Quaternion& b2);

struct ExoticConfig {
    PipelineConfig pipeline;
    double lift_step = 1e-3;
};

/// chi_j : S^7 -> Sp(2); first column is the 12j-th power map. x is given in
/// the H^2 chart (u1, u2) with |x| = 1. Lift results are cached per
/// direction; evaluation is deterministic.
Sp2Element chi(int j, const Quaternion& x1, const Quaternion& x2,
               const ExoticConfig& cfg = {});

/// Membership test of the pulled-back bundle E^{10}_n.
struct E10Report {
    bool ok = false;
    double residual = 0.0;
};
E10Report e10_membership(int n, const Quaternion& u1, const Quaternion& u2,
                         const Quaternion& v1, const Quaternion& v2,
                         double tol = 1e-6);

/// The exotic S^3-action on S^7 x S^3.
ProductPoint star(int j, const Quaternion& q, const ProductPoint& x,
                  const ExoticConfig& cfg = {});

/// H_j(x, t) = cos t . chi_{j,1}(x) + sin t . chi_{j,2}(x) in H^2.
std::pair<Quaternion, Quaternion> suspension_homotopy_Hj(
    int j, const Quaternion& x1, const Quaternion& x2, double t,
    const ExoticConfig& cfg = {});

/// Clears the per-direction lift cache (test isolation).
void chi_cache_clear();

}  // namespace hforge
