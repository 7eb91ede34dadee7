#pragma once

#include <Eigen/Dense>

#include "hforge/quaternion.hpp"

namespace hforge {

/// Point of S^6 in Im H x H: coordinates (p1,p2,p3, u0,u1,u2,u3).
using VecPU = Eigen::Matrix<double, 7, 1>;

VecPU make_pu(const Quaternion& p, const Quaternion& u);
Quaternion pu_p(const VecPU& x);  ///< imaginary quaternion
Quaternion pu_u(const VecPU& x);

/// Representative of a class of the smash product S^3 ^ S^3.
struct SmashRep {
    Quaternion a, b;
    bool collapsed = false;  ///< class of the wedge (a = 1 or b = 1)
};

/// iota(p, u) = (u/|u|, -e^{pi p}); collapses when u = 0.
SmashRep iota(const VecPU& x, double tol = 1e-12);

/// lambda^{-1}(a, b) = (p, a sqrt(1 - |p|^2)) with b = -e^{pi p}; the log
/// branch keeps |p| <= 1 and uses the i-axis when b = 1.
VecPU lambda_inv(const Quaternion& a, const Quaternion& b);

/// The cut-locus collapse homotopy f_s on S^6; f_0 = id, f_1 crushes the
/// disk { u real >= 0 } to (0, 1).
VecPU collapse_f(double s, const VecPU& x);

/// mu = f_1 o lambda^{-1}, the homotopy inverse of iota.
VecPU mu(const Quaternion& a, const Quaternion& b);

/// The two commutator deformations:
/// variant 1: (u/|u|) e^{pi p} (conj u/|u|) e^{-(1-s) pi p + s pi i}
/// variant 2: (u/|u|) e^{12 pi p} (conj u/|u|) e^{-(1-s) 12 pi p}
/// u = 0 is handled by analytic extension.
Quaternion duran_homotopy(int variant, const VecPU& x, double s);

}  // namespace hforge
