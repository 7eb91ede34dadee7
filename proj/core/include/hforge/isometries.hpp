#pragma once

#include <Eigen/Dense>
#include <string>

namespace hforge {

using Mat = Eigen::MatrixXd;

/// The fixed coordinate isometries of the deformation chain, as real
/// orthogonal matrices. Inputs/outputs use the interleaved real layout
/// (Re z0, Im z0, Re z1, Im z1, ...).
///
/// f1, f2 act on C^4 = R^8; f3 on C^2 x R^4 = R^8 (identity on z0, z1);
/// f5 on C^2 x R^2 = R^6; f6 on iR x C x R^2 = R^5.
Mat isometry_f1();
Mat isometry_f2();
Mat isometry_f3();
Mat isometry_f5();
Mat isometry_f6();

/// Lookup by name ("f1", "f2", "f3", "f5", "f6"); throws on unknown id.
Mat coordinate_isometry(const std::string& id);

/// Real logarithm of a special-orthogonal matrix (pairs -1 eigenvalues into
/// pi-rotation blocks via the real Schur form). exp(so_log(R)) == R.
Mat so_log(const Mat& R);

/// Matrix exponential composed with so_log: geodesic path 1 -> R at time s.
Mat rotation_path(const Mat& R, double s);
Mat mat_exp(const Mat& A);

/// Gram-Schmidt the two columns of a tall matrix in place; throws when the
/// columns are numerically dependent.
void orthonormalize2(Eigen::VectorXd& c1, Eigen::VectorXd& c2);

}  // namespace hforge
