#pragma once

#include <Eigen/Dense>

#include "hforge/group_element.hpp"
#include "hforge/octonion.hpp"
#include "hforge/quaternion.hpp"

namespace hforge {

/// phi(tau, z) = e^{-i tau}(1 + z (e^{i n tau} - 1) conj(z)^t) in SU(n) for
/// unit z in C^n and tau in [0, 2pi/n]. Throws when tau is out of range.
Matc phi_map(double tau, const Eigen::VectorXcd& z, double range_tol = 1e-9);

/// eta: S^5 -> SU(3), z z^t plus the conjugate cross-product matrix.
Eigen::Matrix3cd eta_map(const Eigen::Vector3cd& z);

/// theta: complex (not octonionic) conjugation on Im O = iR x C^3, 7x7.
Mat theta_map();

/// psi(p) = 7x7 restriction of conjugation by exp(-2 pi p / 3); p unit
/// imaginary octonion given by e-coordinates.
Mat psi_map(const Vec7& p);

/// H_{SU(3)->S^5}(tau, (z,w), s): 2x2 special-unitary value; s in [0, pi/2],
/// |z|^2 + |w|^2 = 1. At s = 0 this is the square of the conjugated
/// phi-factor; at s = pi/2 it is the identity for all (tau, z).
Eigen::Matrix2cd h_su3(double tau, Complex z, Complex w, double s);

/// Closed-form characteristic maps (boundary values of horizontal lifts of
/// the identity, read in the south-pole fiber).
/// SU(n+1) -> S^{2n+1}: input (y, z) with y real, z in C^n, y^2 + |z|^2 = 1.
Matc char_su(int n, double y, const Eigen::VectorXcd& z);
/// Sp(n+1) -> S^{4n+3}: input (p, u), p imaginary, u in H^n. Result is the
/// quaternionic n x n block in structured real form.
Mat char_sp(int n, const Quaternion& p, const std::vector<Quaternion>& u);
/// Sp(2) -> S^7 specialization: -(u/|u|) e^{pi p} (conj u/|u|).
Quaternion char_sp2(const Quaternion& p, const Quaternion& u);
/// G2 -> S^6: eta(-i z) . theta as a 7x7 matrix; z unit in C^3.
Mat char_g2(const Eigen::Vector3cd& z);
/// Spin(7) -> S^7: the closed triple for direction v in S^6 (e-coords).
SpinTriple char_spin7(const Vec7& v);

/// Closed-form horizontal lifts through the unit element.
/// SU(n+1) over gamma(t) = cos t e_0 + sin t (iy, z).
Matc closed_lift_su(int n, double y, const Eigen::VectorXcd& z, double t);
/// Sp(n+1) over gamma(t) = cos t e_0 + sin t (p, u); structured real form.
Mat closed_lift_sp(int n, const Quaternion& p, const std::vector<Quaternion>& u,
                   double t);
/// G2 over the geodesic from e1 with tangent direction v in S^5 (subspace of
/// Im O orthogonal to e1, given as z in C^3); 7x7.
Mat closed_lift_g2(const Eigen::Vector3cd& zdir, double t);
/// Spin(7) over the geodesic from 1 with direction v in S^6 (e-coords).
SpinTriple closed_lift_spin7(const Vec7& v, double t);

/// South-pole fiber identifications (left translations).
Matc su_fiber_identification(int n);     ///< diag(-1, e^{i pi/n} 1)^{-1} factor
Mat sp_fiber_identification(int n);      ///< left mult by diag(-1, 1)
SpinTriple spin7_fiber_identification(); ///< left mult by (1, -1, -1)

SpinTriple triple_mul(const SpinTriple& a, const SpinTriple& b);
SpinTriple triple_inverse(const SpinTriple& a);

}  // namespace hforge
