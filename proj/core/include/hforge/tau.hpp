#pragma once

#include <Eigen/Dense>
#include <utility>

#include "hforge/sphere.hpp"

namespace hforge {

using Vec5 = Eigen::Matrix<double, 5, 1>;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Vec4 = Eigen::Matrix<double, 4, 1>;

/// The V_{5,2} core of the deformation chain. Domain coordinates
/// (Re z0, Im z0, Re z1, Im z1, a, b); target coordinates
/// (y, Re w, Im w, alpha, beta).

/// Columns of the map h~_{5,2} (two perpendicular Hopf variants over a
/// 2-frame tail); input on S^5.
std::pair<Vec5, Vec5> h52_tilde(const Vec6& y);
/// f6 o h~ o f5 with partial rotation paths; s5 = s6 = 1 gives the
/// conjugated map whose first column is the double suspension of the Hopf
/// map in the natural coordinates.
std::pair<Vec5, Vec5> h52_hat(const Vec6& y, double s5 = 1.0, double s6 = 1.0);

/// Twisted 1-homogeneous Hopf block: s = 0 gives the Hopf value on the
/// 4-vector (Re z1, Im z1, a, b); s = 1 its negative. Continuous in both
/// arguments (the twist axis ambiguity is masked by the vanishing scale).
Eigen::Vector3d h1e_twist(const Vec4& wr, double s);

/// The unfold field K(V, s): rho'(V) at s = 0, rho'(-V) at s = 1.
Vec5 unfold_field(const Vec5& v, double s);
Vec5 rho_sigma_h1(const Vec5& v);

/// State of the column flow: first column gamma(s), carried column delta(s)
/// solving delta' = -<delta, gamma'> gamma.
struct V52State {
    Vec5 gamma, delta;
};

/// Flow from the frame h^_{5,2}(p^2 x) along the staged null homotopy of the
/// first column; sigma in [0, 1] (unfold on [0, 1/2], pole slide after).
/// The delta transport is the exact arc solution of the ODE.
V52State v52_flow(const Vec6& x, double sigma);

/// Terminal second column of the flow: tau~ : S^5 -> S^3 in coordinates
/// (Re w, Im w, alpha, beta).
Vec4 tau_tilde(const Vec6& x);

/// Transport delta along the circular arc gamma(theta) = C + cos(theta) P +
/// sin(theta) Q from theta0 to theta1 (exact solution of the lift ODE).
Vec transport_arc(const Vec& delta, const Vec& C, const Vec& P, const Vec& Q,
                  double theta0, double theta1);

}  // namespace hforge
