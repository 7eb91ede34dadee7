#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hforge/char_maps.hpp"
#include "hforge/group_element.hpp"

namespace hforge {

/// Infinitesimal triality triples (X, Y, Z) with X(xy) = Y(x)y + x Z(y) and
/// X(1) = 0, solved numerically over the 64 basis pairs and orthonormalized
/// with respect to the summed trace inner product.
struct SpinAlgebraBases {
    std::vector<SpinTriple> spin7;      ///< dimension 21
    std::vector<SpinTriple> spin5;      ///< X e1 = X e2 = 0, dimension 10
    std::vector<SpinTriple> g2;         ///< X = Y = Z, dimension 14
    std::vector<SpinTriple> su2_fiber;  ///< spin5 diagonal triples, dimension 3
};

/// Memoized; throws when the numeric ranks disagree with 21/10/14/3.
const SpinAlgebraBases& spin7_algebra_basis();

/// The quaternionic chart on O adapted to the frame-(e1,e2) copy of
/// Sp(2) = Spin(5) inside Spin(7):
///   u = x0 + x1 i + x2 j + x3 k,  v = x4 - x5 i + x6 j + x7 k.
/// chart_basis() columns express the chart frame in octonion coordinates.
const Mat8& sp2_chart_basis();

struct ChartPoint {
    Quaternion p;  ///< imaginary part of the first slot
    Quaternion u;  ///< second slot
};
/// Split a unit tangent vector at 1 (e-coordinates, 7 components).
ChartPoint sp2_chart_tangent(const Vec7& v);
Vec7 sp2_chart_tangent_inv(const ChartPoint& c);

/// Octonion coordinates of an H^2 column (u, v).
Vec8 chart_to_oct(const Quaternion& u, const Quaternion& v);

/// G2-fiber element over the frame (e1, e2) corresponding to a unit
/// quaternion: the automorphism fixing the quaternion subalgebra
/// span{1, e1, e2, e3} pointwise. Returned as the 7x7 action on Im O.
Mat g2_fiber_from_quaternion(const Quaternion& q);
/// Inverse chart: reads the quaternion off a fiber element.
Quaternion quaternion_from_g2_fiber(const Mat& m7);

/// Embeds a quaternionic 2x2 matrix (structured real 8x8 form) into the
/// Spin(5) copy of Spin(7) adapted to the chart. B is the H^2 action read
/// through the chart; A and C are recovered from the triality relation.
SpinTriple embed_sp2(const Mat& sp2_real8);

/// 7x7 restriction of the pullback isometry, as used to transport tangent
/// directions between the kappa conventions.
Mat sigma_tilde_im7();

/// The G2 element sending the frame (e1, e2) to the orthonormal frame
/// (w1, w2): images of the remaining basis vectors are reconstructed from
/// octonion products of a deterministically completed basic triple.
Mat g2_element_from_frame(const Vec7& w1, const Vec7& w2);

}  // namespace hforge
