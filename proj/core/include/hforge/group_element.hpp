#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>

#include "hforge/octonion.hpp"

namespace hforge {

using Matc = Eigen::MatrixXcd;
using Mat = Eigen::MatrixXd;

enum class GroupTag { SO, SU, Sp, G2, Spin7, Spin8 };

/// Triple of rotations of O for the triality model of Spin(8)/Spin(7).
struct SpinTriple {
    Mat8 A, B, C;
};

/// Group element: a tagged payload. SU carries a complex matrix; SO and Sp
/// carry real matrices (Sp as the structured real 4n x 4n form); G2 carries
/// the 7x7 action on Im O; Spin tags carry triples.
struct GroupElement {
    GroupTag tag = GroupTag::SO;
    Mat real;      ///< SO / Sp / G2 payload
    Matc cplx;     ///< SU payload
    SpinTriple triple;  ///< Spin payload

    static GroupElement so(const Mat& m);
    static GroupElement su(const Matc& m);
    static GroupElement sp(const Mat& real4n);
    static GroupElement g2(const Mat& m7);
    static GroupElement spin7(const SpinTriple& t);
    static GroupElement spin8(const SpinTriple& t);
};

struct MembershipReport {
    bool ok = false;
    double residual = 0.0;
};

/// Evaluates the defining relations of the element's tag. Multiplicativity
/// for G2/Spin is checked on all 64 basis pairs.
MembershipReport membership(const GroupElement& g, double tol = 1e-9);

/// Left-multiplication matrix of a quaternion (acts on coefficient columns).
Eigen::Matrix4d quat_left_mat(const Quaternion& q);
/// Right-multiplication matrix.
Eigen::Matrix4d quat_right_mat(const Quaternion& q);

/// Structured real form of a quaternionic n x n matrix (blocks are
/// left-multiplication matrices), acting on H^n coefficient columns.
Mat quatmat_to_real(const std::vector<std::vector<Quaternion>>& q);
Quaternion quat_entry(const Mat& real4n, int i, int j);

/// Realified complex matrix: (a+bi) entries become 2x2 blocks [a,-b;b,a]
/// acting on interleaved (Re, Im) coordinates.
Mat realify(const Matc& m);

/// SU(3) acting on Im O = iR x C^3 as a 7x7 real matrix (fixes the iR slot).
Mat su3_to_im7(const Matc& u);

/// Extend a 7x7 action on Im O to 8x8 fixing the real unit.
Mat8 g2_extend8(const Mat& m7);
Mat im7_restrict(const Mat8& m8);

/// Residual of the triality relation A(xy) = B(x)C(y) over basis pairs.
double triality_residual(const SpinTriple& t);

}  // namespace hforge
