#include "hforge/group_element.hpp"

#include <stdexcept>
#include <vector>

namespace hforge {

GroupElement GroupElement::so(const Mat& m) {
    GroupElement g;
    g.tag = GroupTag::SO;
    g.real = m;
    return g;
}
GroupElement GroupElement::su(const Matc& m) {
    GroupElement g;
    g.tag = GroupTag::SU;
    g.cplx = m;
    return g;
}
GroupElement GroupElement::sp(const Mat& m) {
    GroupElement g;
    g.tag = GroupTag::Sp;
    g.real = m;
    return g;
}
GroupElement GroupElement::g2(const Mat& m) {
    GroupElement g;
    g.tag = GroupTag::G2;
    g.real = m;
    return g;
}
GroupElement GroupElement::spin7(const SpinTriple& t) {
    GroupElement g;
    g.tag = GroupTag::Spin7;
    g.triple = t;
    return g;
}
GroupElement GroupElement::spin8(const SpinTriple& t) {
    GroupElement g;
    g.tag = GroupTag::Spin8;
    g.triple = t;
    return g;
}

Eigen::Matrix4d quat_left_mat(const Quaternion& q) {
    Eigen::Matrix4d m;
    m << q.w, -q.x, -q.y, -q.z,
         q.x,  q.w, -q.z,  q.y,
         q.y,  q.z,  q.w, -q.x,
         q.z, -q.y,  q.x,  q.w;
    return m;
}

Eigen::Matrix4d quat_right_mat(const Quaternion& q) {
    Eigen::Matrix4d m;
    m << q.w, -q.x, -q.y, -q.z,
         q.x,  q.w,  q.z, -q.y,
         q.y, -q.z,  q.w,  q.x,
         q.z,  q.y, -q.x,  q.w;
    return m;
}

Mat quatmat_to_real(const std::vector<std::vector<Quaternion>>& q) {
    const int n = static_cast<int>(q.size());
    Mat m = Mat::Zero(4 * n, 4 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.block<4, 4>(4 * i, 4 * j) = quat_left_mat(q[i][j]);
    return m;
}

Quaternion quat_entry(const Mat& real4n, int i, int j) {
    return {real4n(4 * i + 0, 4 * j), real4n(4 * i + 1, 4 * j),
            real4n(4 * i + 2, 4 * j), real4n(4 * i + 3, 4 * j)};
}

Mat realify(const Matc& m) {
    const int r = static_cast<int>(m.rows()), c = static_cast<int>(m.cols());
    Mat out(2 * r, 2 * c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            const double a = m(i, j).real(), b = m(i, j).imag();
            out(2 * i, 2 * j) = a;
            out(2 * i, 2 * j + 1) = -b;
            out(2 * i + 1, 2 * j) = b;
            out(2 * i + 1, 2 * j + 1) = a;
        }
    return out;
}

Mat su3_to_im7(const Matc& u) {
    Mat m = Mat::Zero(7, 7);
    m(0, 0) = 1.0;
    m.block<6, 6>(1, 1) = realify(u);
    return m;
}

Mat8 g2_extend8(const Mat& m7) {
    Mat8 m = Mat8::Zero();
    m(0, 0) = 1.0;
    m.block<7, 7>(1, 1) = m7;
    return m;
}

Mat im7_restrict(const Mat8& m8) { return m8.block<7, 7>(1, 1); }

double triality_residual(const SpinTriple& t) {
    double res = 0.0;
    for (int i = 0; i < 8; ++i) {
        Vec8 ei = Vec8::Zero();
        ei(i) = 1.0;
        const Octonion xi = Octonion::from_coords(ei);
        const Vec8 bxi = t.B * ei;
        for (int j = 0; j < 8; ++j) {
            Vec8 ej = Vec8::Zero();
            ej(j) = 1.0;
            const Octonion xj = Octonion::from_coords(ej);
            const Vec8 lhs = t.A * oct_mul(xi, xj).coords();
            const Vec8 rhs = oct_mul(Octonion::from_coords(bxi),
                                     Octonion::from_coords(t.C * ej))
                                 .coords();
            res = std::max(res, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    }
    return res;
}

namespace {

double orth_residual(const Mat& m) {
    return (m.transpose() * m - Mat::Identity(m.rows(), m.cols()))
        .cwiseAbs()
        .maxCoeff();
}

double sp_structure_residual(const Mat& m) {
    // commutation with the right-scalar action rho(i), rho(j), rho(k)
    const int n = static_cast<int>(m.rows()) / 4;
    double res = 0.0;
    for (const Quaternion& q :
         {Quaternion::i(), Quaternion::j(), Quaternion::k()}) {
        Mat rq = Mat::Zero(4 * n, 4 * n);
        for (int b = 0; b < n; ++b) rq.block<4, 4>(4 * b, 4 * b) = quat_right_mat(q);
        res = std::max(res, (m * rq - rq * m).cwiseAbs().maxCoeff());
    }
    return res;
}

double g2_residual(const Mat& m7) {
    double res = orth_residual(m7);
    const Mat8 m8 = g2_extend8(m7);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Vec8 ei = Vec8::Zero(), ej = Vec8::Zero();
            ei(i) = 1.0;
            ej(j) = 1.0;
            const Vec8 lhs =
                m8 * oct_mul(Octonion::from_coords(ei), Octonion::from_coords(ej))
                         .coords();
            const Vec8 rhs = oct_mul(Octonion::from_coords(m8 * ei),
                                     Octonion::from_coords(m8 * ej))
                                 .coords();
            res = std::max(res, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    return res;
}

}  // namespace

MembershipReport membership(const GroupElement& g, double tol) {
    MembershipReport rep;
    double res = 0.0;
    switch (g.tag) {
        case GroupTag::SO:
            res = orth_residual(g.real);
            break;
        case GroupTag::SU: {
            const Matc m = g.cplx;
            res = (m.adjoint() * m - Matc::Identity(m.rows(), m.cols()))
                      .cwiseAbs()
                      .maxCoeff();
            res = std::max(res, std::abs(m.determinant() - Complex{1.0, 0.0}));
            break;
        }
        case GroupTag::Sp:
            res = std::max(orth_residual(g.real), sp_structure_residual(g.real));
            break;
        case GroupTag::G2:
            res = g2_residual(g.real);
            break;
        case GroupTag::Spin8:
        case GroupTag::Spin7: {
            res = std::max({orth_residual(g.triple.A), orth_residual(g.triple.B),
                            orth_residual(g.triple.C), triality_residual(g.triple)});
            if (g.tag == GroupTag::Spin7) {
                Vec8 one = Vec8::Zero();
                one(0) = 1.0;
                res = std::max(res, ((g.triple.A * one) - one).cwiseAbs().maxCoeff());
            }
            break;
        }
    }
    rep.residual = res;
    rep.ok = res < tol;
    return rep;
}

}  // namespace hforge
