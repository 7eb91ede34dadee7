#include "hforge/spin_algebra.hpp"

#include <Eigen/SVD>
#include <mutex>
#include <stdexcept>

namespace hforge {

namespace {

// so(8) basis: E_{ij} - E_{ji} for i < j, flattened index.
std::vector<Mat8> so8_basis() {
    std::vector<Mat8> b;
    b.reserve(28);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            Mat8 m = Mat8::Zero();
            m(i, j) = 1.0;
            m(j, i) = -1.0;
            b.push_back(m);
        }
    return b;
}

SpinTriple unpack(const Eigen::VectorXd& v, const std::vector<Mat8>& so8) {
    SpinTriple t;
    t.A.setZero();
    t.B.setZero();
    t.C.setZero();
    for (int k = 0; k < 28; ++k) {
        t.A += v(k) * so8[k];
        t.B += v(28 + k) * so8[k];
        t.C += v(56 + k) * so8[k];
    }
    return t;
}

double triple_ip(const SpinTriple& a, const SpinTriple& b) {
    return (a.A.transpose() * b.A).trace() + (a.B.transpose() * b.B).trace() +
           (a.C.transpose() * b.C).trace();
}

std::vector<SpinTriple> orthonormalize(std::vector<SpinTriple> in,
                                       const std::vector<SpinTriple>& against = {}) {
    std::vector<SpinTriple> out = against;
    std::vector<SpinTriple> res;
    for (SpinTriple t : in) {
        for (const SpinTriple& o : out) {
            const double c = triple_ip(o, t) / triple_ip(o, o);
            t.A -= c * o.A;
            t.B -= c * o.B;
            t.C -= c * o.C;
        }
        const double n = std::sqrt(triple_ip(t, t));
        if (n > 1e-8) {
            t.A /= n;
            t.B /= n;
            t.C /= n;
            out.push_back(t);
            res.push_back(t);
        }
    }
    return res;
}

// Null space (rows) of A with singular values below tol.
Eigen::MatrixXd nullspace(const Eigen::MatrixXd& A, double tol) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const int n = static_cast<int>(A.cols());
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > tol) ++rank;
    return svd.matrixV().rightCols(n - rank).transpose();
}

SpinAlgebraBases build_bases() {
    const std::vector<Mat8> so8 = so8_basis();
    // Rows: X(ei ej) - Y(ei) ej - ei Z(ej) = 0 over 64 pairs, plus X(1) = 0.
    Eigen::MatrixXd sys(8 * 65, 84);
    int row = 0;
    std::vector<Octonion> basis;
    for (int i = 0; i < 8; ++i) {
        Vec8 e = Vec8::Zero();
        e(i) = 1.0;
        basis.push_back(Octonion::from_coords(e));
    }
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const Vec8 eij = oct_mul(basis[i], basis[j]).coords();
            for (int k = 0; k < 28; ++k) {
                const Vec8 bx = so8[k] * eij;
                const Vec8 by =
                    oct_mul(Octonion::from_coords(so8[k] * basis[i].coords()), basis[j])
                        .coords();
                const Vec8 bz =
                    oct_mul(basis[i], Octonion::from_coords(so8[k] * basis[j].coords()))
                        .coords();
                sys.block<8, 1>(row, k) = bx;
                sys.block<8, 1>(row, 28 + k) = -by;
                sys.block<8, 1>(row, 56 + k) = -bz;
            }
            row += 8;
        }
    }
    for (int k = 0; k < 28; ++k) {
        sys.block<8, 1>(row, k) = so8[k] * basis[0].coords();
        sys.block<8, 1>(row, 28 + k).setZero();
        sys.block<8, 1>(row, 56 + k).setZero();
    }

    const Eigen::MatrixXd ns = nullspace(sys, 1e-8);
    if (ns.rows() != 21)
        throw std::runtime_error("spin7_algebra_basis: rank disagreement (expected 21)");

    std::vector<SpinTriple> spin7;
    for (int r = 0; r < ns.rows(); ++r) spin7.push_back(unpack(ns.row(r), so8));

    // spin5: coefficients a with sum a_r (X_r e1, X_r e2) = 0
    Eigen::MatrixXd c5(16, 21);
    for (int r = 0; r < 21; ++r) {
        c5.block<8, 1>(0, r) = spin7[r].A * basis[1].coords();
        c5.block<8, 1>(8, r) = spin7[r].A * basis[2].coords();
    }
    const Eigen::MatrixXd n5 = nullspace(c5, 1e-8);
    if (n5.rows() != 10)
        throw std::runtime_error("spin7_algebra_basis: spin5 rank disagreement (expected 10)");
    std::vector<SpinTriple> spin5;
    for (int r = 0; r < n5.rows(); ++r) {
        SpinTriple t;
        t.A.setZero(); t.B.setZero(); t.C.setZero();
        for (int k = 0; k < 21; ++k) {
            t.A += n5(r, k) * spin7[k].A;
            t.B += n5(r, k) * spin7[k].B;
            t.C += n5(r, k) * spin7[k].C;
        }
        spin5.push_back(t);
    }

    // g2: X = Y = Z within spin7
    Eigen::MatrixXd cg(128, 21);
    for (int r = 0; r < 21; ++r) {
        const Mat8 dy = spin7[r].A - spin7[r].B;
        const Mat8 dz = spin7[r].A - spin7[r].C;
        cg.block<64, 1>(0, r) = Eigen::Map<const Eigen::VectorXd>(dy.data(), 64);
        cg.block<64, 1>(64, r) = Eigen::Map<const Eigen::VectorXd>(dz.data(), 64);
    }
    const Eigen::MatrixXd ng = nullspace(cg, 1e-8);
    if (ng.rows() != 14)
        throw std::runtime_error("spin7_algebra_basis: g2 rank disagreement (expected 14)");
    std::vector<SpinTriple> g2;
    for (int r = 0; r < ng.rows(); ++r) {
        SpinTriple t;
        t.A.setZero(); t.B.setZero(); t.C.setZero();
        for (int k = 0; k < 21; ++k) {
            t.A += ng(r, k) * spin7[k].A;
            t.B += ng(r, k) * spin7[k].B;
            t.C += ng(r, k) * spin7[k].C;
        }
        g2.push_back(t);
    }

    // su2 fiber: diagonal triples inside spin5
    Eigen::MatrixXd cf(128, 10);
    for (int r = 0; r < 10; ++r) {
        const Mat8 dy = spin5[r].A - spin5[r].B;
        const Mat8 dz = spin5[r].A - spin5[r].C;
        cf.block<64, 1>(0, r) = Eigen::Map<const Eigen::VectorXd>(dy.data(), 64);
        cf.block<64, 1>(64, r) = Eigen::Map<const Eigen::VectorXd>(dz.data(), 64);
    }
    const Eigen::MatrixXd nf = nullspace(cf, 1e-8);
    if (nf.rows() != 3)
        throw std::runtime_error("spin7_algebra_basis: fiber rank disagreement (expected 3)");
    std::vector<SpinTriple> su2;
    for (int r = 0; r < nf.rows(); ++r) {
        SpinTriple t;
        t.A.setZero(); t.B.setZero(); t.C.setZero();
        for (int k = 0; k < 10; ++k) {
            t.A += nf(r, k) * spin5[k].A;
            t.B += nf(r, k) * spin5[k].B;
            t.C += nf(r, k) * spin5[k].C;
        }
        su2.push_back(t);
    }

    SpinAlgebraBases out;
    out.su2_fiber = orthonormalize(su2);
    out.spin5 = out.su2_fiber;
    {
        auto rest = orthonormalize(spin5, out.su2_fiber);
        out.spin5.insert(out.spin5.end(), rest.begin(), rest.end());
    }
    out.g2 = orthonormalize(g2);
    out.spin7 = orthonormalize(spin7);
    return out;
}

}  // namespace

const SpinAlgebraBases& spin7_algebra_basis() {
    static const SpinAlgebraBases bases = build_bases();
    return bases;
}

const Mat8& sp2_chart_basis() {
    static const Mat8 cb = [] {
        Mat8 m = Mat8::Identity();
        m(5, 5) = -1.0;  // chart frame: (1, e1, e2, e3, e4, -e5, e6, e7)
        return m;
    }();
    return cb;
}

ChartPoint sp2_chart_tangent(const Vec7& v) {
    ChartPoint c;
    c.p = {0.0, v(0), v(1), v(2)};
    c.u = {v(3), -v(4), v(5), v(6)};
    return c;
}

Vec7 sp2_chart_tangent_inv(const ChartPoint& c) {
    Vec7 v;
    v << c.p.x, c.p.y, c.p.z, c.u.w, -c.u.x, c.u.y, c.u.z;
    return v;
}

Vec8 chart_to_oct(const Quaternion& u, const Quaternion& v) {
    Vec8 x;
    x << u.w, u.x, u.y, u.z, v.w, -v.x, v.y, v.z;
    return x;
}

Mat g2_fiber_from_quaternion(const Quaternion& q) {
    Mat8 block = Mat8::Identity();
    block.block<4, 4>(4, 4) = quat_left_mat(q);
    const Mat8& cb = sp2_chart_basis();
    return im7_restrict(cb * block * cb.transpose());
}

Quaternion quaternion_from_g2_fiber(const Mat& m7) {
    const Mat8 m8 = g2_extend8(m7);
    const Mat8& cb = sp2_chart_basis();
    const Mat8 block = cb.transpose() * m8 * cb;
    return {block(4, 4), block(5, 4), block(6, 4), block(7, 4)};
}

SpinTriple embed_sp2(const Mat& sp2_real8) {
    const Mat8& cb = sp2_chart_basis();
    SpinTriple t;
    t.B = cb * sp2_real8 * cb.transpose();
    Vec8 one = Vec8::Zero();
    one(0) = 1.0;
    const Octonion b = Octonion::from_coords(t.B * one);
    const MultOperators ops = mult_operators(b.conj());
    t.A = ops.R * t.B;  // A(x) = B(x) . conj(B(1))
    t.C = ops.L * t.A;  // C(y) = conj(B(1)) . A(y)
    return t;
}

Mat sigma_tilde_im7() { return pullback_isometry_im(); }

namespace {
Octonion im_oct(const Vec7& v) {
    Vec8 x = Vec8::Zero();
    x.tail<7>() = v;
    return Octonion::from_coords(x);
}
}  // namespace

Mat g2_element_from_frame(const Vec7& w1, const Vec7& w2) {
    const Octonion o1 = im_oct(w1), o2 = im_oct(w2);
    const Octonion o12 = oct_mul(o1, o2);
    // complete a basic triple: w4 unit, orthogonal to 1, w1, w2, w1 w2
    Vec8 span[4] = {Vec8::Zero(), o1.coords(), o2.coords(), o12.coords()};
    span[0](0) = 1.0;
    Vec8 w4 = Vec8::Zero();
    for (int axis = 1; axis < 8 && w4.norm() < 0.5; ++axis) {
        Vec8 cand = Vec8::Zero();
        cand(axis) = 1.0;
        for (const auto& s : span) cand -= s.dot(cand) * s;
        if (cand.norm() > 0.3) w4 = cand / cand.norm();
    }
    if (w4.norm() < 0.5)
        throw std::runtime_error("g2_element_from_frame: basic triple completion failed");
    const Octonion o4 = Octonion::from_coords(w4);
    Mat g(7, 7);
    g.col(0) = w1;
    g.col(1) = w2;
    g.col(2) = -o12.coords().tail<7>();
    g.col(3) = o4.coords().tail<7>();
    g.col(4) = -oct_mul(o1, o4).coords().tail<7>();
    g.col(5) = oct_mul(o2, o4).coords().tail<7>();
    g.col(6) = oct_mul(o12, o4).coords().tail<7>();
    return g;
}

}  // namespace hforge
