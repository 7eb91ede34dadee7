#include "hforge/char_maps.hpp"

#include <cmath>
#include <stdexcept>

namespace hforge {

namespace {
constexpr double kPi = 3.14159265358979323846;
const Complex kI{0.0, 1.0};
}  // namespace

Matc phi_map(double tau, const Eigen::VectorXcd& z, double range_tol) {
    const int n = static_cast<int>(z.size());
    if (tau < -range_tol || tau > 2.0 * kPi / n + range_tol)
        throw std::invalid_argument("phi_map: tau out of [0, 2pi/n]");
    const Complex e = std::exp(-kI * tau);
    const Complex f = std::exp(kI * static_cast<double>(n) * tau) - 1.0;
    Matc m = Matc::Identity(n, n);
    m += z * f * z.adjoint();
    return e * m;
}

Eigen::Matrix3cd eta_map(const Eigen::Vector3cd& z) {
    Eigen::Matrix3cd m = z * z.transpose();
    const Complex z1 = z(0), z2 = z(1), z3 = z(2);
    Eigen::Matrix3cd a;
    a << 0.0, -std::conj(z3), std::conj(z2),
         std::conj(z3), 0.0, -std::conj(z1),
         -std::conj(z2), std::conj(z1), 0.0;
    return m + a;
}

Mat theta_map() {
    Mat m = Mat::Zero(7, 7);
    m(0, 0) = -1.0;  // iy -> -iy
    for (int k = 0; k < 3; ++k) {
        m(1 + 2 * k, 1 + 2 * k) = 1.0;    // Re z_k fixed
        m(2 + 2 * k, 2 + 2 * k) = -1.0;   // Im z_k negated
    }
    return m;
}

Mat psi_map(const Vec7& p) {
    Vec8 pv = Vec8::Zero();
    pv.tail(7) = p;
    const Octonion po = Octonion::from_coords(pv);
    // exp(-2 pi p / 3) = cos(2pi/3) - sin(2pi/3) p for unit imaginary p
    const Octonion a = Octonion::one() * std::cos(2.0 * kPi / 3.0) -
                       po * std::sin(2.0 * kPi / 3.0);
    const MultOperators ops = mult_operators(a);
    return im7_restrict(ops.C);
}

Eigen::Matrix2cd h_su3(double tau, Complex z, Complex w, double s) {
    Eigen::Matrix2cd U, D, R;
    U << z, -std::conj(w), w, std::conj(z);
    D << std::exp(kI * tau), 0.0, 0.0, std::exp(-kI * tau);
    R << std::cos(s), -std::sin(s), std::sin(s), std::cos(s);
    return (U * D * U.adjoint()) * (U * R * D * R.transpose() * U.adjoint());
}

Matc char_su(int n, double y, const Eigen::VectorXcd& z) {
    const double nz = z.norm();
    Matc pre = Matc::Identity(n + 1, n + 1);
    pre(0, 0) = -1.0;
    for (int i = 1; i <= n; ++i) pre(i, i) = std::exp(kI * kPi / double(n));
    Matc blk = Matc::Identity(n + 1, n + 1);
    const double tau = kPi / n * (y + 1.0);
    if (nz < 1e-13) {
        // polar collapse: phi is the central scalar e^{-i tau} at tau in {0, 2pi/n}
        const Complex c = std::exp(-kI * tau);
        for (int i = 1; i <= n; ++i) blk(i, i) = c;
    } else {
        blk.block(1, 1, n, n) = phi_map(tau, z / nz);
    }
    return pre * blk;
}

Mat char_sp(int n, const Quaternion& p, const std::vector<Quaternion>& u) {
    if (static_cast<int>(u.size()) != n)
        throw std::invalid_argument("char_sp: u must have n entries");
    double un2 = 0.0;
    for (const auto& q : u) un2 += q.norm2();
    const double un = std::sqrt(un2);
    std::vector<std::vector<Quaternion>> m(n, std::vector<Quaternion>(n));
    const Quaternion epp = quat_exp(Quaternion{0, p.x, p.y, p.z} * kPi);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Quaternion{};
    if (un < 1e-13) {
        // analytic extension at u = 0: e^{pi p} is central (-1), value is 1
        for (int i = 0; i < n; ++i) m[i][i] = Quaternion::one();
        const Quaternion central = epp + Quaternion::one();
        // 1 - uhat (1 + e^{pi p}) uhat^bar -> 1 when e^{pi p} = -1
        if (central.norm() > 1e-9)
            throw std::invalid_argument("char_sp: u = 0 requires |p| = 1");
        return quatmat_to_real(m);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Quaternion term =
                (u[i] * (1.0 / un)) * (Quaternion::one() + epp) * (u[j].conj() * (1.0 / un));
            m[i][j] = ((i == j) ? Quaternion::one() : Quaternion{}) - term;
        }
    }
    return quatmat_to_real(m);
}

Quaternion char_sp2(const Quaternion& p, const Quaternion& u) {
    const Quaternion epp = quat_exp(Quaternion{0, p.x, p.y, p.z} * kPi);
    const double un = u.norm();
    if (un < 1e-13) {
        // analytic extension: u -> 0 forces |p| = 1, e^{pi p} = -1 central
        return -epp;
    }
    const Quaternion uh = u * (1.0 / un);
    return -(uh * epp * uh.conj());
}

Mat char_g2(const Eigen::Vector3cd& z) {
    const Eigen::Matrix3cd e = eta_map(-kI * z);
    return su3_to_im7(e) * theta_map();
}

namespace {
Octonion geo_oct(const Vec7& v, double t) {
    Vec8 x = Vec8::Zero();
    x(0) = std::cos(t);
    x.tail(7) = v * std::sin(t);
    return Octonion::from_coords(x);
}
}  // namespace

SpinTriple closed_lift_spin7(const Vec7& v, double t) {
    const Octonion g = geo_oct(v, t / 3.0);
    const Octonion g2o = oct_mul(g, g);
    const Octonion gc = g.conj();
    const Octonion gc2 = oct_mul(gc, gc);
    const MultOperators og = mult_operators(g);
    const MultOperators og2 = mult_operators(g2o);
    const MultOperators ogc = mult_operators(gc);
    const MultOperators ogc2 = mult_operators(gc2);
    SpinTriple trip;
    trip.A = og.C;
    trip.B = og.L * og2.R;
    trip.C = ogc2.L * ogc.R;
    return trip;
}

SpinTriple char_spin7(const Vec7& v) { return closed_lift_spin7(v, kPi); }

Matc closed_lift_su(int n, double y, const Eigen::VectorXcd& z, double t) {
    const double nz = z.norm();
    Matc m(n + 1, n + 1);
    const Complex eiyt = std::exp(kI * y * t);
    if (nz < 1e-13) {
        m = Matc::Identity(n + 1, n + 1);
        m(0, 0) = std::cos(t) + kI * y * std::sin(t);
        // analytic extension at z = 0: diag(e^{iyt}, 1, ..., 1) with y = +-1
        m(0, 0) = eiyt;
        Matc tailfix = Matc::Identity(n + 1, n + 1);
        for (int i = 1; i <= n; ++i) tailfix(i, i) = std::exp(-kI * y * t / double(n));
        return m * tailfix;
    }
    const Eigen::VectorXcd zh = z / nz;
    Matc c0 = Matc::Zero(n + 1, n + 1);
    c0.block(1, 1, n, n) =
        Matc::Identity(n, n) - zh * zh.adjoint();
    Matc c1 = Matc::Zero(n + 1, n + 1);
    c1(0, 0) = 1.0;
    c1.block(1, 1, n, n) = zh * eiyt * zh.adjoint();
    Matc c2 = Matc::Zero(n + 1, n + 1);
    c2(0, 0) = kI * y;
    c2.block(0, 1, 1, n) = -(eiyt * z.conjugate()).transpose();
    c2.block(1, 0, n, 1) = z;
    c2.block(1, 1, n, n) = -zh * (kI * y * eiyt) * zh.adjoint();
    Matc tail = Matc::Identity(n + 1, n + 1);
    for (int i = 1; i <= n; ++i) tail(i, i) = std::exp(-kI * y * t / double(n));
    return (c0 + std::cos(t) * c1 + std::sin(t) * c2) * tail;
}

Mat closed_lift_sp(int n, const Quaternion& p, const std::vector<Quaternion>& u,
                   double t) {
    if (static_cast<int>(u.size()) != n)
        throw std::invalid_argument("closed_lift_sp: u must have n entries");
    double un2 = 0.0;
    for (const auto& q : u) un2 += q.norm2();
    const double un = std::sqrt(un2);
    const Quaternion pq{0, p.x, p.y, p.z};
    const Quaternion etp = quat_exp(pq * t);
    const double ct = std::cos(t), st = std::sin(t);
    std::vector<std::vector<Quaternion>> m(n + 1, std::vector<Quaternion>(n + 1));
    // top-left entry: cos t + p sin t
    m[0][0] = Quaternion{ct, 0, 0, 0} + pq * st;
    if (un < 1e-13) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) m[i][j] = (i == j) ? Quaternion::one() : Quaternion{};
            m[0][i] = Quaternion{};
            m[i][0] = Quaternion{};
        }
        return quatmat_to_real(m);
    }
    for (int i = 1; i <= n; ++i) {
        m[0][i] = -st * (etp * u[i - 1].conj());
        m[i][0] = st * u[i - 1];
        for (int j = 1; j <= n; ++j) {
            const Quaternion uh_i = u[i - 1] * (1.0 / un);
            const Quaternion uh_j = u[j - 1] * (1.0 / un);
            Quaternion val = ((i == j) ? Quaternion::one() : Quaternion{}) -
                             uh_i * uh_j.conj();
            val = val + ct * (uh_i * etp * uh_j.conj());
            val = val - st * (uh_i * (pq * etp) * uh_j.conj());
            m[i][j] = val;
        }
    }
    return quatmat_to_real(m);
}

Mat closed_lift_g2(const Eigen::Vector3cd& zdir, double t) {
    // Reference lift along the direction e2 (z = (1,0,0)); frame curve columns.
    auto frame = [](double tt) {
        Mat g = Mat::Zero(7, 7);
        const double c = std::cos(tt), s = std::sin(tt);
        const double ch = std::cos(tt / 2.0), sh = std::sin(tt / 2.0);
        // columns are e_k(t) in e-coords (x1..x7)
        Vec7 col;
        col.setZero(); col(0) = c; col(1) = s; g.col(0) = col;                  // e1(t)
        col.setZero(); col(0) = -s; col(1) = c; g.col(1) = col;                 // e2(t)
        col.setZero(); col(2) = 1.0; g.col(2) = col;                            // e3
        col.setZero(); col(3) = ch; col(6) = -sh; g.col(3) = col;               // e4(t)
        col.setZero(); col(4) = ch; col(5) = -sh; g.col(4) = col;               // e5(t)
        col.setZero(); col(4) = sh; col(5) = ch; g.col(5) = col;                // e6(t)
        col.setZero(); col(3) = sh; col(6) = ch; g.col(6) = col;                // e7(t)
        return g;
    };
    // Conjugate by U in SU(3) with first column zdir (equivariance of the lift).
    Eigen::Matrix3cd u = Eigen::Matrix3cd::Zero();
    u.col(0) = zdir;
    // complete an orthonormal basis
    int pivot = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(zdir(i)) < std::abs(zdir(pivot))) pivot = i;
    Eigen::Vector3cd a = Eigen::Vector3cd::Zero();
    a(pivot) = 1.0;
    Eigen::Vector3cd c1 = a - zdir.dot(a) * zdir;
    c1.normalize();
    u.col(1) = c1;
    u.col(2) = cross_c3(zdir, c1);
    // fix determinant to 1 by scaling the last column
    const Complex det = u.determinant();
    u.col(2) /= det;
    const Mat ur = su3_to_im7(u);
    return ur * frame(t) * ur.transpose();
}

Matc su_fiber_identification(int n) {
    Matc m = Matc::Identity(n + 1, n + 1);
    m(0, 0) = -1.0;
    for (int i = 1; i <= n; ++i) m(i, i) = std::exp(kI * kPi / double(n));
    return m.inverse();
}

Mat sp_fiber_identification(int n) {
    std::vector<std::vector<Quaternion>> m(n + 1, std::vector<Quaternion>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            m[i][j] = (i == j) ? ((i == 0) ? -Quaternion::one() : Quaternion::one())
                               : Quaternion{};
    return quatmat_to_real(m);
}

SpinTriple spin7_fiber_identification() {
    SpinTriple t;
    t.A = Mat8::Identity();
    t.B = -Mat8::Identity();
    t.C = -Mat8::Identity();
    return t;
}

SpinTriple triple_mul(const SpinTriple& a, const SpinTriple& b) {
    return {a.A * b.A, a.B * b.B, a.C * b.C};
}

SpinTriple triple_inverse(const SpinTriple& a) {
    return {a.A.transpose(), a.B.transpose(), a.C.transpose()};
}

}  // namespace hforge
