#include "hforge/tau.hpp"

#include <cmath>
#include <stdexcept>

#include "hforge/isometries.hpp"
#include "hforge/octonion.hpp"
#include "hforge/quaternion.hpp"

namespace hforge {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::pair<double, Complex> h1_extended(Complex z0, Complex z1) {
    const double A = std::sqrt(std::norm(z0) + std::norm(z1));
    if (A < 1e-14) return {0.0, Complex{0, 0}};
    return {(std::norm(z0) - std::norm(z1)) / A, 2.0 * std::conj(z0) * z1 / A};
}

std::pair<double, Complex> h2_extended(Complex z0, Complex z1) {
    const double A = std::sqrt(std::norm(z0) + std::norm(z1));
    if (A < 1e-14) return {0.0, Complex{0, 0}};
    return {-2.0 * (z0 * z1).real() / A,
            (std::conj(z0) * std::conj(z0) - z1 * z1) / A};
}

const Mat& rot5_log() {
    static const Mat l = so_log(isometry_f5());
    return l;
}
const Mat& rot6_log() {
    static const Mat l = so_log(isometry_f6());
    return l;
}

// J4: block generator of the antipode path on (slot0, slot1) + (slot2, slot3).
Vec4 j4(const Vec4& w) {
    Vec4 out;
    out << -w(1), w(0), -w(3), w(2);
    return out;
}

Vec5 polar_dir5(const Vec6& x, double& T) {
    const double x0 = x(0);
    const Vec5 rest = x.tail<5>();
    const double r = rest.norm();
    T = std::atan2(r, x0);
    if (r < 1e-14) {
        Vec5 v = Vec5::Zero();
        v(0) = 1.0;
        return v;
    }
    return Vec5(rest / r);
}

}  // namespace

std::pair<Vec5, Vec5> h52_tilde(const Vec6& y) {
    const Complex z0{y(0), y(1)}, z1{y(2), y(3)};
    const double a = y(4), b = y(5);
    const auto [r1, w1] = h1_extended(z0, z1);
    const auto [r2, w2] = h2_extended(z0, z1);
    Vec5 c1, c2;
    c1 << r1, w1.real(), w1.imag(), a, b;
    c2 << r2, w2.real(), w2.imag(), b, -a;
    return {c1, c2};
}

std::pair<Vec5, Vec5> h52_hat(const Vec6& y, double s5, double s6) {
    static const Mat f5full = isometry_f5();
    static const Mat f6full = isometry_f6();
    const Mat r5 = (s5 == 1.0) ? f5full : mat_exp(s5 * rot5_log());
    const Mat r6 = (s6 == 1.0) ? f6full : mat_exp(s6 * rot6_log());
    const Vec6 yr = r5 * y;
    auto [c1, c2] = h52_tilde(yr);
    return {Vec5(r6 * c1), Vec5(r6 * c2)};
}

Eigen::Vector3d h1e_twist(const Vec4& wr, double s) {
    // wr = (Re z1, Im z1, a, b); q = (a, -b, Re z1, -Im z1); axis i(s).
    const Quaternion q{wr(2), -wr(3), wr(0), -wr(1)};
    const double nq = q.norm();
    if (nq < 1e-15) return Eigen::Vector3d::Zero();
    const Quaternion axis = Quaternion::i() * std::cos(kPi * s) +
                            Quaternion::k() * std::sin(kPi * s);
    const Quaternion w = q.conj() * axis * q * (1.0 / nq);
    return {w.x, w.z, w.y};  // slot swap (w1, w3, w2)
}

Vec5 rho_sigma_h1(const Vec5& v) {
    Vec5 out;
    out(0) = v(0);
    out.tail<3>() = h1e_twist(v.tail<4>(), 0.0);
    return out;
}

Vec5 unfold_field(const Vec5& v, double s) {
    if (s <= 0.5) {
        Vec5 out;
        out(0) = v(0);
        out.tail<3>() = h1e_twist(v.tail<4>(), 2.0 * s);
        return out;
    }
    Vec4 base;
    base(0) = v(0);
    base.tail<3>() = -h1e_twist(v.tail<4>(), 0.0);
    const double th = kPi * (2.0 * s - 1.0);
    const Vec4 rot = std::cos(th) * base + std::sin(th) * j4(base);
    Vec5 out;
    out << rot(0), rot(1), rot(2), rot(3);
    // A4 acts on (slot0, slot1)+(slot2, slot3) of the 4-dim field; embed back
    Vec5 res;
    res(0) = rot(0);
    res.tail<3>() << rot(1), rot(2), rot(3);
    return res;
}

Vec transport_arc(const Vec& delta, const Vec& C, const Vec& P, const Vec& Q,
                  double theta0, double theta1) {
    const double r = P.norm();
    if (r < 1e-15 || std::abs(theta1 - theta0) < 1e-300) return delta;
    const double m = C.norm();
    const Vec rho0 = (std::cos(theta0) * P + std::sin(theta0) * Q) / r;
    const Vec tau0 = (-std::sin(theta0) * P + std::cos(theta0) * Q) / r;
    const Vec rho1 = (std::cos(theta1) * P + std::sin(theta1) * Q) / r;
    const Vec tau1 = (-std::sin(theta1) * P + std::cos(theta1) * Q) / r;
    const double b0 = delta.dot(rho0);
    const double c0 = delta.dot(tau0);
    double a0 = 0.0;
    Vec nhat;
    if (m > 1e-14) {
        nhat = C / m;
        a0 = delta.dot(nhat);
    }
    Vec perp = delta - b0 * rho0 - c0 * tau0;
    if (m > 1e-14) perp -= a0 * nhat;
    const double d = theta1 - theta0;
    double b1, c1, a1;
    if (m > 1e-9) {
        const double cm = std::cos(m * d), sm = std::sin(m * d);
        b1 = b0 * cm + m * c0 * sm;
        c1 = c0 * cm - (b0 / m) * sm;
        a1 = a0 - r * (c0 * sm + (b0 / m) * (cm - 1.0));
    } else {
        b1 = b0;
        c1 = c0 - b0 * d;
        a1 = a0;
    }
    Vec out = perp + b1 * rho1 + c1 * tau1;
    if (m > 1e-14) out += a1 * nhat;
    return out;
}

V52State v52_flow(const Vec6& x, double sigma) {
    double T;
    const Vec5 V = polar_dir5(x, T);
    auto [g0, d0] = h52_hat(Vec6(power_map(x, 2).eval()));
    Vec delta = d0;
    Vec5 gamma = g0;
    const double cos2t = std::cos(2.0 * T);
    const double abss = std::abs(std::sin(2.0 * T));
    const bool lower = T > kPi / 2.0;

    // ---- unfold phase: sigma in [0, 1/2] ----
    const double su = std::min(1.0, 2.0 * std::max(0.0, sigma));
    if (lower && su > 0.0 && abss > 1e-15) {
        // sub-arc U1: A4 path, flow-param [0, 1/2]; K parameter from 1 to 1/2
        Vec4 base;
        base(0) = V(0);
        base.tail<3>() = -h1e_twist(V.tail<4>(), 0.0);
        Vec C = Vec::Zero(5), P = Vec::Zero(5), Q = Vec::Zero(5);
        C(0) = cos2t;
        P.tail(4) = abss * base;
        Q.tail(4) = abss * j4(base);
        const double u1 = std::min(su, 0.5) * 2.0;  // in [0,1]
        delta = transport_arc(delta, C, P, Q, kPi, kPi * (1.0 - u1));
        Vec g = C + std::cos(kPi * (1.0 - u1)) * P + std::sin(kPi * (1.0 - u1)) * Q;
        gamma = Vec5(g);
        if (su > 0.5) {
            // sub-arc U2: axis twist, K twist parameter from 1 to 0
            const Eigen::Vector3d wi = h1e_twist(V.tail<4>(), 0.0);
            const Eigen::Vector3d wk = h1e_twist(V.tail<4>(), 0.5);
            Vec C2 = Vec::Zero(5), P2 = Vec::Zero(5), Q2 = Vec::Zero(5);
            C2(0) = cos2t;
            C2(1) = abss * V(0);
            P2.tail(3) = abss * wi;
            Q2.tail(3) = abss * wk;
            const double u2 = (su - 0.5) * 2.0;  // in [0,1]
            delta = transport_arc(delta, C2, P2, Q2, kPi, kPi * (1.0 - u2));
            Vec g2 = C2 + std::cos(kPi * (1.0 - u2)) * P2 + std::sin(kPi * (1.0 - u2)) * Q2;
            gamma = Vec5(g2);
        }
    }
    if (sigma <= 0.5) {
        V52State st;
        st.gamma = gamma;
        st.delta = Vec5(delta);
        return st;
    }

    // ---- pole slide: great-circle arc toward the north pole ----
    const Vec5 rho = rho_sigma_h1(V);
    Vec P = Vec::Zero(5), Q = Vec::Zero(5);
    P(0) = 1.0;
    Q.tail(4) = rho.tail(4);
    Q(1) = rho(0);
    // theta0: canonical angle of the folded point
    double theta0 = std::atan2(abss, cos2t);
    const double ss = std::min(1.0, (sigma - 0.5) * 2.0);
    const double xs = ss + (1.0 - ss) * cos2t;
    const double theta1 = std::acos(std::min(1.0, std::max(-1.0, xs)));
    const Vec C0 = Vec::Zero(5);
    delta = transport_arc(delta, C0, P, Q, theta0, theta1);
    Vec g = std::cos(theta1) * P + std::sin(theta1) * Q;
    V52State st;
    st.gamma = Vec5(g);
    st.delta = Vec5(delta);
    return st;
}

Vec4 tau_tilde(const Vec6& x) {
    const V52State st = v52_flow(x, 1.0);
    return st.delta.tail<4>();
}

}  // namespace hforge
