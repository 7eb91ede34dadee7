#include "hforge/kappa_deform.hpp"

#include <cmath>

#include "hforge/isometries.hpp"
#include <stdexcept>

namespace hforge {

namespace {
constexpr double kPi = 3.14159265358979323846;

Vec7 im_part(const Octonion& o) { return o.coords().tail<7>(); }

Vec7 pack_im(double r, Complex w1, Complex w2, Complex w3) {
    Vec7 v;
    v << r, w1.real(), w1.imag(), w2.real(), w2.imag(), w3.real(), w3.imag();
    return v;
}
}  // namespace

double Frame2::orthonormality_residual() const {
    return std::max({std::abs(c1.norm() - 1.0), std::abs(c2.norm() - 1.0),
                     std::abs(c1.dot(c2))});
}

Frame2 kappa(const Octonion& a) {
    const Octonion sa = pullback_isometry(a);
    const Octonion sac = sa.conj();
    Frame2 f;
    f.c1 = im_part(oct_mul(oct_mul(sac, Octonion::e(1)), sa));
    f.c2 = im_part(oct_mul(oct_mul(sac, Octonion::e(2)), sa));
    return f;
}

Frame2 kappa_closed(const Octonion& a) {
    Frame2 f;
    f.c1 = kappa_t1(a, 0.0);
    f.c2 = kappa_t2(a, 0.0);
    return f;
}

Vec7 kappa_t1(const Octonion& a, double s) {
    const Complex z0 = a.z0();
    const Vec3c z = a.zvec();
    const Complex z1 = z(0), z2 = z(1), z3 = z(2);
    const double c = std::cos(s), sn = std::sin(s);
    const double r = std::norm(z0) - std::norm(z1) -
                     (std::norm(z2) + std::norm(z3)) * c * c;
    const Complex w1 = 2.0 * std::conj(z0) * z1;
    const Complex fac = sn * sn + std::conj(z0) * c * c;
    const Complex mix = (1.0 - std::conj(z0)) * c * sn;
    const Complex w2 = 2.0 * z2 * fac - 2.0 * std::conj(z3) * mix;
    const Complex w3 = 2.0 * z3 * fac + 2.0 * std::conj(z2) * mix;
    return pack_im(r, w1, w2, w3);
}

Vec7 kappa_t2(const Octonion& a, double s) {
    const Complex z0 = a.z0();
    const Vec3c z = a.zvec();
    const Complex z1 = z(0), z2 = z(1), z3 = z(2);
    const double c = std::cos(s), sn = std::sin(s);
    const Complex kI{0.0, 1.0};
    const double r = -2.0 * (z0 * z1).real();
    const Complex w1 = std::conj(z0) * std::conj(z0) - z1 * z1 -
                       (std::norm(z2) + std::norm(z3)) * c * c;
    const Complex tw = z1.imag() * (c * sn - kI * c * c);
    const Complex mix = (1.0 - z0.real()) * c * sn - kI * (sn * sn + z0.real() * c * c);
    const Complex w2 = 2.0 * z2 * tw - 2.0 * std::conj(z3) * mix;
    const Complex w3 = 2.0 * z3 * tw + 2.0 * std::conj(z2) * mix;
    return pack_im(r, w1, w2, w3);
}

Frame2 h_map(const Octonion& a) {
    const Complex z0 = a.z0();
    const Vec3c z = a.zvec();
    const Complex z1 = z(0), z2 = z(1), z3 = z(2);
    const Complex kI{0.0, 1.0};
    const double A = std::sqrt(std::norm(z0) + std::norm(z1));
    double h1r = 0.0, h2r = 0.0;
    Complex h1c{0, 0}, h2c{0, 0};
    if (A > 1e-14) {
        h1r = (std::norm(z0) - std::norm(z1)) / A;
        h1c = 2.0 * std::conj(z0) * z1 / A;
        h2r = -2.0 * (z0 * z1).real() / A;
        h2c = (std::conj(z0) * std::conj(z0) - z1 * z1) / A;
    }
    Frame2 f;
    f.c1 = pack_im(h1r, h1c, z2, z3);
    f.c2 = pack_im(h2r, h2c, kI * std::conj(z3), -kI * std::conj(z2));
    return f;
}

HKappaResult h_kappa(const Octonion& a, double s) {
    Vec c1, c2;
    if (s <= kPi / 2.0) {
        c1 = kappa_t1(a, s);
        c2 = kappa_t2(a, 0.0);
    } else if (s <= kPi) {
        c1 = kappa_t1(a, kPi / 2.0);
        c2 = kappa_t2(a, s - kPi / 2.0);
    } else {
        const double sg = std::min(1.0, s - kPi);
        const Vec7 t1 = kappa_t1(a, kPi / 2.0);
        const Vec7 t2 = kappa_t2(a, kPi / 2.0);
        const double A = std::sqrt(a.c[0] * a.c[0] + a.c[1] * a.c[1] +
                                   a.c[2] * a.c[2] + a.c[3] * a.c[3]);
        const double den = 1.0 - sg + sg * A;
        Vec7 v1 = Vec7::Zero(), v2 = Vec7::Zero();
        v1.head<3>() = t1.head<3>() / den;
        v1.tail<4>() = t1.tail<4>() * (2.0 - sg) / 2.0;
        v2.head<3>() = t2.head<3>() / den;
        v2.tail<4>() = t2.tail<4>() * (2.0 - sg) / 2.0;
        c1 = v1;
        c2 = v2;
    }
    HKappaResult out;
    Eigen::MatrixXd m(7, 2);
    m.col(0) = c1;
    m.col(1) = c2;
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    out.min_singular_value = svd.singularValues()(1);
    if (out.min_singular_value < 1e-10)
        throw std::runtime_error("h_kappa: degenerate frame encountered");
    orthonormalize2(c1, c2);
    out.frame.c1 = c1;
    out.frame.c2 = c2;
    return out;
}

Vec h_square(int n, const Vec& x, double s) {
    if (x.size() != n + 3)
        throw std::invalid_argument("h_square: x must lie on S^{n+2}");
    if (s < -1e-12 || s > kPi / 2.0 + 1e-12)
        throw std::invalid_argument("h_square: s out of [0, pi/2]");
    const double x0 = x(0);
    const Vec mid = x.segment(1, n);
    const double cc = x(n + 1), dd = x(n + 2);
    Vec out(n + 3);
    if (s <= kPi / 4.0) {
        const double ss = 2.0 * s;  // in [0, pi/2]
        const double c = std::cos(ss), sn = std::sin(ss);
        out(0) = x0 * x0 - mid.squaredNorm() - (cc * cc + dd * dd) * c * c;
        out.segment(1, n) = 2.0 * x0 * mid;
        out(n + 1) = 2.0 * cc * (sn * sn + x0 * c * c) - 2.0 * dd * (1.0 - x0) * c * sn;
        out(n + 2) = 2.0 * dd * (sn * sn + x0 * c * c) + 2.0 * cc * (1.0 - x0) * c * sn;
    } else {
        const double sg = (s - kPi / 4.0) / (kPi / 4.0);  // in [0, 1]
        const double nv = std::sqrt(x0 * x0 + mid.squaredNorm());
        out(0) = (x0 * x0 - mid.squaredNorm()) / (1.0 - sg + sg * nv);
        out.segment(1, n) = 2.0 * x0 * mid / (1.0 - sg + sg * nv);
        out(n + 1) = (2.0 - sg) * cc;
        out(n + 2) = (2.0 - sg) * dd;
    }
    return out / out.norm();
}

PairHomotopy stiefel_stabilize(const PairHomotopy& inner) {
    return [inner](const Vec& x, double s) -> std::pair<Vec, Vec> {
        const int m = static_cast<int>(x.size());
        const Vec v = x.head(m - 2);
        const double cc = x(m - 2), dd = x(m - 1);
        const double nv = v.norm();
        std::pair<Vec, Vec> in;
        if (nv < 1e-13) {
            Vec probe = Vec::Zero(m - 2);
            probe(0) = 1.0;
            in = inner(probe, s);
            in.first.setZero();
            in.second.setZero();
        } else {
            in = inner(v / nv, s);
            in.first *= nv;
            in.second *= nv;
        }
        Vec a(in.first.size() + 2), b(in.second.size() + 2);
        a.head(in.first.size()) = in.first;
        a(in.first.size()) = cc;
        a(in.first.size() + 1) = dd;
        b.head(in.second.size()) = in.second;
        b(in.second.size()) = -dd;
        b(in.second.size() + 1) = cc;
        return {a, b};
    };
}

}  // namespace hforge
