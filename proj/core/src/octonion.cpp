#include "hforge/octonion.hpp"

#include <stdexcept>

namespace hforge {

Vec3c cross_c3(const Vec3c& z, const Vec3c& w) {
    const Vec3c zb = z.conjugate(), wb = w.conjugate();
    Vec3c out;
    out(0) = zb(1) * wb(2) - zb(2) * wb(1);
    out(1) = zb(2) * wb(0) - zb(0) * wb(2);
    out(2) = zb(0) * wb(1) - zb(1) * wb(0);
    return out;
}

Complex herm3(const Vec3c& z, const Vec3c& w) { return z.dot(w); }

Octonion Octonion::cc(Complex z0, const Vec3c& z) {
    Octonion o;
    o.model = Model::CC;
    o.c = {z0.real(), z0.imag(), z(0).real(), z(0).imag(),
           z(1).real(), z(1).imag(), z(2).real(), z(2).imag()};
    return o;
}

Octonion Octonion::hh(const Quaternion& u, const Quaternion& v) {
    Octonion o;
    o.model = Model::HH;
    o.c = {u.w, u.x, u.y, u.z, v.w, v.x, v.y, v.z};
    return o;
}

Octonion Octonion::one(Model m) {
    Octonion o;
    o.model = m;
    o.c = {1, 0, 0, 0, 0, 0, 0, 0};
    return o;
}

Octonion Octonion::e(int k) {
    if (k < 1 || k > 7) throw std::invalid_argument("Octonion::e: k in 1..7");
    Octonion o;
    o.model = Model::CC;
    o.c[k] = 1.0;
    return o;
}

Vec3c Octonion::zvec() const {
    Vec3c z;
    z(0) = {c[2], c[3]};
    z(1) = {c[4], c[5]};
    z(2) = {c[6], c[7]};
    return z;
}

Vec8 Octonion::coords() const {
    Vec8 v;
    for (int i = 0; i < 8; ++i) v(i) = c[i];
    return v;
}

Octonion Octonion::from_coords(const Vec8& v, Model m) {
    Octonion o;
    o.model = m;
    for (int i = 0; i < 8; ++i) o.c[i] = v(i);
    return o;
}

double Octonion::norm2() const {
    double s = 0;
    for (double x : c) s += x * x;
    return s;
}

Octonion Octonion::conj() const {
    Octonion o = *this;
    for (int i = 1; i < 8; ++i) o.c[i] = -o.c[i];
    return o;
}

Octonion Octonion::inverse() const {
    const double n2 = norm2();
    if (n2 == 0.0) throw std::invalid_argument("Octonion::inverse: zero octonion");
    return conj() * (1.0 / n2);
}

Octonion Octonion::operator+(const Octonion& o) const {
    Octonion r = *this;
    for (int i = 0; i < 8; ++i) r.c[i] += o.c[i];
    return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
    Octonion r = *this;
    for (int i = 0; i < 8; ++i) r.c[i] -= o.c[i];
    return r;
}

Octonion Octonion::operator*(double s) const {
    Octonion r = *this;
    for (int i = 0; i < 8; ++i) r.c[i] *= s;
    return r;
}

Octonion oct_mul(const Octonion& a, const Octonion& b) {
    if (a.model != b.model)
        throw std::invalid_argument("oct_mul: operands must share a model");
    if (a.model == Octonion::Model::CC) {
        const Complex z0 = a.z0(), w0 = b.z0();
        const Vec3c z = a.zvec(), w = b.zvec();
        const Complex r0 = z0 * w0 - herm3(z, w);
        const Vec3c rv = std::conj(z0) * w + w0 * z + cross_c3(z, w);
        return Octonion::cc(r0, rv);
    }
    const Quaternion u1 = a.uq(), v1 = a.vq();
    const Quaternion u2 = b.uq(), v2 = b.vq();
    return Octonion::hh(u1 * u2 - v2.conj() * v1, v2 * u1 + v1 * u2.conj());
}

Octonion oct_convert(const Octonion& a, Octonion::Model target) {
    if (a.model == target) return a;
    // (z0, z) = (x0 + i y0, x + i y) <-> (x0 + x.i + ..., y0 + y.i + ...)
    Octonion o;
    o.model = target;
    if (target == Octonion::Model::HH) {
        o.c = {a.c[0], a.c[2], a.c[4], a.c[6], a.c[1], a.c[3], a.c[5], a.c[7]};
    } else {
        o.c = {a.c[0], a.c[4], a.c[1], a.c[5], a.c[2], a.c[6], a.c[3], a.c[7]};
    }
    return o;
}

Octonion pullback_isometry(const Octonion& a) {
    if (a.model != Octonion::Model::CC)
        throw std::invalid_argument("pullback_isometry: model CC expected");
    // (z0, z) -> (conj z0, i z)
    Octonion o;
    o.model = Octonion::Model::CC;
    o.c = {a.c[0], -a.c[1], -a.c[3], a.c[2], -a.c[5], a.c[4], -a.c[7], a.c[6]};
    return o;
}

Eigen::Matrix<double, 7, 7> pullback_isometry_im() {
    Eigen::Matrix<double, 7, 7> m = Eigen::Matrix<double, 7, 7>::Zero();
    // e-coords (x1..x7); x1 -> -x1; (x2,x3) -> (-x3, x2); likewise for (x4,x5),(x6,x7)
    m(0, 0) = -1;
    m(1, 2) = -1;
    m(2, 1) = 1;
    m(3, 4) = -1;
    m(4, 3) = 1;
    m(5, 6) = -1;
    m(6, 5) = 1;
    return m;
}

MultOperators mult_operators(const Octonion& a) {
    if (a.norm2() == 0.0)
        throw std::invalid_argument("mult_operators: zero octonion");
    const Octonion ac = (a.model == Octonion::Model::CC)
                            ? a
                            : oct_convert(a, Octonion::Model::CC);
    MultOperators ops;
    const Octonion ainv = ac.inverse();
    for (int j = 0; j < 8; ++j) {
        Vec8 ej = Vec8::Zero();
        ej(j) = 1.0;
        const Octonion x = Octonion::from_coords(ej);
        ops.L.col(j) = oct_mul(ac, x).coords();
        ops.R.col(j) = oct_mul(x, ac).coords();
        ops.C.col(j) = oct_mul(oct_mul(ac, x), ainv).coords();
    }
    return ops;
}

double oct_dist(const Octonion& a, const Octonion& b) {
    double s = 0;
    for (int i = 0; i < 8; ++i) {
        const double d = a.c[i] - b.c[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace hforge
