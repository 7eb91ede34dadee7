#include "hforge/quaternion.hpp"

#include <ostream>
#include <stdexcept>

namespace hforge {

Quaternion Quaternion::operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
}

Quaternion Quaternion::inverse() const {
    const double n2 = norm2();
    if (n2 == 0.0) throw std::invalid_argument("Quaternion::inverse: zero quaternion");
    return conj() * (1.0 / n2);
}

Quaternion Quaternion::normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::invalid_argument("Quaternion::normalized: zero quaternion");
    return *this * (1.0 / n);
}

double dist(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

Quaternion quat_exp(const Quaternion& p, double imag_tol) {
    if (std::abs(p.w) > imag_tol)
        throw std::invalid_argument("quat_exp: input must be imaginary");
    const double n = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
    if (n < 1e-300) return Quaternion::one();
    const double s = std::sin(n) / n;
    return {std::cos(n), p.x * s, p.y * s, p.z * s};
}

Quaternion log_branch_pi(const Quaternion& b) {
    constexpr double kPi = 3.14159265358979323846;
    // -b = e^{pi p}: cos(pi|p|) = (-b).w, direction = Im(-b)/|Im(-b)|.
    const Quaternion mb = -b;
    const double im = std::sqrt(mb.x * mb.x + mb.y * mb.y + mb.z * mb.z);
    const double theta = std::atan2(im, mb.w);  // in [0, pi]
    if (im < 1e-300) {
        // b == 1: |p| = 1, direction undefined; collapse convention picks the i-axis.
        if (mb.w < 0.0) return {0.0, 1.0, 0.0, 0.0};
        return {0.0, 0.0, 0.0, 0.0};  // b == -1
    }
    const double scale = theta / kPi / im;
    return {0.0, mb.x * scale, mb.y * scale, mb.z * scale};
}

Quaternion commutator_power(const Quaternion& a, const Quaternion& b, int k) {
    const Quaternion c = a * b * a.conj() * b.conj();
    Quaternion out = Quaternion::one();
    const Quaternion base = (k >= 0) ? c : c.conj();
    int n = (k >= 0) ? k : -k;
    for (int i = 0; i < n; ++i) out = out * base;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

}  // namespace hforge
