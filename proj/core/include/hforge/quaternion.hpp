#pragma once

#include <array>
#include <cmath>
#include <iosfwd>

namespace hforge {

/// Hamilton quaternion with double components.
struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
    double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    constexpr bool is_zero(double tol = 0.0) const {
        return std::abs(w) <= tol && std::abs(x) <= tol && std::abs(y) <= tol &&
               std::abs(z) <= tol;
    }

    Quaternion inverse() const;
    Quaternion normalized() const;

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr Quaternion operator+(const Quaternion& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    constexpr Quaternion operator-(const Quaternion& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    Quaternion operator*(const Quaternion& o) const;

    std::array<double, 4> coords() const { return {w, x, y, z}; }
};

inline constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

double dist(const Quaternion& a, const Quaternion& b);

/// exp of an imaginary quaternion; value lies on the unit 3-sphere.
/// Throws std::invalid_argument when the real part is nonzero.
Quaternion quat_exp(const Quaternion& p, double imag_tol = 1e-12);

/// Principal-branch log of -b for unit b, scaled so |p| <= 1 and -e^{pi p} = b.
/// When b == 1 the direction is undefined; the i-axis is used.
Quaternion log_branch_pi(const Quaternion& b);

/// [a,b]^k = (a b a^{-1} b^{-1})^k for unit quaternions; k may be negative.
Quaternion commutator_power(const Quaternion& a, const Quaternion& b, int k);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace hforge
