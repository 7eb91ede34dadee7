#include "hforge/smash.hpp"

#include <cmath>
#include <stdexcept>

namespace hforge {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

VecPU make_pu(const Quaternion& p, const Quaternion& u) {
    VecPU x;
    x << p.x, p.y, p.z, u.w, u.x, u.y, u.z;
    return x;
}

Quaternion pu_p(const VecPU& x) { return {0.0, x(0), x(1), x(2)}; }
Quaternion pu_u(const VecPU& x) { return {x(3), x(4), x(5), x(6)}; }

SmashRep iota(const VecPU& x, double tol) {
    SmashRep r;
    const Quaternion p = pu_p(x), u = pu_u(x);
    r.b = -quat_exp(p * kPi);
    const double un = u.norm();
    if (un < tol) {
        r.a = Quaternion::one();
        r.collapsed = true;
        return r;
    }
    r.a = u * (1.0 / un);
    r.collapsed = dist(r.a, Quaternion::one()) < tol || dist(r.b, Quaternion::one()) < tol;
    return r;
}

VecPU lambda_inv(const Quaternion& a, const Quaternion& b) {
    const Quaternion p = log_branch_pi(b);
    const double p2 = p.norm2();
    const double mag = std::sqrt(std::max(0.0, 1.0 - p2));
    return make_pu(p, a * mag);
}

VecPU collapse_f(double s, const VecPU& x) {
    const Quaternion p = pu_p(x), u = pu_u(x);
    const double re = u.w;
    if (s <= 0.0) return x;
    if (re >= (1.0 - s) / (1.0 + s)) {
        return make_pu(Quaternion{}, Quaternion::one());
    }
    const double R = re + s * (1.0 + re);
    const double den = 1.0 - re * re;
    double c;
    if (den < 1e-30) {
        // u = -1 limit along the formula
        c = std::sqrt(1.0 + s);
    } else {
        c = std::sqrt(std::max(0.0, (1.0 - R * R) / den));
    }
    const Quaternion imu{0.0, u.x, u.y, u.z};
    return make_pu(p * c, Quaternion{R, 0, 0, 0} + imu * c);
}

VecPU mu(const Quaternion& a, const Quaternion& b) {
    return collapse_f(1.0, lambda_inv(a, b));
}

Quaternion duran_homotopy(int variant, const VecPU& x, double s) {
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("duran_homotopy: variant must be 1 or 2");
    const Quaternion p = pu_p(x), u = pu_u(x);
    const double un = u.norm();
    const double mult = (variant == 1) ? 1.0 : 12.0;
    const Quaternion core = quat_exp(p * (mult * kPi));
    Quaternion first;
    if (un < 1e-13) {
        first = core;  // conjugation by the u-direction is the identity in the limit
    } else {
        const Quaternion uh = u * (1.0 / un);
        first = uh * core * uh.conj();
    }
    Quaternion tail_exp;
    if (variant == 1) {
        const Quaternion arg = p * (-(1.0 - s) * kPi) + Quaternion::i() * (s * kPi);
        tail_exp = quat_exp(arg);
    } else {
        tail_exp = quat_exp(p * (-(1.0 - s) * 12.0 * kPi));
    }
    return first * tail_exp;
}

}  // namespace hforge
