#include "hforge/sphere.hpp"

#include <cmath>
#include <stdexcept>

namespace hforge {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Polar polar_split(const Vec& x, double pole_tol) {
    Polar p;
    const int n = static_cast<int>(x.size()) - 1;
    const Vec rest = x.tail(n);
    const double r = rest.norm();
    p.t = std::atan2(r, x(0));
    if (r < pole_tol) {
        p.v = Vec::Zero(n);
        p.v(0) = 1.0;
    } else {
        p.v = rest / r;
    }
    return p;
}

Vec power_map(const Vec& x, int k) { return power_map_real(x, static_cast<double>(k)); }

Vec power_map_real(const Vec& x, double k) {
    const Polar p = polar_split(x);
    Vec out(x.size());
    out(0) = std::cos(k * p.t);
    out.tail(x.size() - 1) = p.v * std::sin(k * p.t);
    return out;
}

Vec suspend(const std::function<Vec(const Vec&)>& rho, const Vec& x) {
    const int n = static_cast<int>(x.size()) - 1;
    const Vec v = x.tail(n);
    const double r = v.norm();
    if (r < 1e-300) {
        // poles map to poles; probe rho for the target dimension
        Vec probe = Vec::Zero(n);
        probe(0) = 1.0;
        const Vec img = rho(probe);
        Vec out = Vec::Zero(img.size() + 1);
        out(0) = x(0);
        return out;
    }
    const Vec img = rho(v / r);
    Vec out(img.size() + 1);
    out(0) = x(0);
    out.tail(img.size()) = r * img;
    return out;
}

Vec suspend_lower2(const std::function<Vec(const Vec&)>& rho, const Vec& x) {
    const int n = static_cast<int>(x.size()) - 2;
    const Vec v = x.head(n);
    const double r = v.norm();
    Vec img;
    if (r < 1e-300) {
        Vec probe = Vec::Zero(n);
        probe(0) = 1.0;
        img = Vec::Zero(rho(probe).size());
    } else {
        img = r * rho(v / r);
    }
    Vec out(img.size() + 2);
    out.head(img.size()) = img;
    out(img.size()) = x(n);
    out(img.size() + 1) = x(n + 1);
    return out;
}

Vec geodesic(const Vec& v, double t) {
    Vec out(v.size() + 1);
    out(0) = std::cos(t);
    out.tail(v.size()) = v * std::sin(t);
    return out;
}

Vec null_homotopy_even_power(const std::function<Vec(const Vec&)>& rho,
                             int target_dim, int j, const Vec& x, double s) {
    if (target_dim % 2 != 0)
        throw std::invalid_argument("null_homotopy_even_power: target dimension must be even");
    const int l = target_dim / 2;
    const Polar p = polar_split(x);
    const Vec rv = rho(p.v);  // on S^{2l-1} in R^{2l}
    const double tt = 2.0 * j * p.t;
    Vec out(target_dim + 1);
    if (s <= 0.5) {
        const double ss = 2.0 * s;
        out(0) = std::cos(tt);
        if (std::sin(tt) >= 0.0) {
            out.tail(target_dim) = rv * std::sin(tt);
        } else {
            // A(ss): l diagonal 2x2 rotation blocks, a path from 1 to -1,
            // applied where sin(2jt) < 0 so the stage ends at rho(v)|sin 2jt|
            Vec rot(target_dim);
            const double c = std::cos(ss * kPi), sn = std::sin(ss * kPi);
            for (int b = 0; b < l; ++b) {
                rot(2 * b) = c * rv(2 * b) - sn * rv(2 * b + 1);
                rot(2 * b + 1) = sn * rv(2 * b) + c * rv(2 * b + 1);
            }
            out.tail(target_dim) = rot * std::sin(tt);
        }
    } else {
        const double ss = 2.0 * (s - 0.5);
        const double xs = ss + (1.0 - ss) * std::cos(tt);
        out(0) = xs;
        const double mag = std::sqrt(std::max(0.0, 1.0 - xs * xs));
        out.tail(target_dim) = rv * mag;
    }
    return out;
}

}  // namespace hforge
