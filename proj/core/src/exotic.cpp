#include "hforge/exotic.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "hforge/bundle.hpp"
#include "hforge/group_element.hpp"

namespace hforge {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Mat Sp2Element::real8() const {
    std::vector<std::vector<Quaternion>> q(2, std::vector<Quaternion>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) q[i][j] = m[i][j];
    return quatmat_to_real(q);
}

Sp2Element Sp2Element::from_real8(const Mat& r) {
    Sp2Element e;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e.m[i][j] = quat_entry(r, i, j);
    return e;
}

double Sp2Element::membership_residual() const {
    // columns quaternionically orthonormal
    const Quaternion n1 = herm_h2(m[0][0], m[1][0], m[0][0], m[1][0]) - Quaternion::one();
    const Quaternion n2 = herm_h2(m[0][1], m[1][1], m[0][1], m[1][1]) - Quaternion::one();
    const Quaternion off = herm_h2(m[0][0], m[1][0], m[0][1], m[1][1]);
    return std::max({n1.norm(), n2.norm(), off.norm()});
}

Eigen::Matrix<double, 5, 1> hopf(const Quaternion& u, const Quaternion& v) {
    // second component 2 u conj(v): the convention under which the two
    // columns of a symplectic matrix map to antipodal points
    Eigen::Matrix<double, 5, 1> out;
    const Quaternion w = u * v.conj();
    out << u.norm2() - v.norm2(), 2.0 * w.w, 2.0 * w.x, 2.0 * w.y, 2.0 * w.z;
    return out;
}

Quaternion herm_h2(const Quaternion& a1, const Quaternion& a2,
                   const Quaternion& b1, const Quaternion& b2) {
    return a1.conj() * b1 + a2.conj() * b2;
}

namespace {

struct ChiCache {
    std::map<std::array<double, 9>, Mat> lifts;  ///< key: (j, vhat, |v|)
    std::mutex mtx;
};
ChiCache& chi_cache() {
    static ChiCache c;
    return c;
}

const BundleDescriptor& sp2_bundle() {
    static const BundleDescriptor b = bundle_sp2_s7();
    return b;
}

// xi_j(v): horizontal lift of t -> gamma_vhat(12 j |v| t) over [0,1].
Mat xi_lift(int j, const Vec7& vhat, double vnorm, const ExoticConfig& cfg) {
    const double total = 12.0 * j * vnorm;
    if (total < 1e-15) return Mat::Identity(8, 8);
    std::array<double, 9> key{};
    key[0] = static_cast<double>(j);
    for (int i = 0; i < 7; ++i) key[i + 1] = vhat(i);
    key[8] = vnorm;
    {
        std::lock_guard<std::mutex> lock(chi_cache().mtx);
        auto it = chi_cache().lifts.find(key);
        if (it != chi_cache().lifts.end()) return it->second;
    }
    auto curve = [&](double t) -> Vec {
        Vec x(8);
        const double ang = total * t;
        x(0) = std::cos(ang);
        x.tail(7) = vhat * std::sin(ang);
        return x;
    };
    LiftConfig lc;
    lc.step = cfg.lift_step / std::max(1.0, total);  // comparable arc resolution
    const Mat end = horizontal_lift(sp2_bundle(), curve, 1.0, lc).endpoint();
    std::lock_guard<std::mutex> lock(chi_cache().mtx);
    return chi_cache().lifts.emplace(key, end).first->second;
}

}  // namespace

void chi_cache_clear() {
    std::lock_guard<std::mutex> lock(chi_cache().mtx);
    chi_cache().lifts.clear();
}

Sp2Element chi(int j, const Quaternion& x1, const Quaternion& x2,
               const ExoticConfig& cfg) {
    Sp2Element out;
    if (j == 0) {
        out.m[0][0] = Quaternion::one();
        out.m[1][1] = Quaternion::one();
        out.m[0][1] = Quaternion{};
        out.m[1][0] = Quaternion{};
        return out;
    }
    // polar chart at the north pole (1, 0) of S^7 in the H^2 chart
    Vec7 tang;
    tang << x1.x, x1.y, x1.z, x2.w, x2.x, x2.y, x2.z;
    const double r = tang.norm();
    const double t = std::atan2(r, x1.w);  // |v| in [0, pi]
    Vec7 vhat;
    if (r < 1e-14) {
        vhat = Vec7::Zero();
        vhat(0) = 1.0;
    } else {
        vhat = tang / r;
    }
    const Mat xi = xi_lift(j, vhat, t, cfg);
    // zeta_j(v) = d12(vhat, 1 - |v|/pi)^j
    const VecPU pu = [&] {
        VecPU p;
        p << vhat(0), vhat(1), vhat(2), vhat(3), vhat(4), vhat(5), vhat(6);
        return p;
    }();
    const Quaternion z = null_homotopy_d12(pu, 1.0 - t / kPi, cfg.pipeline);
    Quaternion zj = Quaternion::one();
    for (int i = 0; i < j; ++i) zj = zj * z;
    // chi = xi . diag(1, zeta^{-1})
    std::vector<std::vector<Quaternion>> d(2, std::vector<Quaternion>(2));
    d[0][0] = Quaternion::one();
    d[0][1] = Quaternion{};
    d[1][0] = Quaternion{};
    d[1][1] = zj.conj();  // unit quaternion inverse
    const Mat res = xi * quatmat_to_real(d);
    return Sp2Element::from_real8(res);
}

E10Report e10_membership(int n, const Quaternion& u1, const Quaternion& u2,
                         const Quaternion& v1, const Quaternion& v2, double tol) {
    // p^n(u) in the H^2 chart via the polar power map
    Vec x(8);
    x << u1.w, u1.x, u1.y, u1.z, u2.w, u2.x, u2.y, u2.z;
    const Vec px = power_map(x, n);
    const Quaternion p1{px(0), px(1), px(2), px(3)};
    const Quaternion p2{px(4), px(5), px(6), px(7)};
    const Quaternion h = herm_h2(p1, p2, v1, v2);
    E10Report rep;
    rep.residual = h.norm();
    rep.ok = rep.residual < tol;
    return rep;
}

ProductPoint star(int j, const Quaternion& q, const ProductPoint& x,
                  const ExoticConfig& cfg) {
    ProductPoint out;
    out.u1 = q * x.u1 * q.conj();
    out.u2 = q * x.u2 * q.conj();
    const Sp2Element cu = chi(j, x.u1, x.u2, cfg);
    const Sp2Element cqu = chi(j, out.u1, out.u2, cfg);
    const Quaternion factor = herm_h2(cqu.m[0][1], cqu.m[1][1], q * cu.m[0][1],
                                      q * cu.m[1][1]);
    out.r = factor * x.r;
    return out;
}

std::pair<Quaternion, Quaternion> suspension_homotopy_Hj(
    int j, const Quaternion& x1, const Quaternion& x2, double t,
    const ExoticConfig& cfg) {
    const Sp2Element c = chi(j, x1, x2, cfg);
    const double ct = std::cos(t), st = std::sin(t);
    return {ct * c.m[0][0] + st * c.m[0][1], ct * c.m[1][0] + st * c.m[1][1]};
}

}  // namespace hforge
