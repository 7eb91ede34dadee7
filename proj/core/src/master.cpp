#include "hforge/master.hpp"

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hforge/char_maps.hpp"
#include "hforge/isometries.hpp"
#include "hforge/spin_algebra.hpp"
#include "hforge/tau.hpp"

namespace hforge {

namespace {
constexpr double kPi = 3.14159265358979323846;

using Vec14 = Eigen::Matrix<double, 14, 1>;

// f3 coordinate shuffle: octonion coords <-> (z0, z1, a, b, c, d) reals.
Vec8 f3_from_oct(const Vec8& x) {
    Vec8 y;
    y << x(0), x(1), x(2), x(3), x(4), x(7), x(6), x(5);
    return y;
}
Vec8 f3_to_oct(const Vec8& y) {
    Vec8 x;
    x << y(0), y(1), y(2), y(3), y(4), y(7), y(6), y(5);
    return x;
}

// Target coordinates (y, Rw, Iw, alpha, beta, c, d) -> Im O coordinates.
Vec7 tgt_to_im(const Vec7& t) {
    Vec7 v;
    v << t(0), t(1), t(2), t(3), t(6), t(5), t(4);
    return v;
}

const Mat& rdom_log() {
    static const Mat l = [] {
        Mat r = Mat::Zero(8, 8);
        for (int i = 0; i < 8; ++i) r(i, (i + 2) % 8) = 1.0;
        return so_log(r);
    }();
    return l;
}

const Mat& rtgt_log() {
    static const Mat l = [] {
        Mat r = Mat::Zero(7, 7);
        r(0, 0) = 1.0;
        r(1, 6) = 1.0;
        r(2, 5) = -1.0;
        r(3, 1) = 1.0;
        r(4, 2) = 1.0;
        r(5, 3) = 1.0;
        r(6, 4) = 1.0;
        return so_log(r);
    }();
    return l;
}

// Stabilized frame from a V_{5,2} state over the f3-coordinate point y.
std::pair<Vec7, Vec7> stab_frame(const Vec5& c1, const Vec5& c2, const Vec8& y) {
    const double nv = y.head<6>().norm();
    const double cc = y(6), dd = y(7);
    Vec7 a, b;
    a.head<5>() = nv * c1;
    a(5) = cc;
    a(6) = dd;
    b.head<5>() = nv * c2;
    b(5) = -dd;
    b(6) = cc;
    return {a, b};
}

Vec6 unit_head6(const Vec8& y) {
    const Vec6 v = y.head<6>();
    const double n = v.norm();
    if (n < 1e-14) {
        Vec6 e = Vec6::Zero();
        e(0) = 1.0;
        return e;
    }
    return Vec6(v / n);
}

}  // namespace

AlphaEvaluator::AlphaEvaluator(double sigma) : sigma_(sigma) {
    const int ns = stage_count();
    const double clamped = std::min(1.0, std::max(0.0, sigma));
    stage_ = std::min(static_cast<int>(clamped * ns), ns - 1);
    u_ = clamped * ns - stage_;
    if (stage_ == 2) {
        r5_ = rotation_path(isometry_f5(), u_);
        r6_ = rotation_path(isometry_f6(), u_);
    }
    if (stage_ == 6) {
        rtgt_ = mat_exp(u_ * rtgt_log());
        rdom_ = Mat::Identity(8, 8);
    }
    if (stage_ == 7) {
        rtgt_ = mat_exp(rtgt_log());
        rdom_ = mat_exp(u_ * rdom_log());
    }
}

std::vector<Stage> AlphaEvaluator::schedule() {
    const char* names[8] = {"H_kappa on p^2",      "squaring deformation",
                            "f5/f6 rotation",      "column flow (unfold)",
                            "column flow (slide)", "arccos cleanup",
                            "target rotation",     "domain rotation"};
    std::vector<Stage> out;
    for (int i = 0; i < 8; ++i)
        out.push_back({names[i], i / 8.0, (i + 1) / 8.0});
    return out;
}

Frame2 AlphaEvaluator::operator()(const Vec8& x) const {
    if (stage_ == 0) {
        const Octonion px = Octonion::from_coords(power_map(x, 2));
        return h_kappa(px, u_ * (kPi + 1.0)).frame;
    }
    if (stage_ == 1) {
        const Vec8 y = f3_from_oct(x);
        const Vec ys = h_square(5, y, u_ * kPi / 2.0);
        Vec8 y8;
        y8 = ys;
        return h_map(Octonion::from_coords(f3_to_oct(y8)));
    }
    const Vec8 y0 = f3_from_oct(x);
    Frame2 out;
    if (stage_ == 2) {
        const Vec6 vh = unit_head6(y0);
        const Vec6 p2v = power_map(vh, 2);
        auto [t1, t2] = h52_tilde(Vec6(r5_ * p2v));
        auto [a, b] = stab_frame(Vec5(r6_ * t1), Vec5(r6_ * t2), y0);
        out.c1 = tgt_to_im(a);
        out.c2 = tgt_to_im(b);
        return out;
    }
    if (stage_ == 3 || stage_ == 4) {
        const Vec6 vh = unit_head6(y0);
        const double sf = (stage_ == 3) ? u_ / 2.0 : 0.5 + u_ / 2.0;
        const V52State st = v52_flow(vh, sf);
        auto [a, b] = stab_frame(st.gamma, st.delta, y0);
        out.c1 = tgt_to_im(a);
        out.c2 = tgt_to_im(b);
        return out;
    }
    // stages 5-7 share the flow endpoint
    const Vec8 y = (stage_ == 7) ? Vec8(rdom_ * y0) : y0;
    const Vec6 vh = unit_head6(y);
    const double nv = y.head<6>().norm();
    const double cc = y(6), dd = y(7);
    const V52State st = v52_flow(vh, 1.0);
    Vec7 c1 = Vec7::Zero(), c2 = Vec7::Zero();
    c2.head<5>() = nv * st.delta;
    c2(5) = -dd;
    c2(6) = cc;
    if (stage_ == 5) {
        const double theta = std::acos(std::min(1.0, nv));
        const double ang = (1.0 - u_) * theta;
        const double rcd = std::sqrt(cc * cc + dd * dd);
        c1(0) = std::cos(ang);
        if (rcd > 1e-14) {
            c1(5) = std::sin(ang) * cc / rcd;
            c1(6) = std::sin(ang) * dd / rcd;
        }
        const double n1 = c1.norm();
        c1 /= n1;
        out.c1 = tgt_to_im(c1);
        out.c2 = tgt_to_im(c2);
        return out;
    }
    c1(0) = 1.0;
    out.c1 = tgt_to_im(Vec7(rtgt_ * c1));
    out.c2 = tgt_to_im(Vec7(rtgt_ * c2));
    return out;
}

Vec AlphaEvaluator::frame14(const Vec8& x) const {
    const Frame2 f = (*this)(x);
    Vec out(14);
    out.head(7) = f.c1;
    out.tail(7) = f.c2;
    return out;
}

Frame2 alpha(const Vec8& x, double sigma) { return AlphaEvaluator(sigma)(x); }

Vec4 tau_map(const Vec6& w) {
    // x = (0, 0, w) in octonion coordinates; read the final column structure.
    Vec6 v6;
    v6 << w(0), w(1), w(2), w(5), w(4), w(3);
    const double n = v6.norm();
    if (n < 1e-14)
        throw std::invalid_argument("tau_map: zero input");
    const Vec4 d = tau_tilde(Vec6(v6 / n));
    Vec4 out;
    out << d(0), d(3), d(2), d(1);  // (x4, x5, x6, x7) components
    return out;
}

namespace {

const BundleDescriptor& g2_v72_bundle() {
    static const BundleDescriptor b = bundle_g2_v72();
    return b;
}

Mat boundary_alpha(double sigma, const Vec7& v, const LiftConfig& cfg) {
    const AlphaEvaluator ev(sigma);
    Vec8 north = Vec8::Zero();
    north(0) = 1.0;
    const Vec start = ev.frame14(north);
    const bool translated = (start - g2_v72_bundle().base_point).norm() > 1e-10;
    Mat g0;
    if (translated) g0 = g2_element_from_frame(start.head(7), start.tail(7));
    auto curve = [&](double t) -> Vec {
        Vec8 x = Vec8::Zero();
        x(0) = std::cos(t);
        x.tail(7) = v * std::sin(t);
        Vec f = ev.frame14(x);
        if (translated) {
            Vec out(14);
            out.head(7) = g0.transpose() * f.head(7);
            out.tail(7) = g0.transpose() * f.tail(7);
            return out;
        }
        return f;
    };
    const Mat end = horizontal_lift(g2_v72_bundle(), curve, kPi, cfg).endpoint();
    return translated ? Mat(g0 * end) : end;
}

const Vec7& v0_direction() {
    static const Vec7 v0 = [] {
        Vec7 v = Vec7::Zero();
        v(0) = 1.0;
        return v;
    }();
    return v0;
}

// Cache of d(alpha_s)(v0), keyed by the exact bits of s.
Mat cached_boundary_v0(double sigma, const LiftConfig& cfg) {
    static std::map<std::pair<std::uint64_t, std::uint64_t>, Mat> cache;
    static std::mutex mtx;
    std::pair<std::uint64_t, std::uint64_t> key;
    static_assert(sizeof(double) == sizeof(std::uint64_t));
    std::memcpy(&key.first, &sigma, sizeof(key.first));
    std::memcpy(&key.second, &cfg.step, sizeof(key.second));
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Mat val = boundary_alpha(sigma, v0_direction(), cfg);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(val)).first->second;
}

}  // namespace

Mat corrected_boundary_homotopy(const Vec7& v, double s, const PipelineConfig& cfg) {
    const Mat d0 = cached_boundary_v0(0.0, cfg.lift);
    const Mat ds_v0 = cached_boundary_v0(s, cfg.lift);
    const Mat ds_v = boundary_alpha(s, v, cfg.lift);
    return d0 * ds_v0.transpose() * ds_v;
}

Matc pipeline_conjugator() {
    Matc a0 = Matc::Zero(3, 3);
    a0(0, 0) = -1.0;
    a0(1, 1) = Complex{0.0, 1.0};
    a0(2, 2) = Complex{0.0, 1.0};
    return a0;
}

namespace {

Quaternion fiber_quat(const Mat& m7) { return quaternion_from_g2_fiber(m7); }

// Sigma-tau coordinates for the SU(3) stage: given the tangent direction
// v (Im O coordinates), returns (tau, zhat) for the h_su3 evaluation.
struct SuStageCoords {
    double tau;
    Complex z, w;
};

SuStageCoords su_stage_coords(const Vec7& v) {
    SuStageCoords sc;
    const double yv = v(0);
    const Vec6 rest = v.tail<6>();
    const double nr = rest.norm();
    sc.tau = kPi / 2.0 * (yv + 1.0);
    if (nr < 1e-13) {
        sc.z = 1.0;
        sc.w = 0.0;
        return sc;
    }
    const Vec4 t = tau_map(Vec6(rest / nr));
    sc.z = Complex{t(0), t(1)};
    sc.w = Complex{t(2), t(3)};
    return sc;
}

}  // namespace

Quaternion null_homotopy_d12(const VecPU& v, double s, const PipelineConfig& cfg) {
    // Octonion-coordinate direction whose sigma-image has chart (p, u).
    const ChartPoint cp{pu_p(v), pu_u(v)};
    const Vec7 w = sp2_chart_tangent_inv(cp);
    const Vec7 v_oct = sigma_tilde_im7().transpose() * w;
    if (s <= 0.5) {
        const Mat m = corrected_boundary_homotopy(v_oct, 2.0 * s, cfg);
        return fiber_quat(m * m);
    }
    const SuStageCoords sc = su_stage_coords(v_oct);
    const Eigen::Matrix2cd u2 = h_su3(sc.tau, sc.z, sc.w, (s - 0.5) * kPi);
    Matc m3 = Matc::Identity(3, 3);
    m3.block<2, 2>(1, 1) = u2;
    return fiber_quat(su3_to_im7(m3));
}

Quaternion null_homotopy_commutator(const Quaternion& a, const Quaternion& b,
                                    CommutatorVariant variant, double s,
                                    const PipelineConfig& cfg) {
    auto stage_value = [&](const VecPU& x) -> std::pair<Quaternion, Quaternion> {
        // lambda of the class of x, with the collapse convention
        const Quaternion u = pu_u(x);
        const double un = u.norm();
        const Quaternion bb = -quat_exp(pu_p(x) * kPi);
        if (un < 1e-13) return {Quaternion::one(), bb};
        return {u * (1.0 / un), bb};
    };
    if (s <= 1.0 / 3.0) {
        const VecPU x = collapse_f(3.0 * s, lambda_inv(a, b));
        auto [aa, bb] = stage_value(x);
        if (dist(aa, Quaternion::one()) < 1e-13 || dist(bb, Quaternion::one()) < 1e-13)
            return Quaternion::one();
        if (variant == CommutatorVariant::Comm12)
            return commutator_power(aa, bb, 12);
        Quaternion b12 = Quaternion::one();
        for (int i = 0; i < 12; ++i) b12 = b12 * bb;
        return commutator_power(aa, b12, 1);
    }
    const VecPU m = mu(a, b);
    if (s <= 2.0 / 3.0) {
        const double ss = 3.0 * s - 1.0;
        if (variant == CommutatorVariant::Comm12) {
            const Quaternion d = duran_homotopy(1, m, ss);
            Quaternion out = Quaternion::one();
            for (int i = 0; i < 12; ++i) out = out * d;
            return out;
        }
        return duran_homotopy(2, m, ss);
    }
    return null_homotopy_d12(m, 3.0 * s - 2.0, cfg);
}

std::vector<Stage> master_schedule() {
    return {{"wedge collapse", 0.0, 1.0 / 3.0},
            {"commutator deformation", 1.0 / 3.0, 2.0 / 3.0},
            {"characteristic-power null homotopy", 2.0 / 3.0, 1.0}};
}

namespace {
Vec quat_to_vec(const Quaternion& q) {
    Vec v(4);
    v << q.w, q.x, q.y, q.z;
    return v;
}
}  // namespace

HomotopyHandle handle_comm12(const Quaternion& a, const Quaternion& b) {
    HomotopyHandle h;
    h.domain_dim = 6;
    h.target = "S^3";
    h.stages = master_schedule();
    h.endpoint_s0 = "[a,b]^12";
    h.endpoint_s1 = "constant 1";
    h.eval = [a, b](const Vec&, double s) {
        return quat_to_vec(null_homotopy_commutator(a, b, CommutatorVariant::Comm12, s));
    };
    return h;
}

HomotopyHandle handle_power12(const Quaternion& a, const Quaternion& b) {
    HomotopyHandle h = handle_comm12(a, b);
    h.endpoint_s0 = "[a, b^12]";
    h.eval = [a, b](const Vec&, double s) {
        return quat_to_vec(null_homotopy_commutator(a, b, CommutatorVariant::Power12, s));
    };
    return h;
}

HomotopyHandle handle_d12(const VecPU& v) {
    HomotopyHandle h;
    h.domain_dim = 6;
    h.target = "S^3";
    h.stages = {{"corrected boundary squared", 0.0, 0.5},
                {"SU(3) null homotopy", 0.5, 1.0}};
    h.endpoint_s0 = "characteristic map 12th power";
    h.endpoint_s1 = "constant 1";
    h.eval = [v](const Vec&, double s) {
        return quat_to_vec(null_homotopy_d12(v, s));
    };
    return h;
}

HomotopyHandle handle_kappa(const Vec8& x) {
    HomotopyHandle h;
    h.domain_dim = 7;
    h.target = "V_{7,2}";
    h.s1 = kPi + 1.0;
    h.stages = {{"first column", 0.0, kPi / 2.0},
                {"second column", kPi / 2.0, kPi},
                {"rescale", kPi, kPi + 1.0}};
    h.endpoint_s0 = "kappa";
    h.endpoint_s1 = "two Hopf variants";
    h.eval = [x](const Vec&, double s) {
        const Frame2 f = h_kappa(Octonion::from_coords(x), s).frame;
        Vec out(14);
        out.head(7) = f.c1;
        out.tail(7) = f.c2;
        return out;
    };
    return h;
}

}  // namespace hforge
