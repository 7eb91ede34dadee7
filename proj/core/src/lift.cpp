#include "hforge/lift.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "hforge/char_maps.hpp"
#include "hforge/sphere.hpp"

namespace hforge {

namespace {
constexpr double kPi = 3.14159265358979323846;

Mat polar_retract(const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().transpose();
}

// xi-coefficient solve: columns are d(pi)_g(g h_i) by central differences.
Vec solve_xi(const BundleDescriptor& b, const Mat& g, const Vec& vel, double eps) {
    const int k = static_cast<int>(b.horizontal.size());
    Eigen::MatrixXd M(b.base_dim, k);
    Mat gh(b.group_size, b.group_size);
    for (int i = 0; i < k; ++i) {
        gh.noalias() = g * b.horizontal[i];
        M.col(i) = (b.projection(g + eps * gh) - b.projection(g - eps * gh)) /
                   (2.0 * eps);
    }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
    if (qr.rank() < k)
        throw std::runtime_error("horizontal_lift: singular step system in " + b.name);
    return qr.solve(vel);
}

Mat xi_matrix(const BundleDescriptor& b, const Vec& c) {
    Mat xi = Mat::Zero(b.group_size, b.group_size);
    for (int i = 0; i < static_cast<int>(b.horizontal.size()); ++i)
        xi += c(i) * b.horizontal[i];
    return xi;
}

}  // namespace

LiftedPath horizontal_lift(const BundleDescriptor& b,
                           const std::function<Vec(double)>& base_curve,
                           double t1, const LiftConfig& cfg) {
    const Vec start = base_curve(0.0);
    if ((start - b.base_point).norm() > 1e-9)
        throw std::invalid_argument("horizontal_lift: curve must start at the bundle base point");

    auto velocity = [&](double t, double e) -> Vec {
        return (base_curve(t + e) - base_curve(t - e)) / (2.0 * e);
    };

    const int nsteps = std::max(1, static_cast<int>(std::ceil(t1 / cfg.step)));
    const double h = t1 / nsteps;

    LiftedPath path;
    path.times.reserve(nsteps + 1);
    path.elements.reserve(nsteps + 1);
    Mat g = Mat::Identity(b.group_size, b.group_size);
    path.times.push_back(0.0);
    path.elements.push_back(g);

    auto rk4_step = [&](Mat& gg, double t0, double hh, const Vec& va, const Vec& vm,
                        const Vec& vb) {
        const Mat k1 = gg * xi_matrix(b, solve_xi(b, gg, va, cfg.fd_eps));
        const Mat g2 = gg + 0.5 * hh * k1;
        const Mat k2 = g2 * xi_matrix(b, solve_xi(b, g2, vm, cfg.fd_eps));
        const Mat g3 = gg + 0.5 * hh * k2;
        const Mat k3 = g3 * xi_matrix(b, solve_xi(b, g3, vm, cfg.fd_eps));
        const Mat g4 = gg + hh * k3;
        const Mat k4 = g4 * xi_matrix(b, solve_xi(b, g4, vb, cfg.fd_eps));
        gg = polar_retract(gg + (hh / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
    };

    // Velocity kinks of the base curve (the staged evaluators are only
    // Lipschitz across a few loci) are resolved by recursive bisection,
    // triggered by the curvature-detrended second difference. Engages only
    // at fine base steps so coarse-step convergence studies see plain RK4.
    // The probe velocities are reused as the RK4 stage velocities.
    const bool adaptive = h <= 5e-3;
    std::function<void(Mat&, double, double, int)> advance =
        [&](Mat& gg, double t0, double hh, int depth) {
            const double e = std::min(cfg.fd_eps, hh / 4.0);
            const Vec va = velocity(t0, e);
            const Vec vm = velocity(t0 + 0.5 * hh, e);
            const Vec vb = velocity(t0 + hh, e);
            if (adaptive && depth < 18) {
                const double kink = (vb - 2.0 * vm + va).norm();
                if (kink > 2e-4 * (1.0 + va.norm())) {
                    advance(gg, t0, 0.5 * hh, depth + 1);
                    advance(gg, t0 + 0.5 * hh, 0.5 * hh, depth + 1);
                    return;
                }
            }
            rk4_step(gg, t0, hh, va, vm, vb);
        };

    double t = 0.0;
    for (int s = 0; s < nsteps; ++s) {
        advance(g, t, h, 0);
        t += h;
        path.times.push_back(t);
        path.elements.push_back(g);
        if (cfg.track_residuals) {
            const double pr = (b.projection(g) - base_curve(t)).norm();
            path.max_proj_residual = std::max(path.max_proj_residual, pr);
            if (pr > cfg.proj_tol)
                throw std::runtime_error("horizontal_lift: projection residual " +
                                         std::to_string(pr) + " exceeds tolerance in " +
                                         b.name);
        }
    }
    if (cfg.track_residuals) path.max_horiz_residual = horizontality_residual(b, path);
    return path;
}

Mat boundary(const BundleDescriptor& b,
             const std::function<Vec(const Vec&)>& alpha, const Vec& v,
             const LiftConfig& cfg) {
    auto curve = [&](double t) { return alpha(geodesic(v, t)); };
    return horizontal_lift(b, curve, kPi, cfg).endpoint();
}

SpinTriple double_fibration_delta(const Vec7& v, double t, const LiftConfig& cfg) {
    static thread_local struct {
        bool init = false;
        BundleDescriptor spin5;
    } cacheb;
    if (!cacheb.init) {
        cacheb.spin5 = bundle_spin5_s7();
        cacheb.init = true;
    }
    auto curve = [&](double s) {
        Vec8 x = Vec8::Zero();
        x(0) = std::cos(s);
        x.tail(7) = v * std::sin(s);
        return Vec(x);
    };
    const LiftedPath sp2 = horizontal_lift(cacheb.spin5, curve, t, cfg);
    const SpinTriple g_spin7 = closed_lift_spin7(v, t);
    return triple_mul(triple_inverse(g_spin7), block_to_triple(sp2.endpoint()));
}

double horizontality_residual(const BundleDescriptor& b, const LiftedPath& path,
                              int samples) {
    if (path.elements.size() < 3) return 0.0;
    double res = 0.0;
    const int n = static_cast<int>(path.elements.size());
    for (int s = 0; s < samples; ++s) {
        const int i = 1 + (s * (n - 2)) / samples;
        const double dt = path.times[i + 1] - path.times[i - 1];
        const Mat deriv = (path.elements[i + 1] - path.elements[i - 1]) / dt;
        const Mat body = path.elements[i].transpose() * deriv;
        for (const Mat& f : b.fiber)
            res = std::max(res, std::abs((f.transpose() * body).trace()));
    }
    return res;
}

}  // namespace hforge
