#include "hforge/degree.hpp"

#include <cmath>
#include <vector>

#include "hforge/rng.hpp"

namespace hforge {

namespace {

// Orthonormal tangent frame at x whose orientation is fixed by requiring
// det[frame | x] > 0 in R^{n+1}.
Eigen::MatrixXd tangent_frame(const Vec& x) {
    const int m = static_cast<int>(x.size());
    Eigen::MatrixXd frame(m, m - 1);
    int col = 0;
    for (int i = 0; i < m && col < m - 1; ++i) {
        Vec e = Vec::Zero(m);
        e(i) = 1.0;
        Vec w = e - x.dot(e) * x;
        for (int j = 0; j < col; ++j) w -= frame.col(j).dot(w) * frame.col(j);
        const double nn = w.norm();
        if (nn > 1e-8) frame.col(col++) = w / nn;
    }
    Eigen::MatrixXd full(m, m);
    full.leftCols(m - 1) = frame;
    full.col(m - 1) = x;
    if (full.determinant() < 0.0) frame.col(0) = -frame.col(0);
    return frame;
}

// Differential of the sphere map in tangent frames, by central differences.
Eigen::MatrixXd differential(const std::function<Vec(const Vec&)>& map,
                             const Vec& x, const Eigen::MatrixXd& fx,
                             const Eigen::MatrixXd& fy) {
    const int n = static_cast<int>(fx.cols());
    const double h = 1e-6;
    Eigen::MatrixXd J(n, n);
    for (int j = 0; j < n; ++j) {
        const Vec xp = (x + h * fx.col(j)).normalized();
        const Vec xm = (x - h * fx.col(j)).normalized();
        const Vec d = (map(xp) - map(xm)) / (2.0 * h);
        J.col(j) = fy.transpose() * d;
    }
    return J;
}

}  // namespace

DegreeReport degree(const std::function<Vec(const Vec&)>& map, int n,
                    const DegreeConfig& cfg) {
    DegreeReport rep;
    const int m = n + 1;
    const int nstarts = cfg.starts_per_dim * n;

    for (int attempt = 0; attempt <= cfg.regular_value_retries; ++attempt) {
        rep.retries_used = attempt;
        Rng rv_rng = Rng::stream(cfg.seed, 7777 + attempt);
        const Vec y0 = rv_rng.unit_vec(m);

        std::vector<Vec> roots;
        double max_res = 0.0;
        bool suspicious = false;

        for (int s = 0; s < nstarts; ++s) {
            Rng r = Rng::stream(cfg.seed, s);
            Vec x = r.unit_vec(m);
            bool converged = false;
            for (int it = 0; it < cfg.newton_iters; ++it) {
                const Vec fxv = map(x);
                const Vec resid = fxv - y0;
                if (resid.norm() < cfg.newton_tol) {
                    converged = true;
                    break;
                }
                const Eigen::MatrixXd fx = tangent_frame(x);
                const Eigen::MatrixXd fy0 = tangent_frame(y0);
                const Eigen::MatrixXd J = differential(map, x, fx, fy0);
                // project residual to the tangent space at y0
                const Vec rtan = fy0.transpose() * resid;
                const Eigen::FullPivLU<Eigen::MatrixXd> lu(J);
                if (!lu.isInvertible()) break;
                Vec step = lu.solve(rtan);
                // damp on overshoot
                double lambda = 1.0;
                for (int back = 0; back < 8; ++back) {
                    const Vec xn = (x - lambda * (fx * step)).normalized();
                    if ((map(xn) - y0).norm() < resid.norm() || lambda < 1e-3) {
                        x = xn;
                        break;
                    }
                    lambda *= 0.5;
                }
            }
            if (!converged) continue;
            max_res = std::max(max_res, (map(x) - y0).norm());
            bool dup = false;
            for (const Vec& rt : roots)
                if ((rt - x).norm() < cfg.dedup_dist) {
                    dup = true;
                    break;
                }
            if (!dup) roots.push_back(x);
        }

        // signs
        int deg = 0;
        bool regular = true;
        const Eigen::MatrixXd fy0 = tangent_frame(y0);
        for (const Vec& rt : roots) {
            const Eigen::MatrixXd fx = tangent_frame(rt);
            const Eigen::MatrixXd J = differential(map, rt, fx, fy0);
            const double det = J.determinant();
            if (std::abs(det) < 1e-8) {
                regular = false;
                break;
            }
            deg += (det > 0.0) ? 1 : -1;
        }
        if (!regular || suspicious) continue;

        rep.conclusive = true;
        rep.degree = deg;
        rep.preimages = static_cast<int>(roots.size());
        rep.max_residual = max_res;
        return rep;
    }
    rep.conclusive = false;
    return rep;
}

}  // namespace hforge
