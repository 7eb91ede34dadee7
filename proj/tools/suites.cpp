#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include <hforge/char_maps.hpp>
#include <hforge/degree.hpp>
#include <hforge/exotic.hpp>
#include <hforge/isometries.hpp>
#include <hforge/kappa_deform.hpp>
#include <hforge/lift.hpp>
#include <hforge/master.hpp>
#include <hforge/parallel.hpp>
#include <hforge/rng.hpp>
#include <hforge/smash.hpp>
#include <hforge/spin_algebra.hpp>
#include <hforge/tau.hpp>

namespace hforge::cli {

namespace {
constexpr double kPi = 3.14159265358979323846;

using Clock = std::chrono::steady_clock;

struct Ctx {
    RunConfig cfg;
    Report* report;

    long n(long dflt) const { return cfg.samples > 0 ? cfg.samples : dflt; }
    double tol(double dflt) const {
        return cfg.tol_override > 0.0 ? cfg.tol_override : dflt;
    }

    void run(const std::string& id, const std::string& ref, long samples,
             double tol_dflt, const std::function<double(long)>& residual_of) {
        CheckResult c;
        c.id = id;
        c.ref = ref;
        c.samples = samples;
        c.tol = tol(tol_dflt);
        const auto t0 = Clock::now();
        std::vector<double> res(samples, 0.0);
        parallel_for(
            samples, [&](std::size_t i) { res[i] = residual_of(static_cast<long>(i)); },
            cfg.threads);
        c.max_residual = *std::max_element(res.begin(), res.end());
        c.pass = c.max_residual < c.tol;
        c.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        report->checks.push_back(c);
    }

    /// For margin-style checks (value must EXCEED the bound).
    void run_min(const std::string& id, const std::string& ref, long samples,
                 double bound, const std::function<double(long)>& value_of) {
        CheckResult c;
        c.id = id;
        c.ref = ref;
        c.samples = samples;
        c.tol = bound;
        const auto t0 = Clock::now();
        std::vector<double> res(samples, 0.0);
        parallel_for(
            samples, [&](std::size_t i) { res[i] = value_of(static_cast<long>(i)); },
            cfg.threads);
        c.max_residual = *std::min_element(res.begin(), res.end());
        c.pass = c.max_residual > bound;
        c.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        report->checks.push_back(c);
    }
};

Octonion rand_oct(Rng& r, Octonion::Model m = Octonion::Model::CC) {
    Octonion o;
    o.model = m;
    for (int i = 0; i < 8; ++i) o.c[i] = r.gaussian();
    return o;
}

// ---------------------------------------------------------------- algebra

void suite_algebra(Ctx& ctx) {
    ctx.run("oct-norm-mult-cc", "norm multiplicativity, complex-pair model",
            ctx.n(100000), 1e-12, [&](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 1000000 + i);
                const Octonion x = rand_oct(r), y = rand_oct(r);
                return std::abs(oct_mul(x, y).norm() - x.norm() * y.norm()) /
                       (1.0 + x.norm() * y.norm());
            });
    ctx.run("oct-norm-mult-hh", "norm multiplicativity, quaternion-pair model",
            ctx.n(100000), 1e-12, [&](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 2000000 + i);
                const Octonion x = rand_oct(r, Octonion::Model::HH);
                const Octonion y = rand_oct(r, Octonion::Model::HH);
                return std::abs(oct_mul(x, y).norm() - x.norm() * y.norm()) /
                       (1.0 + x.norm() * y.norm());
            });
    ctx.run("oct-two-sided-inverse", "x (conj x / |x|^2) = 1 both sides",
            ctx.n(100000), 1e-12, [&](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 3000000 + i);
                Octonion x = rand_oct(r);
                x = x * (r.uniform(0.1, 10.0) / x.norm());
                const Octonion xi = x.inverse();
                return std::max(oct_dist(oct_mul(x, xi), Octonion::one()),
                                oct_dist(oct_mul(xi, x), Octonion::one()));
            });
    ctx.run("cross-norm-identity", "|z x w|^2 = |z|^2 |w|^2 - |<<z,w>>|^2",
            ctx.n(100000), 1e-12, [&](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 4000000 + i);
                const Vec3c z = r.gaussian_vec3c(), w = r.gaussian_vec3c();
                const double t =
                    cross_c3(z, w).squaredNorm() -
                    (z.squaredNorm() * w.squaredNorm() - std::norm(herm3(z, w)));
                return std::abs(t) / (1.0 + z.squaredNorm() * w.squaredNorm());
            });
    ctx.run("cross-su3-equivariance", "(Az) x (Aw) = A (z x w)", ctx.n(100000),
            1e-12, [&](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 5000000 + i);
                const Eigen::MatrixXcd a = r.special_unitary(3);
                const Vec3c z = r.gaussian_vec3c(), w = r.gaussian_vec3c();
                return (cross_c3(a * z, a * w) - a * cross_c3(z, w)).norm() /
                       (1.0 + z.norm() * w.norm());
            });
    ctx.run("model-isomorphism", "conversion intertwines the two products",
            ctx.n(100000), 1e-12, [&](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 6000000 + i);
                const Octonion x = rand_oct(r), y = rand_oct(r);
                const Octonion lhs = oct_convert(oct_mul(x, y), Octonion::Model::HH);
                const Octonion rhs = oct_mul(oct_convert(x, Octonion::Model::HH),
                                             oct_convert(y, Octonion::Model::HH));
                const double rt =
                    oct_dist(oct_convert(oct_convert(x, Octonion::Model::HH),
                                         Octonion::Model::CC),
                             x);
                return std::max(oct_dist(lhs, rhs) / (1.0 + x.norm() * y.norm()), rt);
            });
}

// ------------------------------------------------------------------ lifts

Vec dir_to_vec(const Vec7& v) { return Vec(v); }

void suite_lifts(Ctx& ctx) {
    LiftConfig lc;
    lc.step = ctx.cfg.step;
    const long dirs = ctx.n(100);

    ctx.run("lift-sp2-vs-closed", "numeric vs closed horizontal lift, quaternionic bundle",
            dirs, 1e-6, [&, lc](long i) {
                const BundleDescriptor b = bundle_sp2_s7();
                Rng r = Rng::stream(ctx.cfg.seed, 7000000 + i);
                const Vec v = r.unit_vec(7);
                const Quaternion p{0, v(0), v(1), v(2)};
                const Quaternion u{v(3), v(4), v(5), v(6)};
                auto curve = [&](double t) {
                    Vec x(8);
                    x << std::cos(t), std::sin(t) * v;
                    return x;
                };
                const LiftedPath path = horizontal_lift(b, curve, kPi, lc);
                double sup = 0.0;
                for (std::size_t k = 0; k < path.elements.size(); k += 157)
                    sup = std::max(sup, (path.elements[k] -
                                         closed_lift_sp(1, p, {u}, path.times[k]))
                                            .cwiseAbs()
                                            .maxCoeff());
                return std::max(sup, (path.endpoint() - closed_lift_sp(1, p, {u}, kPi))
                                         .cwiseAbs()
                                         .maxCoeff());
            });
    ctx.run("lift-su3-vs-closed", "numeric vs closed horizontal lift, special-unitary bundle",
            dirs, 1e-6, [&, lc](long i) {
                const BundleDescriptor b = bundle_su3_s5();
                Rng r = Rng::stream(ctx.cfg.seed, 7100000 + i);
                const Vec t5 = r.unit_vec(5);
                Eigen::VectorXcd z(2);
                z << Complex{t5(1), t5(2)}, Complex{t5(3), t5(4)};
                auto curve = [&](double t) {
                    // interleaved complex layout: (Re z0, Im z0, ...)
                    Vec y(6);
                    y << std::cos(t), std::sin(t) * t5(0), std::sin(t) * t5(1),
                        std::sin(t) * t5(2), std::sin(t) * t5(3), std::sin(t) * t5(4);
                    return y;
                };
                const LiftedPath path = horizontal_lift(b, curve, kPi, lc);
                double sup = 0.0;
                for (std::size_t k = 0; k < path.elements.size(); k += 157)
                    sup = std::max(sup,
                                   (path.elements[k] -
                                    realify(closed_lift_su(2, t5(0), z, path.times[k])))
                                       .cwiseAbs()
                                       .maxCoeff());
                return sup;
            });
    ctx.run("lift-g2-vs-closed", "numeric vs closed horizontal lift, octonion automorphisms",
            dirs, 1e-6, [&, lc](long i) {
                const BundleDescriptor b = bundle_g2_s6();
                Rng r = Rng::stream(ctx.cfg.seed, 7200000 + i);
                Eigen::Vector3cd z = r.gaussian_vec3c();
                z.normalize();
                Vec dir(6);
                dir << z(0).real(), z(0).imag(), z(1).real(), z(1).imag(), z(2).real(),
                    z(2).imag();
                auto curve = [&](double t) {
                    Vec x(7);
                    x(0) = std::cos(t);
                    x.tail(6) = std::sin(t) * dir;
                    return x;
                };
                const LiftedPath path = horizontal_lift(b, curve, kPi, lc);
                double sup = 0.0;
                for (std::size_t k = 0; k < path.elements.size(); k += 157)
                    sup = std::max(sup, (path.elements[k] - closed_lift_g2(z, path.times[k]))
                                            .cwiseAbs()
                                            .maxCoeff());
                return sup;
            });
    ctx.run("lift-spin7-vs-closed", "numeric vs closed horizontal lift, triality triples",
            dirs, 1e-6, [&, lc](long i) {
                const BundleDescriptor b = bundle_spin7_s7();
                Rng r = Rng::stream(ctx.cfg.seed, 7300000 + i);
                const Vec7 v = Vec7(r.unit_vec(7));
                auto curve = [&](double t) {
                    Vec x(8);
                    x << std::cos(t), std::sin(t) * Vec(v);
                    return x;
                };
                const LiftedPath path = horizontal_lift(b, curve, kPi, lc);
                double sup = 0.0;
                for (std::size_t k = 0; k < path.elements.size(); k += 314) {
                    const SpinTriple num = block_to_triple(path.elements[k]);
                    const SpinTriple cl = closed_lift_spin7(v, path.times[k]);
                    sup = std::max({sup, (num.A - cl.A).cwiseAbs().maxCoeff(),
                                    (num.B - cl.B).cwiseAbs().maxCoeff(),
                                    (num.C - cl.C).cwiseAbs().maxCoeff()});
                }
                return sup;
            });
    ctx.run_min("lift-step-halving", "fourth-order error reduction under halving", 4,
                8.0, [&](long i) {
                    const BundleDescriptor b = bundle_sp2_s7();
                    Rng r = Rng::stream(ctx.cfg.seed, 7400000 + i);
                    const Vec v = r.unit_vec(7);
                    const Quaternion p{0, v(0), v(1), v(2)};
                    const Quaternion u{v(3), v(4), v(5), v(6)};
                    auto curve = [&](double t) {
                        Vec x(8);
                        x << std::cos(t), std::sin(t) * v;
                        return x;
                    };
                    const Mat exact = closed_lift_sp(1, p, {u}, kPi);
                    LiftConfig coarse = LiftConfig{}, fine = LiftConfig{};
                    coarse.step = 0.05;
                    fine.step = 0.025;
                    coarse.proj_tol = fine.proj_tol = 1.0;
                    const double e1 = (horizontal_lift(b, curve, kPi, coarse).endpoint() -
                                       exact)
                                          .cwiseAbs()
                                          .maxCoeff();
                    const double e2 = (horizontal_lift(b, curve, kPi, fine).endpoint() -
                                       exact)
                                          .cwiseAbs()
                                          .maxCoeff();
                    return e1 / e2;
                });
}

// --------------------------------------------------------- characteristic

void suite_characteristic(Ctx& ctx) {
    ctx.run("spin7-char-cube", "cube of the closed triple is (1,-1,-1)",
            ctx.n(100), 1e-10, [&](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 8000000 + i);
                const Vec7 v = Vec7(r.unit_vec(7));
                const SpinTriple t = char_spin7(v);
                const SpinTriple cube = triple_mul(t, triple_mul(t, t));
                return std::max({(cube.A - Mat8::Identity()).cwiseAbs().maxCoeff(),
                                 (cube.B + Mat8::Identity()).cwiseAbs().maxCoeff(),
                                 (cube.C + Mat8::Identity()).cwiseAbs().maxCoeff()});
            });
    LiftConfig lc;
    lc.step = ctx.cfg.step;
    ctx.run("boundary-power-identity", "boundary of p^k equals k-th power of boundary",
            ctx.n(50), 1e-5, [&, lc](long i) {
                const BundleDescriptor b = bundle_sp2_s7();
                Rng r = Rng::stream(ctx.cfg.seed, 8100000 + i);
                const Vec v = r.unit_vec(7);
                auto id_map = [](const Vec& x) { return x; };
                const Mat d1 = boundary(b, id_map, v, lc);
                double worst = 0.0;
                for (int k : {2, 3}) {
                    auto pk = [k](const Vec& x) { return power_map(x, k); };
                    const Mat dk = boundary(b, pk, v, lc);
                    Mat dp = Mat::Identity(8, 8);
                    for (int j = 0; j < k; ++j) dp = dp * d1;
                    worst = std::max(worst, (dk - dp).cwiseAbs().maxCoeff());
                }
                return worst;
            });
    ctx.run("eckmann-kervaire", "boundary of a suspended composition factors",
            ctx.n(20), 1e-5, [&, lc](long i) {
                const BundleDescriptor b = bundle_sp2_s7();
                Rng r = Rng::stream(ctx.cfg.seed, 8200000 + i);
                Mat gen = Mat::Zero(7, 7);
                gen(0, 3) = r.uniform(-1, 1);
                gen(3, 0) = -gen(0, 3);
                gen(2, 5) = r.uniform(-1, 1);
                gen(5, 2) = -gen(2, 5);
                gen(1, 6) = r.uniform(-1, 1);
                gen(6, 1) = -gen(1, 6);
                const Mat rot = mat_exp(gen);
                auto beta = [&](const Vec& w) { return Vec(rot * w); };
                auto comp = [&](const Vec& x) { return suspend(beta, x); };
                auto id_map = [](const Vec& x) { return x; };
                const Vec v = r.unit_vec(7);
                const Mat lhs = boundary(b, comp, v, lc);
                const Mat rhs = boundary(b, id_map, beta(v), lc);
                return (lhs - rhs).cwiseAbs().maxCoeff();
            });
    ctx.run("boundary-maps-theorem",
            "sixth power of the closed quaternionic boundary equals the numeric "
            "2-frame boundary of kappa o p^2",
            ctx.n(50), 1e-5, [&, lc](long i) {
                const BundleDescriptor b = bundle_g2_v72();
                Rng r = Rng::stream(ctx.cfg.seed, 8300000 + i);
                const Vec7 v = Vec7(r.unit_vec(7));
                auto alpha_map = [](const Vec& x) {
                    const Frame2 f = kappa(Octonion::from_coords(power_map(x, 2)));
                    Vec out(14);
                    out.head(7) = f.c1;
                    out.tail(7) = f.c2;
                    return out;
                };
                const Mat num = boundary(b, alpha_map, Vec(v), lc);
                const Vec7 w = Vec7(sigma_tilde_im7() * Vec(v));
                const ChartPoint cp = sp2_chart_tangent(w);
                const Quaternion q1 = char_sp2(cp.p, cp.u);
                Quaternion q6 = Quaternion::one();
                for (int k = 0; k < 6; ++k) q6 = q6 * q1;
                return (num - g2_fiber_from_quaternion(q6)).cwiseAbs().maxCoeff();
            });
}

// --------------------------------------------------------------- pipeline

void suite_pipeline(Ctx& ctx) {
    PipelineConfig pc;
    pc.lift.step = ctx.cfg.step;

    ctx.run("master-endpoints", "s=0 agrees with the closed commutator powers, s=1 is 1",
            ctx.n(1000), 1e-9, [&, pc](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 9000000 + i);
                const Quaternion a = r.unit_quaternion();
                const Quaternion b = r.unit_quaternion();
                double worst = dist(
                    null_homotopy_commutator(a, b, CommutatorVariant::Comm12, 0.0, pc),
                    commutator_power(a, b, 12));
                Quaternion b12 = Quaternion::one();
                for (int k = 0; k < 12; ++k) b12 = b12 * b;
                worst = std::max(
                    worst,
                    dist(null_homotopy_commutator(a, b, CommutatorVariant::Power12, 0.0, pc),
                         commutator_power(a, b12, 1)));
                worst = std::max(
                    worst,
                    dist(null_homotopy_commutator(a, b, CommutatorVariant::Comm12, 1.0, pc),
                         Quaternion::one()));
                worst = std::max(
                    worst,
                    dist(null_homotopy_commutator(a, b, CommutatorVariant::Power12, 1.0, pc),
                         Quaternion::one()));
                return worst;
            });
    ctx.run("master-seams", "adjacent stage values agree at the schedule seams",
            ctx.n(1000), 1e-6, [&, pc](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 9100000 + i);
                const Quaternion a = r.unit_quaternion();
                const Quaternion b = r.unit_quaternion();
                double worst = 0.0;
                for (CommutatorVariant var :
                     {CommutatorVariant::Comm12, CommutatorVariant::Power12}) {
                    for (double seam : {1.0 / 3.0, 2.0 / 3.0}) {
                        const Quaternion lo =
                            null_homotopy_commutator(a, b, var, seam - 1e-13, pc);
                        const Quaternion hi =
                            null_homotopy_commutator(a, b, var, seam + 1e-13, pc);
                        worst = std::max(worst, dist(lo, hi));
                    }
                }
                // internal seam of the characteristic-power stage
                const VecPU m = mu(a, b);
                worst = std::max(worst, dist(null_homotopy_d12(m, 0.5, pc),
                                             null_homotopy_d12(m, 0.5 + 1e-13, pc)));
                return worst;
            });
    ctx.run("master-norm-mesh", "unit norm across the (a, b, s) mesh", ctx.n(100000),
            1e-6, [&, pc](long i) {
                const long pair_idx = i / 100;
                const long s_idx = i % 100;
                Rng r = Rng::stream(ctx.cfg.seed, 9200000 + pair_idx);
                const Quaternion a = r.unit_quaternion();
                const Quaternion b = r.unit_quaternion();
                const double s = s_idx / 99.0;
                const CommutatorVariant var = (pair_idx % 2 == 0)
                                                  ? CommutatorVariant::Comm12
                                                  : CommutatorVariant::Power12;
                return std::abs(
                    null_homotopy_commutator(a, b, var, s, pc).norm() - 1.0);
            });
    ctx.run("h-su3-endpoints", "unitary null homotopy endpoint identities",
            ctx.n(10000), 1e-12, [&](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 9300000 + i);
                Eigen::Vector2cd z;
                z << Complex{r.gaussian(), r.gaussian()}, Complex{r.gaussian(), r.gaussian()};
                z.normalize();
                const double tau = r.uniform(0.0, kPi);
                const Eigen::Matrix2cd at_end = h_su3(tau, z(0), z(1), kPi / 2.0);
                double worst =
                    (at_end - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
                Eigen::VectorXcd zv(2);
                zv << z(0), z(1);
                const Matc ph = phi_map(tau, zv);
                const Eigen::Matrix2cd m0 = h_su3(tau, z(0), z(1), 0.0);
                worst = std::max(worst,
                                 (m0 - Eigen::Matrix2cd(ph * ph)).cwiseAbs().maxCoeff());
                return worst;
            });
    ctx.run_min("h-kappa-min-singular-value",
                "pre-orthonormalization frames stay nondegenerate", ctx.n(100000),
                1e-3, [&](long i) {
                    Rng r = Rng::stream(ctx.cfg.seed, 9400000 + i);
                    const Octonion a = r.unit_octonion();
                    const double s = r.uniform(0.0, kPi + 1.0);
                    return h_kappa(a, s).min_singular_value;
                });
    ctx.run("h-kappa-norm-law", "column norms follow the sine-square law",
            ctx.n(100000), 1e-12, [&](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 9500000 + i);
                const Octonion a = r.unit_octonion();
                const double s = r.uniform(0.0, kPi / 2.0);
                const double B =
                    a.c[4] * a.c[4] + a.c[5] * a.c[5] + a.c[6] * a.c[6] + a.c[7] * a.c[7];
                const double law = 1.0 + B * std::sin(s) * std::sin(s);
                return std::max(std::abs(kappa_t1(a, s).norm() - law),
                                std::abs(kappa_t2(a, s).norm() - law));
            });
    ctx.run("kappa-two-route", "conjugation route equals the closed complex form",
            ctx.n(10000), 1e-12, [&](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 9600000 + i);
                const Octonion a = r.unit_octonion();
                const Frame2 f1 = kappa(a);
                const Frame2 f2 = kappa_closed(a);
                return std::max((f1.c1 - f2.c1).norm(), (f1.c2 - f2.c2).norm());
            });
    ctx.run("final-boundary-reduction",
            "2-frame boundary of the suspended tail equals the special-unitary "
            "closed form at the suspended coordinates",
            ctx.n(20), 1e-5, [&, pc](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 9700000 + i);
                const Vec7 v = Vec7(r.unit_vec(7));
                const Mat m1 = corrected_boundary_homotopy(v, 1.0, pc);
                const Mat a0bar = su3_to_im7(pipeline_conjugator());
                const Mat d_alpha1 = a0bar.transpose() * m1;
                const double yv = v(0);
                const Vec6 rest = Vec6(v.tail<6>());
                const double nr = rest.norm();
                const Vec4 tv = tau_map(Vec6(rest / nr));
                Eigen::VectorXcd zq(2);
                zq << nr * Complex{tv(0), tv(1)}, nr * Complex{tv(2), tv(3)};
                const Matc su = char_su(2, yv, zq);
                return (d_alpha1 - su3_to_im7(su)).cwiseAbs().maxCoeff();
            });
    ctx.run("final-boundary-two-bundles",
            "the suspended-tail boundary agrees when lifted in the smaller group",
            ctx.n(10), 1e-5, [&, pc](long i) {
                // left: G2 -> V_{7,2} lift of (N, Sigma^2 tau); right: the same
                // curve lifted in realified SU(3) -> S^5
                Rng r = Rng::stream(ctx.cfg.seed, 9800000 + i);
                const Vec7 v = Vec7(r.unit_vec(7));
                const AlphaEvaluator a1(1.0);
                LiftConfig lc = pc.lift;
                const BundleDescriptor bg = bundle_g2_v72();
                auto curve_g = [&](double t) {
                    Vec8 x = Vec8::Zero();
                    x(0) = std::cos(t);
                    x.tail(7) = Vec(v) * std::sin(t);
                    return a1.frame14(x);
                };
                const Mat left = horizontal_lift(bg, curve_g, kPi, lc).endpoint();
                const BundleDescriptor bs = bundle_su3_s5();
                auto curve_s = [&](double t) {
                    Vec8 x = Vec8::Zero();
                    x(0) = std::cos(t);
                    x.tail(7) = Vec(v) * std::sin(t);
                    const Frame2 f = a1(x);
                    // second column in the z-coordinates (e2..e7 components)
                    return Vec(f.c2.tail(6));
                };
                const Mat right = horizontal_lift(bs, curve_s, kPi, lc).endpoint();
                // compare inside the realified su(3) picture
                const Mat left_su = left.block(1, 1, 6, 6);
                return (left_su - right).cwiseAbs().maxCoeff();
            });
}

// ----------------------------------------------------------------- exotic

void suite_exotic(Ctx& ctx) {
    ExoticConfig ec;
    ec.lift_step = ctx.cfg.step;

    ctx.run("chi1-first-column", "first column of chi_1 is the twelfth power",
            ctx.n(100), 1e-5, [&, ec](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 10000000 + i);
                const Vec x = r.unit_vec(8);
                const Quaternion x1{x(0), x(1), x(2), x(3)};
                const Quaternion x2{x(4), x(5), x(6), x(7)};
                const Sp2Element c = chi(1, x1, x2, ec);
                const Vec p12 = power_map(x, 12);
                return std::max(
                    dist(c.m[0][0], Quaternion{p12(0), p12(1), p12(2), p12(3)}),
                    dist(c.m[1][0], Quaternion{p12(4), p12(5), p12(6), p12(7)}));
            });
    ctx.run("chi1-membership", "chi_1 values are symplectic", ctx.n(100), 1e-6,
            [&, ec](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 10000000 + i);
                const Vec x = r.unit_vec(8);
                const Sp2Element c = chi(1, Quaternion{x(0), x(1), x(2), x(3)},
                                         Quaternion{x(4), x(5), x(6), x(7)}, ec);
                return c.membership_residual();
            });
    ctx.run("star-action-axiom", "q (q' x) = (q q') x for the twisted actions",
            ctx.n(1000), 1e-6, [&, ec](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 10100000 + i);
                const Vec x = r.unit_vec(8);
                ProductPoint pt{Quaternion{x(0), x(1), x(2), x(3)},
                                Quaternion{x(4), x(5), x(6), x(7)},
                                r.unit_quaternion()};
                const Quaternion q1 = r.unit_quaternion();
                const Quaternion q2 = r.unit_quaternion();
                const int j = (i % 2 == 0) ? 0 : 1;
                const ProductPoint lhs = star(j, q1, star(j, q2, pt, ec), ec);
                const ProductPoint rhs = star(j, q1 * q2, pt, ec);
                return std::max({dist(lhs.u1, rhs.u1), dist(lhs.u2, rhs.u2),
                                 dist(lhs.r, rhs.r)});
            });
    ctx.run_min("star-freeness-margin", "sampled displacement away from q = 1",
                ctx.n(1000), 1e-3, [&, ec](long i) {
                    Rng r = Rng::stream(ctx.cfg.seed, 10200000 + i);
                    const Vec x = r.unit_vec(8);
                    ProductPoint pt{Quaternion{x(0), x(1), x(2), x(3)},
                                    Quaternion{x(4), x(5), x(6), x(7)},
                                    r.unit_quaternion()};
                    Quaternion q = r.unit_quaternion();
                    while (dist(q, Quaternion::one()) < 0.1) q = r.unit_quaternion();
                    const int j = (i % 2 == 0) ? 0 : 1;
                    const ProductPoint moved = star(j, q, pt, ec);
                    return std::sqrt(dist(moved.u1, pt.u1) * dist(moved.u1, pt.u1) +
                                     dist(moved.u2, pt.u2) * dist(moved.u2, pt.u2) +
                                     dist(moved.r, pt.r) * dist(moved.r, pt.r));
                });
    ctx.run("symplectic-hopf-columns", "the two columns map to antipodal points",
            ctx.n(10000), 1e-12, [&](long i) {
                Rng r = Rng::stream(ctx.cfg.seed, 10300000 + i);
                const Vec v = r.unit_vec(7);
                const Quaternion p{0, v(0), v(1), v(2)};
                const Quaternion u{v(3), v(4), v(5), v(6)};
                const Mat m = closed_lift_sp(1, p, {u}, r.uniform(0.1, 3.0));
                const Quaternion a = quat_entry(m, 0, 0), b = quat_entry(m, 1, 0);
                const Quaternion c = quat_entry(m, 0, 1), d = quat_entry(m, 1, 1);
                return (hopf(c, d) + hopf(a, b)).norm();
            });
}

}  // namespace

Report run_suite(const std::string& name, const RunConfig& cfg) {
    Report rep;
    rep.suite = name;
    rep.config = cfg;
    Ctx ctx{cfg, &rep};
    if (name == "algebra")
        suite_algebra(ctx);
    else if (name == "lifts")
        suite_lifts(ctx);
    else if (name == "characteristic")
        suite_characteristic(ctx);
    else if (name == "pipeline")
        suite_pipeline(ctx);
    else if (name == "exotic")
        suite_exotic(ctx);
    else if (name == "all") {
        suite_algebra(ctx);
        suite_lifts(ctx);
        suite_characteristic(ctx);
        suite_pipeline(ctx);
        suite_exotic(ctx);
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return rep;
}

Report run_degree_suite(const RunConfig& cfg) {
    Report rep;
    rep.suite = "degree";
    rep.config = cfg;
    struct Case {
        int n, k, expect;
    };
    const Case cases[] = {{7, 2, 2}, {7, 12, 12}, {6, 2, 0}, {6, 3, 1}};
    for (const Case& c : cases) {
        CheckResult cr;
        cr.id = "degree-p" + std::to_string(c.k) + "-s" + std::to_string(c.n);
        cr.ref = "signed preimage count of the power map";
        cr.tol = 0.5;
        const auto t0 = std::chrono::steady_clock::now();
        DegreeConfig dc;
        dc.seed = cfg.seed;
        auto map = [&](const Vec& x) { return power_map(x, c.k); };
        const DegreeReport dr = degree(map, c.n, dc);
        cr.samples = dr.preimages;
        cr.max_residual = dr.conclusive ? std::abs(double(dr.degree - c.expect)) : 1.0;
        cr.pass = dr.conclusive && dr.degree == c.expect;
        cr.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
        rep.checks.push_back(cr);
    }
    return rep;
}

}  // namespace hforge::cli
