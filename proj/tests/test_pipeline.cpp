#include <doctest.h>

#include <hforge/char_maps.hpp>
#include <hforge/isometries.hpp>
#include <hforge/kappa_deform.hpp>
#include <hforge/master.hpp>
#include <hforge/rng.hpp>
#include <hforge/smash.hpp>
#include <hforge/spin_algebra.hpp>
#include <hforge/tau.hpp>

using namespace hforge;

namespace {
constexpr double kPi = 3.14159265358979323846;

VecPU random_pu(int s) {
    const Vec v = Rng::stream(81, s).unit_vec(7);
    VecPU x;
    x << v(0), v(1), v(2), v(3), v(4), v(5), v(6);
    return x;
}

Octonion random_unit_oct(int s) { return Rng::stream(82, s).unit_octonion(); }
}  // namespace

TEST_CASE("iota examples") {
    VecPU x;
    x << 0, 0, 0, 1, 0, 0, 0;  // (p, u) = (0, 1)
    const SmashRep r = iota(x);
    CHECK(dist(r.a, Quaternion::one()) < 1e-14);
    CHECK(dist(r.b, -Quaternion::one()) < 1e-14);
    CHECK(r.collapsed);  // a = 1 marks the wedge class
    VecPU y;
    y << 1, 0, 0, 0, 0, 0, 0;  // |p| = 1, u = 0
    CHECK(iota(y).collapsed);
}

TEST_CASE("lambda inverse round trip") {
    for (int s = 0; s < 300; ++s) {
        Rng r = Rng::stream(83, s);
        const Quaternion a = r.unit_quaternion();
        const Quaternion b = r.unit_quaternion();
        if (dist(b, Quaternion::one()) < 1e-3) continue;
        const VecPU x = lambda_inv(a, b);
        const SmashRep back = iota(x);
        CHECK(dist(back.a, a) < 1e-12);
        CHECK(dist(back.b, b) < 1e-12);
    }
}

TEST_CASE("collapse homotopy") {
    for (int s = 0; s < 200; ++s) {
        const VecPU x = random_pu(s);
        CHECK((collapse_f(0.0, x) - x).norm() < 1e-14);
        // s = 1 crushes the disk { u real >= 0 }
        if (x(4) == 0 && x(5) == 0 && x(6) == 0 && x(3) >= 0) {
            VecPU crushed;
            crushed << 0, 0, 0, 1, 0, 0, 0;
            CHECK((collapse_f(1.0, x) - crushed).norm() < 1e-13);
        }
        // seam continuity at Re u = (1-s)/(1+s)
        Rng r = Rng::stream(84, s);
        const double ss = r.uniform(0.05, 0.95);
        const double re = (1.0 - ss) / (1.0 + ss);
        Vec rest = r.unit_vec(6) * std::sqrt(1.0 - re * re);
        VecPU xs;
        xs << rest(0), rest(1), rest(2), re, rest(3), rest(4), rest(5);
        // the formula has a square-root corner at the seam: O(sqrt(ds))
        const VecPU lo = collapse_f(ss - 1e-10, xs);
        const VecPU hi = collapse_f(ss + 1e-10, xs);
        CHECK((lo - hi).norm() < 1e-4);
        // exact agreement of the two branches at the seam itself
        VecPU crushed;
        crushed << 0, 0, 0, 1, 0, 0, 0;
        CHECK((collapse_f(ss, xs) - crushed).norm() < 1e-12);
        // on-sphere
        CHECK(std::abs(collapse_f(ss, random_pu(s + 1000)).norm() - 1.0) < 1e-12);
    }
    // u-real points crush to the basepoint; check the pole itself
    VecPU pole;
    pole << 0, 0, 0, 1, 0, 0, 0;
    CHECK((collapse_f(1.0, pole) - pole).norm() < 1e-14);
}

TEST_CASE("duran homotopies") {
    for (int s = 0; s < 300; ++s) {
        const VecPU x = random_pu(s);
        const Quaternion p = pu_p(x), u = pu_u(x);
        // variant 1, s = 0: the commutator of (u/|u|, -e^{pi p}) through iota
        const SmashRep cl = iota(x);
        if (!cl.collapsed) {
            const Quaternion expected = commutator_power(cl.a, cl.b, 1);
            CHECK(dist(duran_homotopy(1, x, 0.0), expected) < 1e-12);
            // variant 2, s = 0: [a, b^12]
            Quaternion b12 = Quaternion::one();
            for (int i = 0; i < 12; ++i) b12 = b12 * cl.b;
            CHECK(dist(duran_homotopy(2, x, 0.0), commutator_power(cl.a, b12, 1)) < 1e-11);
        }
        // variant 1, s = 1: the characteristic map value
        CHECK(dist(duran_homotopy(1, x, 1.0), char_sp2(p, u)) < 1e-12);
        // variant 2, s = 1: its 12th power
        Quaternion q12 = Quaternion::one();
        const Quaternion q1 = char_sp2(p, u);
        for (int i = 0; i < 12; ++i) q12 = q12 * q1;
        CHECK(dist(duran_homotopy(2, x, 1.0), q12) < 1e-11);
        // unit norm sweep
        for (double ss : {0.25, 0.5, 0.75})
            CHECK(std::abs(duran_homotopy(1, x, ss).norm() - 1.0) < 1e-12);
    }
    // analytic extension at u = 0
    VecPU y;
    y << 1, 0, 0, 0, 0, 0, 0;
    CHECK(std::abs(duran_homotopy(1, y, 0.3).norm() - 1.0) < 1e-12);
    // variant 2 at (p,u) = (0,1), s = 1: e^{12 pi p} = 1 conjugated: (-1)^12 = ... value 1
    VecPU z;
    z << 0, 0, 0, 1, 0, 0, 0;
    CHECK(dist(duran_homotopy(2, z, 1.0), Quaternion::one()) < 1e-12);
}

TEST_CASE("kappa two-route cross-check") {
    const Frame2 at_one = kappa(Octonion::one());
    Vec7 e1 = Vec7::Zero(), e2 = Vec7::Zero();
    e1(0) = 1.0;
    e2(1) = 1.0;
    CHECK((at_one.c1 - e1).norm() < 1e-14);
    CHECK((at_one.c2 - e2).norm() < 1e-14);
    double worst = 0.0;
    for (int s = 0; s < 10000; ++s) {
        const Octonion a = random_unit_oct(s);
        const Frame2 f1 = kappa(a);
        const Frame2 f2 = kappa_closed(a);
        worst = std::max({worst, (f1.c1 - f2.c1).norm(), (f1.c2 - f2.c2).norm()});
        if (s < 200) CHECK(f1.orthonormality_residual() < 1e-12);
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("kappa tilde norm law and f-conjugation identity") {
    const Mat f1m = isometry_f1();
    const Mat f2m = isometry_f2();
    for (int s = 0; s < 400; ++s) {
        const Octonion a = random_unit_oct(s + 20000);
        Rng r = Rng::stream(85, s);
        const double ss = r.uniform(0.0, kPi / 2.0);
        const double B = a.c[4] * a.c[4] + a.c[5] * a.c[5] + a.c[6] * a.c[6] + a.c[7] * a.c[7];
        CHECK(std::abs(kappa_t1(a, ss).norm() - (1.0 + B * std::sin(ss) * std::sin(ss))) < 1e-12);
        CHECK(std::abs(kappa_t2(a, ss).norm() - (1.0 + B * std::sin(ss) * std::sin(ss))) < 1e-12);
        // kappa~_2(s) = f2 o kappa~_1(s) o f1
        const Vec8 fa = f1m * a.coords();
        Vec8 inner = Vec8::Zero();
        inner.tail<7>() = kappa_t1(Octonion::from_coords(fa), ss);
        const Vec8 outer = f2m * inner;
        CHECK((outer.tail<7>() - kappa_t2(a, ss)).norm() < 1e-12);
    }
}

TEST_CASE("H_kappa endpoints and seams") {
    for (int s = 0; s < 60; ++s) {
        const Octonion a = random_unit_oct(s + 30000);
        const Frame2 k = kappa(a);
        const HKappaResult h0 = h_kappa(a, 0.0);
        CHECK((h0.frame.c1 - k.c1).norm() < 1e-12);
        CHECK((h0.frame.c2 - k.c2).norm() < 1e-12);
        const HKappaResult h1 = h_kappa(a, kPi + 1.0);
        const Frame2 hd = h_map(a);
        CHECK((h1.frame.c1 - hd.c1).norm() < 1e-12);
        CHECK((h1.frame.c2 - hd.c2).norm() < 1e-12);
        CHECK(h1.frame.orthonormality_residual() < 1e-12);
        // seams of the three internal stages
        for (double seam : {kPi / 2.0, kPi}) {
            const Frame2 lo = h_kappa(a, seam - 1e-11).frame;
            const Frame2 hi = h_kappa(a, seam + 1e-11).frame;
            CHECK((lo.c1 - hi.c1).norm() < 1e-8);
            CHECK((lo.c2 - hi.c2).norm() < 1e-8);
        }
        // min singular value stays healthy
        Rng r = Rng::stream(86, s);
        CHECK(h_kappa(a, r.uniform(0.0, kPi + 1.0)).min_singular_value > 1e-3);
    }
}

TEST_CASE("squaring deformation endpoints") {
    for (int s = 0; s < 200; ++s) {
        Rng r = Rng::stream(87, s);
        const Vec x = r.unit_vec(8);
        CHECK((h_square(5, x, 0.0) - power_map(x, 2)).norm() < 1e-12);
        auto rho2 = [](const Vec& v) { return power_map(v, 2); };
        CHECK((h_square(5, x, kPi / 2.0) - suspend_lower2(rho2, x)).norm() < 1e-12);
        CHECK(std::abs(h_square(5, x, r.uniform(0.0, kPi / 2.0)).norm() - 1.0) < 1e-13);
        // equatorial restriction: last two coordinates zero
        Vec eq = x;
        eq(6) = eq(7) = 0.0;
        eq.normalize();
        const Vec end = h_square(5, eq, kPi / 2.0);
        const Vec direct = power_map(eq, 2);
        CHECK((end - direct).norm() < 1e-12);
    }
}

TEST_CASE("stiefel stabilization") {
    // inner: the h52 pair as a constant-in-s homotopy
    PairHomotopy inner = [](const Vec& v, double) -> std::pair<Vec, Vec> {
        auto [c1, c2] = h52_tilde(Vec6(v));
        return {Vec(c1), Vec(c2)};
    };
    PairHomotopy outer = stiefel_stabilize(inner);
    for (int s = 0; s < 200; ++s) {
        Rng r = Rng::stream(88, s);
        const Vec x = r.unit_vec(8);
        auto [a, b] = outer(x, 0.0);
        CHECK(std::abs(a.norm() - 1.0) < 1e-12);
        CHECK(std::abs(b.norm() - 1.0) < 1e-12);
        CHECK(std::abs(a.dot(b)) < 1e-12);
        CHECK(a(5) == doctest::Approx(x(6)));
        CHECK(a(6) == doctest::Approx(x(7)));
        CHECK(b(5) == doctest::Approx(-x(7)));
        CHECK(b(6) == doctest::Approx(x(6)));
    }
}

TEST_CASE("v52 flow and tau tilde") {
    Vec5 pole;
    pole << 1, 0, 0, 0, 0;
    for (int s = 0; s < 60; ++s) {
        Rng r = Rng::stream(89, s);
        const Vec6 x = Vec6(r.unit_vec(6));
        // start matches the conjugated frame
        const V52State st0 = v52_flow(x, 0.0);
        auto [g0, d0] = h52_hat(Vec6(power_map(x, 2)));
        CHECK((st0.gamma - g0).norm() < 1e-12);
        CHECK((st0.delta - d0).norm() < 1e-12);
        // end: first column at the pole, delta unit and orthogonal
        const V52State st1 = v52_flow(x, 1.0);
        CHECK((st1.gamma - pole).norm() < 1e-10);
        CHECK(std::abs(st1.delta.norm() - 1.0) < 1e-10);
        CHECK(std::abs(st1.delta(0)) < 1e-10);
        // orthogonality along the flow
        for (double sg : {0.2, 0.45, 0.6, 0.9}) {
            const V52State st = v52_flow(x, sg);
            CHECK(std::abs(st.delta.dot(st.gamma)) < 1e-9);
            CHECK(std::abs(st.delta.norm() - 1.0) < 1e-10);
            CHECK(std::abs(st.gamma.norm() - 1.0) < 1e-10);
        }
        CHECK(std::abs(tau_tilde(x).norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("v52 arc transport matches an RK4 oracle") {
    // independent check of the closed-form delta transport: integrate the
    // ODE delta' = -<delta, gamma'> gamma by RK4 along the flow curves
    for (int s = 0; s < 8; ++s) {
        Rng r = Rng::stream(90, s);
        const Vec6 x = Vec6(r.unit_vec(6));
        // integrate per smooth phase; the slide phase is reparametrized so
        // the velocity stays bounded near the pole
        auto sigma_of = [](double u) {
            if (u <= 0.5) return u;
            const double uu = 2.0 * (u - 0.5);
            return 0.5 + 0.5 * (1.0 - (1.0 - uu) * (1.0 - uu));
        };
        auto gamma_of = [&](double u) { return v52_flow(x, sigma_of(u)).gamma; };
        Vec5 delta = v52_flow(x, 0.0).delta;
        const double cuts[4] = {0.0, 0.25, 0.5, 1.0};
        for (int seg = 0; seg < 3; ++seg) {
            const int n = 2000;
            const double h = (cuts[seg + 1] - cuts[seg]) / n;
            for (int k = 0; k < n; ++k) {
                const double t0 = cuts[seg] + k * h;
                auto f = [&](double t, const Vec5& d) -> Vec5 {
                    const double eps = 1e-7;
                    const double tp = std::min(cuts[seg + 1], t + eps);
                    const double tm = std::max(cuts[seg], t - eps);
                    const Vec5 gdot = (gamma_of(tp) - gamma_of(tm)) / (tp - tm);
                    return Vec5(-d.dot(gdot) * gamma_of(t));
                };
                const Vec5 k1 = f(t0, delta);
                const Vec5 k2 = f(t0 + h / 2, Vec5(delta + h / 2 * k1));
                const Vec5 k3 = f(t0 + h / 2, Vec5(delta + h / 2 * k2));
                const Vec5 k4 = f(t0 + h, Vec5(delta + h * k3));
                delta += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
            }
        }
        const Vec5 exact = v52_flow(x, 1.0).delta;
        CHECK((delta - exact).norm() < 1e-4);
    }
}

TEST_CASE("alpha endpoints, seams, and frames") {
    for (int s = 0; s < 10; ++s) {
        const Octonion a = random_unit_oct(s + 40000);
        const Vec8 x = a.coords();
        // sigma = 0: kappa o p^2
        const Frame2 f0 = alpha(x, 0.0);
        const Frame2 kp = kappa(Octonion::from_coords(power_map(x, 2)));
        CHECK((f0.c1 - kp.c1).norm() < 1e-12);
        CHECK((f0.c2 - kp.c2).norm() < 1e-12);
        // frames orthonormal across the schedule
        for (double sg : {0.07, 0.2, 0.33, 0.48, 0.55, 0.68, 0.8, 0.93, 1.0}) {
            const Frame2 f = alpha(x, sg);
            CHECK(f.orthonormality_residual() < 1e-10);
        }
        // stage seams
        // seam values agree; the flow stages have square-root moduli of
        // continuity, so probe with a tiny parameter offset
        for (int st = 1; st < AlphaEvaluator::stage_count(); ++st) {
            const double seam = st / 8.0;
            const Frame2 lo = alpha(x, seam - 1e-14);
            const Frame2 hi = alpha(x, seam);
            CHECK((lo.c1 - hi.c1).norm() < 1e-6);
            CHECK((lo.c2 - hi.c2).norm() < 1e-6);
        }
    }
    // alpha(1) along the v0 circle reproduces the suspended structure
    for (double t : {0.4, 1.0, 2.2}) {
        Vec8 x = Vec8::Zero();
        x(0) = std::cos(t);
        x(1) = std::sin(t);
        const Frame2 f = alpha(x, 1.0);
        Vec7 e1 = Vec7::Zero(), want2 = Vec7::Zero();
        e1(0) = 1.0;
        want2(1) = std::cos(t);
        want2(2) = std::sin(t);
        CHECK((f.c1 - e1).norm() < 1e-10);
        CHECK((f.c2 - want2).norm() < 1e-10);
    }
    // alpha(1) first column is constantly e1
    for (int s = 0; s < 10; ++s) {
        const Octonion a = random_unit_oct(s + 50000);
        const Frame2 f = alpha(a.coords(), 1.0);
        Vec7 e1 = Vec7::Zero();
        e1(0) = 1.0;
        CHECK((f.c1 - e1).norm() < 1e-10);
    }
}

TEST_CASE("corrected boundary endpoints at the reference direction") {
    PipelineConfig cfg;
    Vec7 v0 = Vec7::Zero();
    v0(0) = 1.0;
    const Mat m0 = corrected_boundary_homotopy(v0, 0.0, cfg);
    CHECK((m0 - Mat::Identity(7, 7)).cwiseAbs().maxCoeff() < 1e-6);
    const Mat m1 = corrected_boundary_homotopy(v0, 1.0, cfg);
    const Mat expect = su3_to_im7(pipeline_conjugator().adjoint());
    // d(alpha_1)(v0) = diag(-1,-i,-i); the corrected value at v0 is
    // d0 . d1(v0)^{-1} . d1(v0) = d0 = identity... the family itself:
    CHECK((m1 - Mat::Identity(7, 7)).cwiseAbs().maxCoeff() < 1e-6);
    (void)expect;
}

TEST_CASE("corrected boundary stays in the fiber and matches closed forms") {
    PipelineConfig cfg;
    Vec7 e1 = Vec7::Zero(), e2 = Vec7::Zero();
    e1(0) = 1.0;
    e2(1) = 1.0;
    for (int s = 0; s < 2; ++s) {
        Rng r = Rng::stream(91, s);
        const Vec7 v = Vec7(r.unit_vec(7));
        for (double sg : {0.0, 0.35, 0.7, 1.0}) {
            const Mat m = corrected_boundary_homotopy(v, sg, cfg);
            CHECK((m * e1 - e1).norm() < 1e-5);
            CHECK((m * e2 - e2).norm() < 1e-5);
        }
        // s = 0: the boundary of kappa o p^2 itself
        const Mat m0 = corrected_boundary_homotopy(v, 0.0, cfg);
        const Vec7 w = Vec7(sigma_tilde_im7() * Vec(v));
        const ChartPoint cp = sp2_chart_tangent(w);
        const Quaternion q1 = char_sp2(cp.p, cp.u);
        Quaternion q6 = Quaternion::one();
        for (int i = 0; i < 6; ++i) q6 = q6 * q1;
        CHECK((m0 - g2_fiber_from_quaternion(q6)).cwiseAbs().maxCoeff() < 1e-5);
    }
}

TEST_CASE("d12 endpoints and seam") {
    PipelineConfig cfg;
    for (int s = 0; s < 2; ++s) {
        const VecPU v = random_pu(s + 500);
        const Quaternion p = pu_p(v), u = pu_u(v);
        Quaternion q12 = Quaternion::one();
        const Quaternion q1 = char_sp2(p, u);
        for (int i = 0; i < 12; ++i) q12 = q12 * q1;
        CHECK(dist(null_homotopy_d12(v, 0.0, cfg), q12) < 1e-5);
        CHECK(dist(null_homotopy_d12(v, 1.0, cfg), Quaternion::one()) < 1e-10);
        // A/B seam
        const Quaternion lo = null_homotopy_d12(v, 0.5, cfg);
        const Quaternion hi = null_homotopy_d12(v, 0.5 + 1e-12, cfg);
        CHECK(dist(lo, hi) < 1e-5);
        // norm along the path
        for (double sg : {0.2, 0.6, 0.85})
            CHECK(std::abs(null_homotopy_d12(v, sg, cfg).norm() - 1.0) < 1e-6);
    }
    // (p, u) = (0, 1): start is (-1)^12 = 1
    VecPU z;
    z << 0, 0, 0, 1, 0, 0, 0;
    CHECK(dist(null_homotopy_d12(z, 0.0, cfg), Quaternion::one()) < 1e-6);
}

TEST_CASE("master homotopy endpoints and seams") {
    PipelineConfig cfg;
    for (int s = 0; s < 3; ++s) {
        Rng r = Rng::stream(92, s);
        const Quaternion a = r.unit_quaternion();
        const Quaternion b = r.unit_quaternion();
        // s = 0 endpoints are the exact algebraic maps
        CHECK(dist(null_homotopy_commutator(a, b, CommutatorVariant::Comm12, 0.0, cfg),
                   commutator_power(a, b, 12)) < 1e-9);
        Quaternion b12 = Quaternion::one();
        for (int i = 0; i < 12; ++i) b12 = b12 * b;
        CHECK(dist(null_homotopy_commutator(a, b, CommutatorVariant::Power12, 0.0, cfg),
                   commutator_power(a, b12, 1)) < 1e-9);
        // s = 1 endpoint is the constant 1
        CHECK(dist(null_homotopy_commutator(a, b, CommutatorVariant::Comm12, 1.0, cfg),
                   Quaternion::one()) < 1e-9);
        CHECK(dist(null_homotopy_commutator(a, b, CommutatorVariant::Power12, 1.0, cfg),
                   Quaternion::one()) < 1e-9);
        // stage seams
        for (CommutatorVariant var : {CommutatorVariant::Comm12, CommutatorVariant::Power12}) {
            for (double seam : {1.0 / 3.0, 2.0 / 3.0}) {
                const Quaternion lo = null_homotopy_commutator(a, b, var, seam - 1e-12, cfg);
                const Quaternion hi = null_homotopy_commutator(a, b, var, seam + 1e-12, cfg);
                CHECK(dist(lo, hi) < 1e-5);
            }
            for (double sg : {0.15, 0.5, 0.9})
                CHECK(std::abs(null_homotopy_commutator(a, b, var, sg, cfg).norm() - 1.0) < 1e-6);
        }
    }
    // collapsed classes map through the basepoint at the endpoints
    Rng r = Rng::stream(93, 0);
    const Quaternion a = r.unit_quaternion();
    for (double sg : {0.0, 1.0}) {
        CHECK(dist(null_homotopy_commutator(a, Quaternion::one(), CommutatorVariant::Comm12, sg,
                                            cfg),
                   Quaternion::one()) < 1e-9);
        CHECK(dist(null_homotopy_commutator(Quaternion::one(), a, CommutatorVariant::Comm12, sg,
                                            cfg),
                   Quaternion::one()) < 1e-9);
    }
}

TEST_CASE("SU(3) reduction of the final boundary") {
    // d_{G2->V72}(N, Sigma^2 tau)(v) = d_{SU(3)->S^5}(id)(Sigma tau(v)) via
    // the closed SU characteristic form, and the Eckmann-Kervaire step
    PipelineConfig cfg;
    for (int s = 0; s < 2; ++s) {
        Rng r = Rng::stream(94, s);
        const Vec7 v = Vec7(r.unit_vec(7));
        const Mat m1 = corrected_boundary_homotopy(v, 1.0, cfg);
        // the corrected family at s=1 is conj * d(alpha_1)(v); strip the prefix
        const Mat a0bar = su3_to_im7(pipeline_conjugator());
        const Mat d_alpha1 = a0bar.transpose() * m1;
        // closed-form right side: Sigma tau (v) fed into the SU(3) characteristic map
        const double yv = v(0);
        const Vec6 rest = Vec6(v.tail<6>());
        const double nr = rest.norm();
        const Vec4 tv = tau_map(Vec6(rest / nr));
        Eigen::VectorXcd zq(2);
        zq << nr * Complex{tv(0), tv(1)}, nr * Complex{tv(2), tv(3)};
        const Matc su = char_su(2, yv, zq);
        CHECK((d_alpha1 - su3_to_im7(su)).cwiseAbs().maxCoeff() < 1e-5);
    }
}
