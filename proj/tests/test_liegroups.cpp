#include <doctest.h>

#include <hforge/char_maps.hpp>
#include <hforge/sphere.hpp>
#include <hforge/group_element.hpp>
#include <hforge/rng.hpp>
#include <hforge/spin_algebra.hpp>

using namespace hforge;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Complex kI{0.0, 1.0};

Vec7 rand_dir7(int s) { return Vec7(Rng::stream(41, s).unit_vec(7)); }
}  // namespace

TEST_CASE("membership basics") {
    CHECK(membership(GroupElement::so(Mat::Identity(5, 5))).ok);
    CHECK(membership(GroupElement::su(Matc::Identity(3, 3))).ok);
    CHECK(membership(GroupElement::g2(Mat::Identity(7, 7))).ok);
    SpinTriple id{Mat8::Identity(), Mat8::Identity(), Mat8::Identity()};
    CHECK(membership(GroupElement::spin7(id)).ok);
    Mat pert = Mat::Identity(7, 7);
    pert(0, 1) += 1e-3;
    CHECK_FALSE(membership(GroupElement::g2(pert), 1e-6).ok);
}

TEST_CASE("phi map") {
    for (int n : {2, 3}) {
        Rng r = Rng::stream(42, n);
        Eigen::VectorXcd z(n);
        for (int i = 0; i < n; ++i) z(i) = Complex{r.gaussian(), r.gaussian()};
        z.normalize();
        CHECK((phi_map(0.0, z) - Matc::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-13);
        const Matc end = phi_map(2.0 * kPi / n, z);
        CHECK((end - std::exp(-kI * 2.0 * kPi / double(n)) * Matc::Identity(n, n))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
        // conjugation equivariance
        const Matc a = r.special_unitary(n);
        const double tau = r.uniform(0.0, 2.0 * kPi / n);
        const Matc lhs = phi_map(tau, a * z);
        const Matc rhs = a * phi_map(tau, z) * a.adjoint();
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(membership(GroupElement::su(phi_map(tau, z))).ok);
        CHECK_THROWS(phi_map(-0.5, z));
        CHECK_THROWS(phi_map(2.0 * kPi / n + 0.5, z));
    }
}

TEST_CASE("eta theta psi") {
    Eigen::Vector3cd e1c;
    e1c << 1, 0, 0;
    const Eigen::Matrix3cd m = eta_map(e1c);
    Eigen::Matrix3cd expect;
    expect << 1, 0, 0, 0, 0, -1, 0, 1, 0;
    CHECK((m - expect).cwiseAbs().maxCoeff() < 1e-14);

    for (int s = 0; s < 60; ++s) {
        Rng r = Rng::stream(43, s);
        Eigen::Vector3cd z = r.gaussian_vec3c();
        z.normalize();
        CHECK(membership(GroupElement::su(eta_map(z))).ok);
        // eta(Az) = A eta(z) A^t
        const Matc a = r.special_unitary(3);
        const Eigen::Matrix3cd lhs = eta_map(a * z);
        const Eigen::Matrix3cd rhs = a * eta_map(z) * a.transpose();
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11);
    }

    const Mat th = theta_map();
    CHECK((th * th - Mat::Identity(7, 7)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(th.determinant() - 1.0) < 1e-12);

    for (int s = 0; s < 30; ++s) {
        const Vec7 p = rand_dir7(s);
        const Mat ps = psi_map(p);
        CHECK(membership(GroupElement::g2(ps), 1e-10).ok);
        CHECK((ps * ps * ps - Mat::Identity(7, 7)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("characteristic map of the G2 bundle") {
    for (int s = 0; s < 30; ++s) {
        Rng r = Rng::stream(44, s);
        Eigen::Vector3cd z = r.gaussian_vec3c();
        z.normalize();
        const Mat val = char_g2(z);
        CHECK((val.transpose() * val - Mat::Identity(7, 7)).cwiseAbs().maxCoeff() < 1e-12);
        // equivariance: value at Az equals A eta(-iAz_0...) ... direct identity
        const Matc a = r.special_unitary(3);
        const Mat lhs = char_g2(a * z);
        const Mat rhs =
            su3_to_im7(Matc(a * eta_map(-kI * z) * a.transpose())) * theta_map();
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("characteristic map of the Sp(2) bundle") {
    // (p, u) = (0, 1) -> -1
    CHECK(dist(char_sp2(Quaternion{}, Quaternion::one()), -Quaternion::one()) < 1e-14);
    // (p, u) = (i, 0): analytic extension -> +1
    CHECK(dist(char_sp2(Quaternion::i(), Quaternion{}), Quaternion::one()) < 1e-14);
    for (int s = 0; s < 50; ++s) {
        Rng r = Rng::stream(45, s);
        const Vec v = r.unit_vec(7);
        const Quaternion p{0, v(0), v(1), v(2)};
        const Quaternion u{v(3), v(4), v(5), v(6)};
        CHECK(std::abs(char_sp2(p, u).norm() - 1.0) < 1e-13);
        // n = 1 closed form consistency with the general formula
        const Mat m = char_sp(1, p, {u});
        const Quaternion q = quat_entry(m, 0, 0);
        CHECK(dist(q, char_sp2(p, u)) < 1e-12);
    }
}

TEST_CASE("characteristic map of the Spin(7) bundle") {
    SpinTriple idmm{Mat8::Identity(), -Mat8::Identity(), -Mat8::Identity()};
    for (int s = 0; s < 25; ++s) {
        const Vec7 v = rand_dir7(100 + s);
        const SpinTriple t = char_spin7(v);
        CHECK(membership(GroupElement::spin7(t), 1e-10).ok);
        const SpinTriple cube = triple_mul(t, triple_mul(t, t));
        CHECK((cube.A - idmm.A).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((cube.B - idmm.B).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((cube.C - idmm.C).cwiseAbs().maxCoeff() < 1e-10);
        const SpinTriple six = triple_mul(cube, cube);
        CHECK((six.A - Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((six.B - Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-10);
        // the equivalent conjugation form
        const Vec8 g = geodesic(Vec(v), -2.0 * kPi / 3.0);
        const MultOperators ops = mult_operators(Octonion::from_coords(g));
        CHECK((t.A - ops.C).cwiseAbs().maxCoeff() < 1e-11);
        CHECK((t.B + ops.C).cwiseAbs().maxCoeff() < 1e-11);
    }
}

TEST_CASE("characteristic map of the SU bundles") {
    for (int n : {2, 3}) {
        for (int s = 0; s < 25; ++s) {
            Rng r = Rng::stream(46, 10 * n + s);
            const Vec t = r.unit_vec(2 * n + 1);
            const double y = t(0);
            Eigen::VectorXcd z(n);
            for (int i = 0; i < n; ++i) z(i) = Complex{t(1 + 2 * i), t(2 + 2 * i)};
            const Matc val = char_su(n, y, z);
            CHECK(membership(GroupElement::su(val), 1e-11).ok);
            CHECK(std::abs(val(0, 0) - Complex{-1.0, 0.0}) < 1e-12);
        }
    }
}

TEST_CASE("closed lifts start at the identity and project correctly") {
    Rng r = Rng::stream(47, 0);
    // Sp(2)
    for (int s = 0; s < 20; ++s) {
        Rng rr = Rng::stream(47, s);
        const Vec v = rr.unit_vec(7);
        const Quaternion p{0, v(0), v(1), v(2)};
        const Quaternion u{v(3), v(4), v(5), v(6)};
        CHECK((closed_lift_sp(1, p, {u}, 0.0) - Mat::Identity(8, 8)).cwiseAbs().maxCoeff() <
              1e-13);
        for (double t : {0.4, 1.3, 2.7}) {
            const Mat g = closed_lift_sp(1, p, {u}, t);
            CHECK(membership(GroupElement::sp(g), 1e-10).ok);
            // first column recovers the geodesic
            Vec gam(8);
            gam << std::cos(t), std::sin(t) * v;
            CHECK((g.col(0) - gam).norm() < 1e-12);
        }
        // gam~(t + pi) = gam~(t) gam~(pi)
        const Mat a = closed_lift_sp(1, p, {u}, 0.7 + kPi);
        const Mat b = closed_lift_sp(1, p, {u}, 0.7) * closed_lift_sp(1, p, {u}, kPi);
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-11);
    }
    // SU(3)
    for (int s = 0; s < 15; ++s) {
        Rng rr = Rng::stream(48, s);
        const Vec t5 = rr.unit_vec(5);
        const double y = t5(0);
        Eigen::VectorXcd z(2);
        z << Complex{t5(1), t5(2)}, Complex{t5(3), t5(4)};
        CHECK((closed_lift_su(2, y, z, 0.0) - Matc::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-13);
        for (double t : {0.5, 2.2}) {
            const Matc g = closed_lift_su(2, y, z, t);
            CHECK(membership(GroupElement::su(g), 1e-10).ok);
            Eigen::VectorXcd gam(3);
            gam << Complex{std::cos(t), y * std::sin(t)}, std::sin(t) * z(0), std::sin(t) * z(1);
            CHECK((g.col(0) - gam).norm() < 1e-12);
        }
    }
    // G2
    for (int s = 0; s < 15; ++s) {
        Rng rr = Rng::stream(49, s);
        Eigen::Vector3cd z = rr.gaussian_vec3c();
        z.normalize();
        CHECK((closed_lift_g2(z, 0.0) - Mat::Identity(7, 7)).cwiseAbs().maxCoeff() < 1e-12);
        for (double t : {0.6, 1.9}) {
            const Mat g = closed_lift_g2(z, t);
            CHECK(membership(GroupElement::g2(g), 1e-10).ok);
            // projection: first column equals the geodesic from e1 toward (0, z)
            Vec7 dir;
            dir << 0, z(0).real(), z(0).imag(), z(1).real(), z(1).imag(), z(2).real(), z(2).imag();
            Vec7 gam;
            gam = std::sin(t) * dir;
            gam(0) += std::cos(t);
            CHECK((g.col(0) - gam).norm() < 1e-11);
        }
    }
    // Spin(7): period 6 pi
    const Vec7 v = rand_dir7(7);
    const SpinTriple end = closed_lift_spin7(v, 6.0 * kPi);
    CHECK((end.A - Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((end.B - Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((end.C - Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-10);
    for (double t : {0.8, 2.5}) {
        const SpinTriple g = closed_lift_spin7(v, t);
        CHECK(membership(GroupElement::spin7(g), 1e-10).ok);
        Vec8 one = Vec8::Zero();
        one(0) = 1.0;
        const Vec8 proj = g.B * one;
        Vec8 gam = Vec8::Zero();
        gam(0) = std::cos(t);
        gam.tail<7>() = std::sin(t) * v;
        CHECK((proj - gam).norm() < 1e-11);
    }
}

TEST_CASE("sp fiber identification links the closed lift and characteristic map") {
    for (int s = 0; s < 20; ++s) {
        Rng r = Rng::stream(50, s);
        const Vec v = r.unit_vec(7);
        const Quaternion p{0, v(0), v(1), v(2)};
        const Quaternion u{v(3), v(4), v(5), v(6)};
        const Mat lift_pi = closed_lift_sp(1, p, {u}, kPi);
        const Mat identified = sp_fiber_identification(1) * lift_pi;
        // identified = diag(1, char value)
        CHECK(dist(quat_entry(identified, 0, 0), Quaternion::one()) < 1e-12);
        CHECK(dist(quat_entry(identified, 1, 1), char_sp2(p, u)) < 1e-12);
        CHECK(quat_entry(identified, 0, 1).norm() < 1e-12);
    }
}

TEST_CASE("spin7 algebra basis ranks") {
    const auto& b = spin7_algebra_basis();
    CHECK(b.spin7.size() == 21);
    CHECK(b.spin5.size() == 10);
    CHECK(b.g2.size() == 14);
    CHECK(b.su2_fiber.size() == 3);
    // spin5 A-components annihilate e1 and e2
    for (const auto& t : b.spin5) {
        Vec8 e1 = Vec8::Zero(), e2 = Vec8::Zero();
        e1(1) = 1.0;
        e2(2) = 1.0;
        CHECK((t.A * e1).norm() < 1e-8);
        CHECK((t.A * e2).norm() < 1e-8);
    }
    for (const auto& t : b.g2) {
        CHECK((t.A - t.B).cwiseAbs().maxCoeff() < 1e-8);
        CHECK((t.A - t.C).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("sp2 chart and fiber dictionary") {
    for (int s = 0; s < 40; ++s) {
        Rng r = Rng::stream(51, s);
        const Quaternion q = r.unit_quaternion();
        const Mat tq = g2_fiber_from_quaternion(q);
        CHECK(membership(GroupElement::g2(tq), 1e-10).ok);
        Vec7 e1 = Vec7::Zero(), e2 = Vec7::Zero();
        e1(0) = 1.0;
        e2(1) = 1.0;
        CHECK((tq * e1 - e1).norm() < 1e-12);
        CHECK((tq * e2 - e2).norm() < 1e-12);
        CHECK(dist(quaternion_from_g2_fiber(tq), q) < 1e-12);
        // group homomorphism
        const Quaternion q2 = r.unit_quaternion();
        CHECK((Mat(g2_fiber_from_quaternion(q * q2)) - tq * g2_fiber_from_quaternion(q2))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
    }
}

TEST_CASE("embed_sp2 lands in Spin(5) in Spin(7)") {
    for (int s = 0; s < 15; ++s) {
        Rng r = Rng::stream(52, s);
        const Vec v = r.unit_vec(7);
        const Quaternion p{0, v(0), v(1), v(2)};
        const Quaternion u{v(3), v(4), v(5), v(6)};
        const Mat q = closed_lift_sp(1, p, {u}, r.uniform(0.1, 3.0));
        const SpinTriple t = embed_sp2(q);
        CHECK(membership(GroupElement::spin7(t), 1e-9).ok);
        Vec8 e1 = Vec8::Zero(), e2 = Vec8::Zero();
        e1(1) = 1.0;
        e2(2) = 1.0;
        CHECK((t.A * e1 - e1).norm() < 1e-10);
        CHECK((t.A * e2 - e2).norm() < 1e-10);
    }
}

TEST_CASE("h_su3 endpoints") {
    for (int s = 0; s < 40; ++s) {
        Rng r = Rng::stream(53, s);
        Eigen::Vector2cd z;
        z << Complex{r.gaussian(), r.gaussian()}, Complex{r.gaussian(), r.gaussian()};
        z.normalize();
        const double tau = r.uniform(0.0, kPi);
        const Eigen::Matrix2cd at_end = h_su3(tau, z(0), z(1), kPi / 2.0);
        CHECK((at_end - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        const Eigen::Matrix2cd at_zero_tau = h_su3(0.0, z(0), z(1), 0.0);
        CHECK((at_zero_tau - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        const Eigen::Matrix2cd m = h_su3(tau, z(0), z(1), r.uniform(0.0, kPi / 2.0));
        CHECK(membership(GroupElement::su(m), 1e-12).ok);
        // s = 0 equals the square of the conjugated phi factor
        Eigen::VectorXcd zv(2);
        zv << z(0), z(1);
        const Matc ph = phi_map(tau, zv);
        const Eigen::Matrix2cd m0 = h_su3(tau, z(0), z(1), 0.0);
        CHECK((m0 - Eigen::Matrix2cd(ph * ph)).cwiseAbs().maxCoeff() < 1e-11);
    }
}
