#include <doctest.h>

#include <hforge/octonion.hpp>
#include <hforge/quaternion.hpp>
#include <hforge/rng.hpp>

using namespace hforge;

namespace {
Octonion random_oct(Rng& r, Octonion::Model m = Octonion::Model::CC) {
    Octonion o;
    o.model = m;
    for (int i = 0; i < 8; ++i) o.c[i] = r.gaussian();
    return o;
}
}  // namespace

TEST_CASE("quaternion defining relations") {
    CHECK(dist(Quaternion::i() * Quaternion::j(), Quaternion::k()) == doctest::Approx(0.0));
    const Quaternion b{0.3, -0.2, 0.9, 0.1};
    CHECK(dist(Quaternion::one() * b, b) == doctest::Approx(0.0));
    CHECK(dist(b * Quaternion::one(), b) == doctest::Approx(0.0));
}

TEST_CASE("quaternion norm multiplicativity and associativity") {
    for (int s = 0; s < 2000; ++s) {
        Rng r = Rng::stream(11, s);
        const Quaternion a = {r.gaussian(), r.gaussian(), r.gaussian(), r.gaussian()};
        const Quaternion b = {r.gaussian(), r.gaussian(), r.gaussian(), r.gaussian()};
        const Quaternion c = {r.gaussian(), r.gaussian(), r.gaussian(), r.gaussian()};
        CHECK(std::abs((a * b).norm() - a.norm() * b.norm()) < 1e-12 * (1 + a.norm() * b.norm()));
        CHECK(dist((a * b) * c, a * (b * c)) < 1e-12 * (1 + a.norm() * b.norm() * c.norm()));
    }
}

TEST_CASE("quat_exp") {
    CHECK(dist(quat_exp({0, 0, 0, 0}), Quaternion::one()) < 1e-15);
    const double pi = 3.14159265358979323846;
    CHECK(dist(quat_exp(Quaternion::i() * pi), -Quaternion::one()) < 1e-14);
    CHECK(dist(quat_exp(Quaternion::j() * (pi / 2)), Quaternion::j()) < 1e-14);
    CHECK_THROWS(quat_exp({0.5, 1, 0, 0}));
}

TEST_CASE("commutator powers") {
    Rng r = Rng::stream(12, 0);
    const Quaternion a = r.unit_quaternion();
    CHECK(dist(commutator_power(a, Quaternion::one(), 5), Quaternion::one()) < 1e-14);
    CHECK(dist(commutator_power(Quaternion::i(), Quaternion::j(), 1), -Quaternion::one()) < 1e-14);
    CHECK(dist(commutator_power(Quaternion::i(), Quaternion::j(), 12), Quaternion::one()) < 1e-13);
    const Quaternion b = r.unit_quaternion();
    CHECK(dist(commutator_power(a, b, -1) * commutator_power(a, b, 1), Quaternion::one()) < 1e-13);
}

TEST_CASE("complex cross product identities") {
    Vec3c e1, e2, e3;
    e1 << 1, 0, 0;
    e2 << 0, 1, 0;
    e3 << 0, 0, 1;
    CHECK((cross_c3(e1, e2) - e3).norm() < 1e-15);
    for (int s = 0; s < 500; ++s) {
        Rng r = Rng::stream(13, s);
        const Vec3c z = r.gaussian_vec3c(), w = r.gaussian_vec3c(), y = r.gaussian_vec3c();
        CHECK(std::abs(herm3(z, cross_c3(z, w))) < 1e-11 * (1 + z.squaredNorm() * w.norm()));
        const Vec3c lhs = cross_c3(y, cross_c3(z, w));
        const Vec3c rhs = herm3(y, w) * z - herm3(y, z) * w;
        CHECK((lhs - rhs).norm() < 1e-10);
        const double t = cross_c3(z, w).squaredNorm() -
                         (z.squaredNorm() * w.squaredNorm() - std::norm(herm3(z, w)));
        CHECK(std::abs(t) < 1e-9);
    }
}

TEST_CASE("cross product SU(3) equivariance") {
    for (int s = 0; s < 100; ++s) {
        Rng r = Rng::stream(14, s);
        const Eigen::MatrixXcd a = r.special_unitary(3);
        CHECK(std::abs(a.determinant() - Complex{1, 0}) < 1e-12);
        const Vec3c z = r.gaussian_vec3c(), w = r.gaussian_vec3c();
        CHECK((cross_c3(a * z, a * w) - a * cross_c3(z, w)).norm() < 1e-10);
    }
}

TEST_CASE("octonion unit and basis products") {
    Rng r = Rng::stream(15, 0);
    const Octonion y = random_oct(r);
    CHECK(oct_dist(oct_mul(Octonion::one(), y), y) < 1e-15);
    CHECK(oct_dist(oct_mul(y, Octonion::one()), y) < 1e-15);
    CHECK(oct_dist(oct_mul(Octonion::e(1), Octonion::e(1)), -Octonion::one()) < 1e-15);
    CHECK_THROWS(oct_mul(Octonion::one(Octonion::Model::CC), Octonion::one(Octonion::Model::HH)));
}

TEST_CASE("octonion norm multiplicativity both models") {
    for (int s = 0; s < 5000; ++s) {
        Rng r = Rng::stream(16, s);
        const Octonion x = random_oct(r), y = random_oct(r);
        CHECK(std::abs(oct_mul(x, y).norm() - x.norm() * y.norm()) <
              1e-11 * (1 + x.norm() * y.norm()));
        const Octonion xh = random_oct(r, Octonion::Model::HH);
        const Octonion yh = random_oct(r, Octonion::Model::HH);
        CHECK(std::abs(oct_mul(xh, yh).norm() - xh.norm() * yh.norm()) <
              1e-11 * (1 + xh.norm() * yh.norm()));
    }
}

TEST_CASE("octonion two-sided inverse") {
    for (int s = 0; s < 500; ++s) {
        Rng r = Rng::stream(17, s);
        Octonion x = random_oct(r);
        const double target = r.uniform(0.1, 10.0);
        x = x * (target / x.norm());
        const Octonion xi = x.inverse();
        CHECK(oct_dist(oct_mul(x, xi), Octonion::one()) < 1e-12);
        CHECK(oct_dist(oct_mul(xi, x), Octonion::one()) < 1e-12);
    }
}

TEST_CASE("model conversion") {
    const Octonion a = Octonion::cc({1, 0}, Vec3c::Zero());
    const Octonion ah = oct_convert(a, Octonion::Model::HH);
    CHECK(dist(ah.uq(), Quaternion::one()) < 1e-15);
    CHECK(ah.vq().norm() < 1e-15);
    const Octonion b = Octonion::cc({0, 1}, Vec3c::Zero());
    const Octonion bh = oct_convert(b, Octonion::Model::HH);
    CHECK(bh.uq().norm() < 1e-15);
    CHECK(dist(bh.vq(), Quaternion::one()) < 1e-15);
    for (int s = 0; s < 2000; ++s) {
        Rng r = Rng::stream(18, s);
        const Octonion x = random_oct(r), y = random_oct(r);
        CHECK(oct_dist(oct_convert(oct_convert(x, Octonion::Model::HH), Octonion::Model::CC), x) <
              1e-15);
        const Octonion lhs = oct_convert(oct_mul(x, y), Octonion::Model::HH);
        const Octonion rhs =
            oct_mul(oct_convert(x, Octonion::Model::HH), oct_convert(y, Octonion::Model::HH));
        CHECK(oct_dist(lhs, rhs) < 1e-12 * (1.0 + x.norm() * y.norm()));
    }
}

TEST_CASE("power associativity sampled bracketings") {
    for (int s = 0; s < 50; ++s) {
        Rng r = Rng::stream(19, s);
        const Octonion x = random_oct(r) * 0.7;
        Octonion left = x;
        for (int i = 1; i < 8; ++i) left = oct_mul(left, x);
        Octonion right = x;
        for (int i = 1; i < 8; ++i) right = oct_mul(x, right);
        const Octonion x2 = oct_mul(x, x);
        const Octonion x4 = oct_mul(x2, x2);
        const Octonion bal = oct_mul(x4, x4);
        const Octonion mixed = oct_mul(oct_mul(x2, x4), x2);
        CHECK(oct_dist(left, right) < 1e-11);
        CHECK(oct_dist(left, bal) < 1e-11);
        CHECK(oct_dist(left, mixed) < 1e-11);
    }
}

TEST_CASE("non-associativity witness") {
    double best = 0.0;
    for (int i = 1; i <= 7 && best < 1.0; ++i)
        for (int j = 1; j <= 7; ++j)
            for (int k = 1; k <= 7; ++k) {
                const Octonion lhs =
                    oct_mul(oct_mul(Octonion::e(i), Octonion::e(j)), Octonion::e(k));
                const Octonion rhs =
                    oct_mul(Octonion::e(i), oct_mul(Octonion::e(j), Octonion::e(k)));
                best = std::max(best, oct_dist(lhs, rhs));
            }
    CHECK(best >= 1.0);
}

TEST_CASE("pullback isometry") {
    for (int s = 0; s < 200; ++s) {
        Rng r = Rng::stream(20, s);
        const Octonion x = random_oct(r);
        CHECK(std::abs(pullback_isometry(x).norm() - x.norm()) < 1e-13);
    }
    const auto m7 = pullback_isometry_im();
    for (int k = 1; k <= 7; ++k) {
        const Octonion img = pullback_isometry(Octonion::e(k));
        CHECK((img.coords().tail<7>() - m7.col(k - 1)).norm() < 1e-15);
    }
}

TEST_CASE("multiplication operators") {
    const MultOperators id_ops = mult_operators(Octonion::one());
    CHECK((id_ops.L - Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((id_ops.R - Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((id_ops.C - Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK_THROWS(mult_operators(Octonion::one() * 0.0));

    Vec8 one = Vec8::Zero();
    one(0) = 1.0;
    for (int s = 0; s < 200; ++s) {
        Rng r = Rng::stream(21, s);
        const Octonion a = r.unit_octonion();
        const MultOperators ops = mult_operators(a);
        CHECK((ops.L.transpose() * ops.L - Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((ops.R.transpose() * ops.R - Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((ops.C.transpose() * ops.C - Mat8::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(((ops.C * one) - one).cwiseAbs().maxCoeff() < 1e-12);
        const Octonion x = random_oct(r), y = random_oct(r);
        const Octonion a2 = oct_mul(a, a);
        const Octonion ac = a.conj();
        const Octonion ac2 = oct_mul(ac, ac);
        const Octonion lhs = oct_mul(oct_mul(a, oct_mul(x, y)), ac);
        const Octonion rhs = oct_mul(oct_mul(oct_mul(a, x), a2), oct_mul(ac2, oct_mul(y, ac)));
        CHECK(oct_dist(lhs, rhs) < 1e-10 * (1 + x.norm() * y.norm()));
    }
}
