#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "hforge/quaternion.hpp"

namespace hforge {

using Complex = std::complex<double>;
using Vec3c = Eigen::Vector3cd;
using Mat8 = Eigen::Matrix<double, 8, 8>;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Vec7 = Eigen::Matrix<double, 7, 1>;

/// Conjugate-bilinear cross product on C^3.
Vec3c cross_c3(const Vec3c& z, const Vec3c& w);

/// Hermitian inner product <<z,w>> = conj(z)^t w.
Complex herm3(const Vec3c& z, const Vec3c& w);

/// Octonion in one of two models sharing 8 real components.
///
/// Model CC: pair (z0, z) in C x C^3. Real layout
///   (Re z0, Im z0, Re z1, Im z1, Re z2, Im z2, Re z3, Im z3),
/// so the imaginary basis is e1=(i,0,0,0), e2=(0,1,0,0), ..., e7=(0,0,0,i).
///
/// Model HH: pair (u, v) in H x H with layout (u0,u1,u2,u3, v0,v1,v2,v3).
struct Octonion {
    enum class Model { CC, HH };

    std::array<double, 8> c{};
    Model model = Model::CC;

    Octonion() = default;
    Octonion(const std::array<double, 8>& comps, Model m) : c(comps), model(m) {}

    static Octonion cc(Complex z0, const Vec3c& z);
    static Octonion hh(const Quaternion& u, const Quaternion& v);
    static Octonion one(Model m = Model::CC);
    /// Imaginary basis unit e_k, k in 1..7 (model CC layout).
    static Octonion e(int k);

    Complex z0() const { return {c[0], c[1]}; }
    Vec3c zvec() const;
    Quaternion uq() const { return {c[0], c[1], c[2], c[3]}; }
    Quaternion vq() const { return {c[4], c[5], c[6], c[7]}; }

    Vec8 coords() const;
    static Octonion from_coords(const Vec8& v, Model m = Model::CC);

    double norm2() const;
    double norm() const { return std::sqrt(norm2()); }
    Octonion conj() const;
    Octonion inverse() const;
    double real() const { return c[0]; }

    Octonion operator+(const Octonion& o) const;
    Octonion operator-(const Octonion& o) const;
    Octonion operator*(double s) const;
    Octonion operator-() const { return *this * -1.0; }
};

/// Model-respecting product; throws on model mismatch.
Octonion oct_mul(const Octonion& a, const Octonion& b);

/// Convert between the CC and HH models (algebra isomorphism, isometry).
Octonion oct_convert(const Octonion& a, Octonion::Model target);

/// The section-pullback isometry (z0, z) |-> (conj z0, i z), model CC.
Octonion pullback_isometry(const Octonion& a);
/// Same map restricted to Im O as a 7x7 orthogonal matrix acting on e-coords.
Eigen::Matrix<double, 7, 7> pullback_isometry_im();

/// Matrices of left/right multiplication and conjugation by `a` in the
/// fixed real basis of the CC model. Conjugation requires a != 0.
struct MultOperators {
    Mat8 L, R, C;
};
MultOperators mult_operators(const Octonion& a);

double oct_dist(const Octonion& a, const Octonion& b);

}  // namespace hforge
