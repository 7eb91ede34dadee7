#include "hforge/rng.hpp"

#include <cmath>

namespace hforge {

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

Eigen::VectorXd Rng::gaussian_vec(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = gaussian();
    return v;
}

Eigen::VectorXd Rng::unit_vec(int n) {
    Eigen::VectorXd v = gaussian_vec(n);
    double nn = v.norm();
    while (nn < 1e-12) {
        v = gaussian_vec(n);
        nn = v.norm();
    }
    return v / nn;
}

Quaternion Rng::unit_quaternion() {
    const Eigen::VectorXd v = unit_vec(4);
    return {v(0), v(1), v(2), v(3)};
}

Quaternion Rng::unit_imaginary() {
    const Eigen::VectorXd v = unit_vec(3);
    return {0.0, v(0), v(1), v(2)};
}

Octonion Rng::unit_octonion(Octonion::Model m) {
    const Eigen::VectorXd v = unit_vec(8);
    Octonion o;
    o.model = m;
    for (int i = 0; i < 8; ++i) o.c[i] = v(i);
    return o;
}

Eigen::Vector3cd Rng::gaussian_vec3c() {
    Eigen::Vector3cd z;
    for (int i = 0; i < 3; ++i) z(i) = Complex{gaussian(), gaussian()};
    return z;
}

Eigen::MatrixXcd Rng::special_unitary(int n) {
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = Complex{gaussian(), gaussian()};
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // fix phases so R has positive diagonal, then fix det to 1
    for (int i = 0; i < n; ++i) {
        Complex d = r(i, i);
        if (std::abs(d) < 1e-300) d = 1.0;
        q.col(i) *= d / std::abs(d);
    }
    const Complex det = q.determinant();
    q.col(0) /= det;
    return q;
}

}  // namespace hforge
