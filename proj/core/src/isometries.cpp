#include "hforge/isometries.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

namespace hforge {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Layout helpers: real index of Re z_k is 2k, of Im z_k is 2k+1.
Mat from_assignments(int n, const int* src, const double* sgn) {
    Mat m = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, src[i]) = sgn[i];
    return m;
}
}  // namespace

Mat isometry_f1() {
    // (Re z0 + i Im z1, Re z1 - i Im z0, Re z2 + i Re z3, -Im z2 + i Im z3)
    const int src[8] = {0, 3, 2, 1, 4, 6, 5, 7};
    const double sgn[8] = {1, 1, 1, -1, 1, 1, -1, 1};
    return from_assignments(8, src, sgn);
}

Mat isometry_f2() {
    // (Re z0 - i Re z1, Im z0 + i Im z1, Im z3 + i Im z2, Re z3 - i Re z2)
    const int src[8] = {0, 2, 1, 3, 7, 5, 6, 4};
    const double sgn[8] = {1, -1, 1, 1, 1, 1, 1, -1};
    return from_assignments(8, src, sgn);
}

Mat isometry_f3() {
    // (a,b,c,d) -> (a + i d, c + i b); fixes z0, z1. Layout in:
    // (Re z0, Im z0, Re z1, Im z1, a, b, c, d); out: (..., Re z2, Im z2, Re z3, Im z3)
    const int src[8] = {0, 1, 2, 3, 4, 7, 6, 5};
    const double sgn[8] = {1, 1, 1, 1, 1, 1, 1, 1};
    return from_assignments(8, src, sgn);
}

Mat isometry_f5() {
    // (z0, z1, a, b) -> (a + i b, z1, Re z0, Im z0); layout (Re z0, Im z0, Re z1, Im z1, a, b)
    const int src[6] = {4, 5, 2, 3, 0, 1};
    const double sgn[6] = {1, 1, 1, 1, 1, 1};
    return from_assignments(6, src, sgn);
}

Mat isometry_f6() {
    // (iy, w, a, b) -> (ia, b + iy, Re w, Im w); layout (y, Re w, Im w, a, b)
    const int src[5] = {3, 4, 0, 1, 2};
    const double sgn[5] = {1, 1, 1, 1, 1};
    return from_assignments(5, src, sgn);
}

Mat coordinate_isometry(const std::string& id) {
    if (id == "f1") return isometry_f1();
    if (id == "f2") return isometry_f2();
    if (id == "f3") return isometry_f3();
    if (id == "f5") return isometry_f5();
    if (id == "f6") return isometry_f6();
    throw std::invalid_argument("coordinate_isometry: unknown id " + id);
}

Mat so_log(const Mat& R) {
    const int n = static_cast<int>(R.rows());
    Eigen::RealSchur<Mat> schur(R);
    const Mat& T = schur.matrixT();
    const Mat& Z = schur.matrixU();
    Mat L = Mat::Zero(n, n);
    std::vector<int> minus_ones;
    int i = 0;
    while (i < n) {
        if (i + 1 < n && std::abs(T(i + 1, i)) > 1e-12) {
            const double th = std::atan2(T(i + 1, i), T(i, i));
            L(i, i + 1) = -th;
            L(i + 1, i) = th;
            i += 2;
        } else {
            if (T(i, i) < 0.0) minus_ones.push_back(i);
            i += 1;
        }
    }
    if (minus_ones.size() % 2 != 0)
        throw std::invalid_argument("so_log: determinant is not +1");
    for (std::size_t k = 0; k + 1 < minus_ones.size(); k += 2) {
        const int a = minus_ones[k], b = minus_ones[k + 1];
        L(a, b) = -kPi;
        L(b, a) = kPi;
    }
    return Z * L * Z.transpose();
}

Mat mat_exp(const Mat& A) { return A.exp(); }

Mat rotation_path(const Mat& R, double s) { return mat_exp(s * so_log(R)); }

void orthonormalize2(Eigen::VectorXd& c1, Eigen::VectorXd& c2) {
    const double n1 = c1.norm();
    if (n1 < 1e-12) throw std::runtime_error("orthonormalize2: first column degenerate");
    c1 /= n1;
    c2 -= c1.dot(c2) * c1;
    const double n2 = c2.norm();
    if (n2 < 1e-12) throw std::runtime_error("orthonormalize2: columns dependent");
    c2 /= n2;
}

}  // namespace hforge
