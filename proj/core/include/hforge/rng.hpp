#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "hforge/octonion.hpp"
#include "hforge/quaternion.hpp"

namespace hforge {

/// Deterministic splitmix64 stream. Streams derived from (seed, sample index)
/// are independent of evaluation order and thread count.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    static Rng stream(std::uint64_t seed, std::uint64_t sample) {
        Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (sample + 1)));
        r.next();
        return r;
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + uniform() * (b - a); }

    /// Standard normal via Box-Muller.
    double gaussian();

    Eigen::VectorXd gaussian_vec(int n);
    /// Uniform point on S^{n-1} in R^n.
    Eigen::VectorXd unit_vec(int n);
    Quaternion unit_quaternion();
    /// Imaginary quaternion on the unit 2-sphere.
    Quaternion unit_imaginary();
    Octonion unit_octonion(Octonion::Model m = Octonion::Model::CC);
    Eigen::Vector3cd gaussian_vec3c();
    /// Haar-ish special unitary matrix from QR of a complex Gaussian.
    Eigen::MatrixXcd special_unitary(int n);

  private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace hforge
