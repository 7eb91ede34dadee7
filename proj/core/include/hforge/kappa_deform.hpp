#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>

#include "hforge/octonion.hpp"
#include "hforge/sphere.hpp"

namespace hforge {

/// Ordered pair of orthonormal columns (a Stiefel point V_{m,2}).
struct Frame2 {
    Vec c1, c2;
    double orthonormality_residual() const;
};

/// kappa via octonion conjugation: columns conj(sigma a) e_k (sigma a) for
/// k = 1, 2, computed with the CC product. Input must be a unit octonion.
/// Columns are returned in Im O coordinates (7 components).
Frame2 kappa(const Octonion& a);

/// Closed complex-coordinate form of kappa; agrees with kappa to 1e-12.
Frame2 kappa_closed(const Octonion& a);

/// The staged column deformations kappa~_1(s), kappa~_2(s), s in [0, pi/2].
Vec7 kappa_t1(const Octonion& a, double s);
Vec7 kappa_t2(const Octonion& a, double s);

/// H_kappa: S^7 x [0, pi+1] -> V_{7,2}; s = 0 gives kappa, s = pi+1 the map
/// h built from the two Hopf variants. Columns are orthonormalized; the
/// pre-orthonormalization minimum singular value is reported (must stay
/// positive, else the deformation would degenerate).
struct HKappaResult {
    Frame2 frame;
    double min_singular_value = 0.0;
};
HKappaResult h_kappa(const Octonion& a, double s);

/// The map h (endpoint of H_kappa) and its f3-conjugated core.
Frame2 h_map(const Octonion& a);

/// Squaring deformation on S^{n+2}: s in [0, pi/2]; s = 0 is p^2, s = pi/2
/// the lower double suspension of the squaring map of S^n (last two
/// coordinates frozen). Internally a two-stage schedule (the displayed
/// deformation followed by a rescale), normalized onto the sphere.
Vec h_square(int n, const Vec& x, double s);

/// Stabilization of a pair homotopy into V_{m,2} to one into V_{m+2,2} with
/// the (c,d)/(-d,c) tail blocks.
using PairHomotopy = std::function<std::pair<Vec, Vec>(const Vec&, double)>;
PairHomotopy stiefel_stabilize(const PairHomotopy& inner);

}  // namespace hforge
