#pragma once

#include <Eigen/Dense>

#include "hforge/kappa_deform.hpp"
#include "hforge/lift.hpp"
#include "hforge/octonion.hpp"
#include "hforge/smash.hpp"
#include "hforge/tau.hpp"
#include "hforge/sphere.hpp"

namespace hforge {

/// Evaluator for the staged deformation alpha between kappa o p^2 (sigma=0)
/// and (N, Sigma^2 tau) (sigma=1). Rotation-path matrices are precomputed
/// per sigma; evaluation is pure.
class AlphaEvaluator {
  public:
    explicit AlphaEvaluator(double sigma);
    /// x: point of S^7 in octonion coordinates. Columns in Im O coordinates.
    Frame2 operator()(const Vec8& x) const;
    Vec frame14(const Vec8& x) const;
    double sigma() const { return sigma_; }
    static int stage_count() { return 8; }
    static std::vector<Stage> schedule();

  private:
    double sigma_ = 0.0;
    int stage_ = 0;
    double u_ = 0.0;
    Mat r5_, r6_, rdom_, rtgt_;
};

Frame2 alpha(const Vec8& x, double sigma);

/// The final tau: S^5 (span x2..x7 of Im O) -> S^3 (span x4..x7); input and
/// output as coordinate vectors.
Vec4 tau_map(const Vec6& w);

struct PipelineConfig {
    LiftConfig lift;
};

/// In-fiber corrected boundary family of Construction homlift:
///   d(alpha_0)(v0) . d(alpha_s)(v0)^{-1} . d(alpha_s)(v),
/// all three by numeric lift in G2 -> V_{7,2}; v0 is the e1 direction.
/// Values fix e1 and e2 (SU(2) fiber), returned as 7x7 matrices.
Mat corrected_boundary_homotopy(const Vec7& v, double s,
                                const PipelineConfig& cfg = {});

/// The constant conjugator d(alpha_0)(v0) . d(alpha_1)(v0)^{-1}, as a
/// complex 3x3 special-unitary matrix (equals diag(-1, i, i)).
Matc pipeline_conjugator();

/// Null homotopy of the 12th power of the Sp(2) characteristic map. Input
/// (p, u) on S^6 in Im H x H; s in [0, 1]. Stage A (s <= 1/2): pointwise
/// square of the corrected boundary family, read in the quaternion chart of
/// the SU(2) fiber. Stage B: the SU(3) null homotopy at the suspended-tau
/// coordinates.
Quaternion null_homotopy_d12(const VecPU& v, double s,
                             const PipelineConfig& cfg = {});

enum class CommutatorVariant { Comm12, Power12 };

/// Master null homotopy: s = 0 gives [a,b]^12 (Comm12) or [a, b^12]
/// (Power12); s = 1 gives 1. Schedule: collapse stage, commutator
/// deformation stage, then the d12 stage.
Quaternion null_homotopy_commutator(const Quaternion& a, const Quaternion& b,
                                    CommutatorVariant variant, double s,
                                    const PipelineConfig& cfg = {});

std::vector<Stage> master_schedule();

/// Homotopy handles for the CLI frame exporter.
HomotopyHandle handle_comm12(const Quaternion& a, const Quaternion& b);
HomotopyHandle handle_power12(const Quaternion& a, const Quaternion& b);
HomotopyHandle handle_d12(const VecPU& v);
HomotopyHandle handle_kappa(const Vec8& x);

}  // namespace hforge
