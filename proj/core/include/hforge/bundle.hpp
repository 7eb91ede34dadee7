#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "hforge/group_element.hpp"
#include "hforge/sphere.hpp"

namespace hforge {

/// Homogeneous principal-bundle data for the numeric lift integrator.
/// Group elements are real matrices; Spin triples use the 24x24
/// block-diagonal form. The fiber subalgebra basis spans the isotropy
/// directions at the identity; the horizontal complement is precomputed.
struct BundleDescriptor {
    std::string name;
    int group_size = 0;
    int base_dim = 0;
    bool spin_blocks = false;  ///< 3 diagonal 8x8 blocks, triality checked not corrected
    std::function<Vec(const Mat&)> projection;
    std::vector<Mat> algebra;
    std::vector<Mat> fiber;
    std::vector<Mat> horizontal;
    Vec base_point;
};

BundleDescriptor bundle_sp2_s7();
BundleDescriptor bundle_su3_s5();
BundleDescriptor bundle_g2_s6();
BundleDescriptor bundle_spin7_s7();
BundleDescriptor bundle_spin5_s7();  ///< Sp(2) in triple form over S^7
BundleDescriptor bundle_g2_v72();

/// Block-diagonal embedding of a triple and its inverse.
Mat triple_to_block(const SpinTriple& t);
SpinTriple block_to_triple(const Mat& m);

/// sp(2) and su(3) algebra bases in the matrix realizations used above.
std::vector<Mat> sp2_algebra_real();
std::vector<Mat> sp1_fiber_real();     ///< diag(0, Im H)
std::vector<Mat> su3_algebra_real();   ///< realified su(3), dimension 8
std::vector<Mat> su2_fiber_real();     ///< realified lower-block su(2)

}  // namespace hforge
