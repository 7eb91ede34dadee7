#include "hforge/bundle.hpp"

#include <stdexcept>

#include "hforge/spin_algebra.hpp"

namespace hforge {

namespace {

std::vector<Mat> gram_schmidt(std::vector<Mat> in, const std::vector<Mat>& against) {
    std::vector<Mat> base = against;
    std::vector<Mat> out;
    for (Mat m : in) {
        for (const Mat& o : base) m -= (o.transpose() * m).trace() / (o.transpose() * o).trace() * o;
        const double n = std::sqrt((m.transpose() * m).trace());
        if (n > 1e-8) {
            m /= n;
            base.push_back(m);
            out.push_back(m);
        }
    }
    return out;
}

}  // namespace

Mat triple_to_block(const SpinTriple& t) {
    Mat m = Mat::Zero(24, 24);
    m.block<8, 8>(0, 0) = t.A;
    m.block<8, 8>(8, 8) = t.B;
    m.block<8, 8>(16, 16) = t.C;
    return m;
}

SpinTriple block_to_triple(const Mat& m) {
    SpinTriple t;
    t.A = m.block<8, 8>(0, 0);
    t.B = m.block<8, 8>(8, 8);
    t.C = m.block<8, 8>(16, 16);
    return t;
}

std::vector<Mat> sp2_algebra_real() {
    std::vector<Mat> out;
    const Quaternion units[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
    // imaginary diagonal entries
    for (int d = 0; d < 2; ++d)
        for (const auto& q : units) {
            std::vector<std::vector<Quaternion>> m(2, std::vector<Quaternion>(2));
            m[d][d] = q;
            m[1 - d][1 - d] = Quaternion{};
            m[0][1] = Quaternion{};
            m[1][0] = Quaternion{};
            m[d][d] = q;
            out.push_back(quatmat_to_real(m));
        }
    // off-diagonal q at (1,0), -conj q at (0,1)
    const Quaternion offs[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                                Quaternion::k()};
    for (const auto& q : offs) {
        std::vector<std::vector<Quaternion>> m(2, std::vector<Quaternion>(2));
        m[0][0] = Quaternion{};
        m[1][1] = Quaternion{};
        m[1][0] = q;
        m[0][1] = -q.conj();
        out.push_back(quatmat_to_real(m));
    }
    return out;
}

std::vector<Mat> sp1_fiber_real() {
    std::vector<Mat> out;
    for (const auto& q : {Quaternion::i(), Quaternion::j(), Quaternion::k()}) {
        std::vector<std::vector<Quaternion>> m(2, std::vector<Quaternion>(2));
        m[0][0] = Quaternion{};
        m[0][1] = Quaternion{};
        m[1][0] = Quaternion{};
        m[1][1] = q;
        out.push_back(quatmat_to_real(m));
    }
    return out;
}

std::vector<Mat> su3_algebra_real() {
    std::vector<Mat> out;
    const Complex kI{0.0, 1.0};
    std::vector<Matc> gens;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Matc a = Matc::Zero(3, 3);
            a(i, j) = 1.0;
            a(j, i) = -1.0;
            gens.push_back(a);
            Matc b = Matc::Zero(3, 3);
            b(i, j) = kI;
            b(j, i) = kI;
            gens.push_back(b);
        }
    Matc d1 = Matc::Zero(3, 3);
    d1(0, 0) = kI;
    d1(1, 1) = -kI;
    gens.push_back(d1);
    Matc d2 = Matc::Zero(3, 3);
    d2(1, 1) = kI;
    d2(2, 2) = -kI;
    gens.push_back(d2);
    for (const auto& g : gens) out.push_back(realify(g));
    return out;
}

std::vector<Mat> su2_fiber_real() {
    std::vector<Mat> out;
    const Complex kI{0.0, 1.0};
    std::vector<Matc> gens;
    Matc a = Matc::Zero(3, 3);
    a(1, 2) = 1.0;
    a(2, 1) = -1.0;
    gens.push_back(a);
    Matc b = Matc::Zero(3, 3);
    b(1, 2) = kI;
    b(2, 1) = kI;
    gens.push_back(b);
    Matc c = Matc::Zero(3, 3);
    c(1, 1) = kI;
    c(2, 2) = -kI;
    gens.push_back(c);
    for (const auto& g : gens) out.push_back(realify(g));
    return out;
}

BundleDescriptor bundle_sp2_s7() {
    BundleDescriptor b;
    b.name = "Sp(2)->S^7";
    b.group_size = 8;
    b.base_dim = 8;
    b.projection = [](const Mat& g) { return Vec(g.col(0)); };
    b.fiber = gram_schmidt(sp1_fiber_real(), {});
    b.algebra = b.fiber;
    auto rest = gram_schmidt(sp2_algebra_real(), b.fiber);
    b.algebra.insert(b.algebra.end(), rest.begin(), rest.end());
    b.horizontal = rest;
    Vec p = Vec::Zero(8);
    p(0) = 1.0;
    b.base_point = p;
    return b;
}

BundleDescriptor bundle_su3_s5() {
    BundleDescriptor b;
    b.name = "SU(3)->S^5";
    b.group_size = 6;
    b.base_dim = 6;
    b.projection = [](const Mat& g) { return Vec(g.col(0)); };
    b.fiber = gram_schmidt(su2_fiber_real(), {});
    b.algebra = b.fiber;
    auto rest = gram_schmidt(su3_algebra_real(), b.fiber);
    b.algebra.insert(b.algebra.end(), rest.begin(), rest.end());
    b.horizontal = rest;
    Vec p = Vec::Zero(6);
    p(0) = 1.0;
    b.base_point = p;
    return b;
}

BundleDescriptor bundle_g2_s6() {
    BundleDescriptor b;
    b.name = "G2->S^6";
    b.group_size = 7;
    b.base_dim = 7;
    b.projection = [](const Mat& g) { return Vec(g.col(0)); };
    const auto& bases = spin7_algebra_basis();
    std::vector<Mat> g2;
    for (const auto& t : bases.g2) g2.push_back(im7_restrict(t.A));
    // fiber su(3): elements annihilating e1
    std::vector<Mat> fib;
    for (const auto& m : g2)
        if ((m.col(0)).norm() < 1e-9) fib.push_back(m);
    // numerically robust: project out via nullspace of X -> X e1
    if (fib.size() != 8) {
        Eigen::MatrixXd c(7, g2.size());
        for (std::size_t r = 0; r < g2.size(); ++r) c.col(r) = g2[r].col(0);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(c, Eigen::ComputeFullV);
        int rank = 0;
        for (int i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 1e-9) ++rank;
        const Eigen::MatrixXd nsp =
            svd.matrixV().rightCols(static_cast<int>(g2.size()) - rank).transpose();
        fib.clear();
        for (int r = 0; r < nsp.rows(); ++r) {
            Mat m = Mat::Zero(7, 7);
            for (std::size_t k = 0; k < g2.size(); ++k) m += nsp(r, k) * g2[k];
            fib.push_back(m);
        }
    }
    b.fiber = gram_schmidt(fib, {});
    if (b.fiber.size() != 8)
        throw std::runtime_error("bundle_g2_s6: su(3) fiber dimension != 8");
    b.algebra = b.fiber;
    auto rest = gram_schmidt(g2, b.fiber);
    b.algebra.insert(b.algebra.end(), rest.begin(), rest.end());
    b.horizontal = rest;
    Vec p = Vec::Zero(7);
    p(0) = 1.0;
    b.base_point = p;
    return b;
}

namespace {
Vec spin_project_b1(const Mat& g) { return Vec(g.block<8, 1>(8, 8)); }
}  // namespace

BundleDescriptor bundle_spin7_s7() {
    BundleDescriptor b;
    b.name = "Spin(7)->S^7";
    b.group_size = 24;
    b.base_dim = 8;
    b.spin_blocks = true;
    b.projection = spin_project_b1;
    const auto& bases = spin7_algebra_basis();
    std::vector<Mat> alg, fib;
    for (const auto& t : bases.spin7) alg.push_back(triple_to_block(t));
    for (const auto& t : bases.g2) fib.push_back(triple_to_block(t));
    b.fiber = gram_schmidt(fib, {});
    b.algebra = b.fiber;
    auto rest = gram_schmidt(alg, b.fiber);
    b.algebra.insert(b.algebra.end(), rest.begin(), rest.end());
    b.horizontal = rest;
    Vec p = Vec::Zero(8);
    p(0) = 1.0;
    b.base_point = p;
    return b;
}

BundleDescriptor bundle_spin5_s7() {
    BundleDescriptor b;
    b.name = "Sp(2)=Spin(5)->S^7 (triples)";
    b.group_size = 24;
    b.base_dim = 8;
    b.spin_blocks = true;
    b.projection = spin_project_b1;
    const auto& bases = spin7_algebra_basis();
    std::vector<Mat> alg, fib;
    for (const auto& t : bases.spin5) alg.push_back(triple_to_block(t));
    for (const auto& t : bases.su2_fiber) fib.push_back(triple_to_block(t));
    b.fiber = gram_schmidt(fib, {});
    b.algebra = b.fiber;
    auto rest = gram_schmidt(alg, b.fiber);
    b.algebra.insert(b.algebra.end(), rest.begin(), rest.end());
    b.horizontal = rest;
    Vec p = Vec::Zero(8);
    p(0) = 1.0;
    b.base_point = p;
    return b;
}

BundleDescriptor bundle_g2_v72() {
    BundleDescriptor b;
    b.name = "G2->V_{7,2}";
    b.group_size = 7;
    b.base_dim = 14;
    b.projection = [](const Mat& g) {
        Vec out(14);
        out.head(7) = g.col(0);
        out.tail(7) = g.col(1);
        return out;
    };
    const auto& bases = spin7_algebra_basis();
    std::vector<Mat> alg, fib;
    for (const auto& t : bases.g2) alg.push_back(im7_restrict(t.A));
    for (const auto& t : bases.su2_fiber) fib.push_back(im7_restrict(t.A));
    b.fiber = gram_schmidt(fib, {});
    b.algebra = b.fiber;
    auto rest = gram_schmidt(alg, b.fiber);
    b.algebra.insert(b.algebra.end(), rest.begin(), rest.end());
    b.horizontal = rest;
    Vec p(14);
    p.setZero();
    p(0) = 1.0;   // e1
    p(8) = 1.0;   // e2 in the second block
    b.base_point = p;
    return b;
}

}  // namespace hforge
