#pragma once

// Numerical Wedderburn decomposition of a finite-dimensional semisimple real
// *-algebra: split along the spectrum of a random self-adjoint central
// element (seeded RNG), then identify each simple block's division type by
// the dimension of the commutant of an irreducible action (1 -> R, 2 -> C,
// 4 -> H) and its matrix size from the block dimension.

#include <Eigen/Dense>
#include <random>

#include "tenfold/algebra_structure.hpp"
#include "tenfold/repr/structure_algebra.hpp"

namespace tenfold {

namespace detail {

// Basis of the nullspace of M (columns), via SVD with a relative threshold.
inline Eigen::MatrixXd nullspace(const Eigen::MatrixXd& m, double rel_tol = 1e-9) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = sv.size() ? sv[0] : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > std::max(scale * rel_tol, 1e-12)) ++rank;
    return svd.matrixV().rightCols(svd.matrixV().cols() - rank);
}

// Groups sorted eigenvalues into clusters separated by a relative gap.
inline std::vector<std::pair<int, int>> cluster_ranges(const Eigen::VectorXd& sorted_vals,
                                                       double rel_gap) {
    std::vector<std::pair<int, int>> ranges;
    const double scale = std::max(1.0, sorted_vals.cwiseAbs().maxCoeff());
    int start = 0;
    for (int i = 1; i <= sorted_vals.size(); ++i) {
        if (i == sorted_vals.size() || sorted_vals[i] - sorted_vals[i - 1] > rel_gap * scale) {
            ranges.push_back({start, i});
            start = i;
        }
    }
    return ranges;
}

struct OrthonormalFrame {
    Eigen::MatrixXd to_onb;   // P: orthonormal basis vectors as columns (algebra coords)
    Eigen::MatrixXd from_onb; // P^-1
};

// Orthonormalizes the algebra basis for the trace form <a,b> = tr L_{a* b},
// in which self-adjoint left/right multiplications become symmetric matrices.
inline OrthonormalFrame trace_frame(const StructureAlgebra& alg) {
    const int n = alg.dim;
    Eigen::VectorXd traces(n);
    for (int i = 0; i < n; ++i) traces[i] = alg.left[i].trace();
    Eigen::MatrixXd gram(n, n);
    for (int i = 0; i < n; ++i) {
        const Eigen::MatrixXd li = alg.left_of(alg.star(alg.basis_vec(i)));
        for (int j = 0; j < n; ++j) gram(i, j) = traces.dot(li.col(j));
    }
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    require(llt.info() == Eigen::Success, errc::numeric, "trace form is not positive definite");
    Eigen::MatrixXd lower = llt.matrixL();
    OrthonormalFrame f;
    f.to_onb = lower.transpose().inverse();
    f.from_onb = lower.transpose();
    return f;
}

} // namespace detail

inline AlgebraStructure wedderburn(const StructureAlgebra& alg, std::uint64_t seed = 20240) {
    const int n = alg.dim;
    const auto frame = detail::trace_frame(alg);

    // Self-adjoint center: z central with z* = z.
    Eigen::MatrixXd constraints(n * n + n, n);
    for (int i = 0; i < n; ++i)
        constraints.middleRows(i * n, n) = alg.left[i] - alg.right_of(alg.basis_vec(i));
    constraints.middleRows(n * n, n) = alg.involution - Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd sa_center = detail::nullspace(constraints);
    const int block_count = static_cast<int>(sa_center.cols());
    require(block_count >= 1, errc::numeric, "no self-adjoint central elements found");

    for (int attempt = 0; attempt < 8; ++attempt) {
        std::mt19937_64 rng(seed + attempt);
        std::normal_distribution<double> gauss;

        Eigen::VectorXd coeffs(block_count);
        for (int i = 0; i < block_count; ++i) coeffs[i] = gauss(rng);
        const Eigen::VectorXd central = sa_center * coeffs;

        Eigen::MatrixXd lc = frame.from_onb * alg.left_of(central) * frame.to_onb;
        lc = 0.5 * (lc + lc.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(lc);
        auto ranges = detail::cluster_ranges(eig.eigenvalues(), 1e-6);
        if (static_cast<int>(ranges.size()) != block_count) continue; // degenerate draw

        AlgebraStructure result;
        bool ok = true;
        for (const auto& [lo, hi] : ranges) {
            const int bdim = hi - lo;
            // Block basis: orthonormal-frame coordinates for restrictions,
            // algebra coordinates for products and the involution.
            const Eigen::MatrixXd blk_on = eig.eigenvectors().middleCols(lo, bdim);
            const Eigen::MatrixXd blk = frame.to_onb * blk_on;

            // Split the block, as a module over itself, along a random
            // self-adjoint block element acting on the right.
            Eigen::VectorXd rnd(bdim);
            for (int i = 0; i < bdim; ++i) rnd[i] = gauss(rng);
            Eigen::VectorXd a = blk * rnd;
            a = 0.5 * (a + alg.star(a));
            Eigen::MatrixXd ra = blk_on.transpose() *
                                 (frame.from_onb * alg.right_of(a) * frame.to_onb) * blk_on;
            ra = 0.5 * (ra + ra.transpose());
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> meig(ra);
            auto mranges = detail::cluster_ranges(meig.eigenvalues(), 1e-6);

            const int copies = static_cast<int>(mranges.size());
            const int wdim = mranges.front().second - mranges.front().first;
            for (const auto& [mlo, mhi] : mranges)
                if (mhi - mlo != wdim) ok = false;
            if (!ok || wdim * copies != bdim) {
                ok = false;
                break;
            }

            // Commutant of the restriction of the block action to one
            // irreducible summand.
            const Eigen::MatrixXd w_on = blk_on * meig.eigenvectors().middleCols(0, wdim);
            std::vector<Eigen::MatrixXd> acting;
            acting.reserve(bdim);
            for (int i = 0; i < bdim; ++i)
                acting.push_back(w_on.transpose() *
                                 (frame.from_onb * alg.left_of(blk.col(i)) * frame.to_onb) *
                                 w_on);
            // Commutant equations X L = L X, unknowns X_{uv} flattened as
            // u * wdim + v.
            Eigen::MatrixXd comm_constraints =
                Eigen::MatrixXd::Zero(bdim * wdim * wdim, wdim * wdim);
            for (int i = 0; i < bdim; ++i) {
                const Eigen::MatrixXd& L = acting[i];
                for (int p = 0; p < wdim; ++p)
                    for (int q = 0; q < wdim; ++q) {
                        const int row = (i * wdim + p) * wdim + q;
                        for (int v = 0; v < wdim; ++v) {
                            comm_constraints(row, p * wdim + v) += L(v, q); // (X L)_{pq}
                            comm_constraints(row, v * wdim + q) -= L(p, v); // (L X)_{pq}
                        }
                    }
            }
            const int delta = static_cast<int>(detail::nullspace(comm_constraints).cols());
            if (delta != 1 && delta != 2 && delta != 4) {
                ok = false;
                break;
            }
            const int msize = wdim / delta;
            if (msize * delta != wdim || msize * msize * delta != bdim) {
                ok = false;
                break;
            }
            // Cross-check against the dimension of the self-adjoint part of
            // the block, which distinguishes M_k(R) from M_{k/2}(H).
            const Eigen::MatrixXd sa_map =
                (alg.involution - Eigen::MatrixXd::Identity(n, n)) * blk;
            const int d_sa = static_cast<int>(detail::nullspace(sa_map).cols());
            int expect_sa = 0;
            Division div = Division::R;
            if (delta == 1) {
                div = Division::R;
                expect_sa = msize * (msize + 1) / 2;
            } else if (delta == 2) {
                div = Division::C;
                expect_sa = msize * msize;
            } else {
                div = Division::H;
                expect_sa = msize * (2 * msize - 1);
            }
            if (d_sa != expect_sa) {
                ok = false;
                break;
            }
            result.blocks.push_back({div, msize});
        }
        if (!ok) continue;
        result.canonicalize();
        require(result.real_dim() == n, errc::numeric, "block dimensions do not add up");
        return result;
    }
    fail(errc::numeric, "wedderburn: central spectra failed to separate after 8 seeds");
}

} // namespace tenfold
