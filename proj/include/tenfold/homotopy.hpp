#pragma once

// Numerical difference-group machinery on the rank-two chiral circle model:
// loops of 2x2 gradings anticommuting with sigma_3, spectral flattening,
// winding numbers from principal-branch phase increments, gauge conjugation,
// the swap rotation homotopy, and trivializing paths from odd involutions.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "tenfold/errors.hpp"

namespace tenfold {

using complexd = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using MatrixXc = Eigen::MatrixXcd;

inline Matrix2c pauli(int k) {
    Matrix2c m;
    switch (k) {
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, complexd(0, -1), complexd(0, 1), 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: m.setIdentity();
    }
    return m;
}

// Hermitian matrix with a declared spectral gap around zero.
struct GappedMatrix {
    MatrixXc h;
    double gap = 1e-9;

    GappedMatrix(MatrixXc m, double g) : h(std::move(m)), gap(g) {
        require(gap > 0, errc::precondition, "declared gap must be positive");
        require((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12, errc::precondition,
                "matrix is not hermitian");
    }
};

// Symmetry operator with its declared commutation sign: theta H = sign H theta.
struct DeclaredSymmetry {
    MatrixXc op;
    int sign = 1;
};

// sgn(H) by eigendecomposition. Preserves declared (anti)commutation
// relations; checked on the supplied operators.
inline MatrixXc spectral_flatten(const GappedMatrix& gm,
                                 const std::vector<DeclaredSymmetry>& symmetries = {}) {
    Eigen::SelfAdjointEigenSolver<MatrixXc> eig(gm.h);
    require(eig.eigenvalues().cwiseAbs().minCoeff() >= gm.gap, errc::gapless,
            "eigenvalue inside the declared gap");
    Eigen::VectorXd signs(eig.eigenvalues().size());
    for (int i = 0; i < signs.size(); ++i) signs[i] = eig.eigenvalues()[i] > 0 ? 1.0 : -1.0;
    MatrixXc flat = eig.eigenvectors() * signs.asDiagonal() * eig.eigenvectors().adjoint();
    for (const auto& sym : symmetries) {
        const double resid =
            (sym.op * flat - double(sym.sign) * flat * sym.op).cwiseAbs().maxCoeff();
        require(resid < 1e-9, errc::numeric,
                "flattening broke a declared symmetry relation");
    }
    return flat;
}

// Closed loop of 2x2 gradings Gamma(theta_j), theta_j = 2 pi j / M, each
// hermitian, squaring to 1 and anticommuting with sigma_3.
struct GradingFamily {
    std::vector<Matrix2c> samples;

    std::size_t size() const { return samples.size(); }

    // Residual of the grading conditions over all samples.
    double residual() const {
        const Matrix2c s3 = pauli(3);
        double worst = 0.0;
        for (const auto& g : samples) {
            worst = std::max(worst, (g - g.adjoint()).cwiseAbs().maxCoeff());
            worst = std::max(worst, (g * g - Matrix2c::Identity()).cwiseAbs().maxCoeff());
            worst = std::max(worst, (g * s3 + s3 * g).cwiseAbs().maxCoeff());
        }
        return worst;
    }

    void validate(double tol = 1e-9) const {
        require(size() >= 2, errc::invalid_sample, "family needs at least two samples");
        require(residual() < tol, errc::invalid_sample,
                "sample is not a valid sigma_3-anticommuting grading");
    }
};

// Gamma(theta) = cos(f) sigma_1 + sin(f) sigma_2 for a phase function f.
inline GradingFamily make_phase_family(const std::vector<double>& phases) {
    GradingFamily fam;
    fam.samples.reserve(phases.size());
    for (double f : phases)
        fam.samples.push_back(std::cos(f) * pauli(1) + std::sin(f) * pauli(2));
    return fam;
}

template <typename F>
GradingFamily sample_phase_function(F&& f, std::size_t m = 256) {
    require(m >= 64, errc::precondition, "sampled families use at least 64 points");
    std::vector<double> phases(m);
    for (std::size_t j = 0; j < m; ++j)
        phases[j] = f(2.0 * 3.14159265358979323846 * double(j) / double(m));
    return make_phase_family(phases);
}

namespace detail {

// Phase of a sample from its (sigma_1, sigma_2) coefficients.
inline double sample_phase(const Matrix2c& g) {
    const double c1 = g(1, 0).real();
    const double c2 = g(1, 0).imag();
    require(std::hypot(c1, c2) > 1e-9, errc::invalid_sample,
            "degenerate sample: vanishing sigma_1/sigma_2 coefficients");
    return std::atan2(c2, c1);
}

} // namespace detail

// Integer winding of the loop. Adjacent principal-branch increments must stay
// below pi/2; otherwise the sampling cannot distinguish the homotopy class.
inline long long winding(const GradingFamily& fam) {
    fam.validate();
    const std::size_t m = fam.size();
    std::vector<double> phase(m);
    for (std::size_t j = 0; j < m; ++j) phase[j] = detail::sample_phase(fam.samples[j]);
    const double pi = 3.14159265358979323846;
    double total = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double step = phase[(j + 1) % m] - phase[j];
        while (step > pi) step -= 2.0 * pi;
        while (step <= -pi) step += 2.0 * pi;
        require(std::abs(step) < pi / 2.0, errc::step_too_large,
                "adjacent phase step >= pi/2: sampling too coarse");
        total += step;
    }
    const double turns = total / (2.0 * pi);
    const long long result = std::llround(turns);
    require(std::abs(turns - double(result)) < 1e-6, errc::numeric,
            "winding sum is not an integer");
    return result;
}

// Difference class of the ordered pair (g1, g2): winding(g2) - winding(g1).
// Zero iff the two loops are homotopic among sigma_3-anticommuting gradings.
inline long long difference_class(const GradingFamily& g1, const GradingFamily& g2) {
    require(g1.size() == g2.size(), errc::precondition, "families use different grids");
    return winding(g2) - winding(g1);
}

// Pointwise gauge conjugation by exp(-i k theta sigma_3 / 2); shifts the
// winding by k. For k = 2 this is the coordinate change mapping the constant
// loop to the winding-two loop.
inline GradingFamily conjugate_family(const GradingFamily& fam, long long k) {
    GradingFamily out;
    out.samples.reserve(fam.size());
    const double pi = 3.14159265358979323846;
    for (std::size_t j = 0; j < fam.size(); ++j) {
        const double theta = 2.0 * pi * double(j) / double(fam.size());
        Matrix2c u;
        const complexd w = std::exp(complexd(0, -0.5 * double(k) * theta));
        u << w, 0, 0, std::conj(w);
        out.samples.push_back(u * fam.samples[j] * u.adjoint());
    }
    return out;
}

// Verifies the rotation homotopy between Gamma_1 (+) Gamma_2 and
// Gamma_2 (+) Gamma_1 fibrewise: endpoints match and every intermediate
// matrix is a grading anticommuting with sigma_3 (+) sigma_3.
inline bool direct_sum_swap_check(const GradingFamily& g1, const GradingFamily& g2,
                                  int steps = 33, double tol = 1e-9) {
    require(g1.size() == g2.size(), errc::precondition, "families use different grids");
    g1.validate();
    g2.validate();
    const double pi = 3.14159265358979323846;
    Eigen::Matrix4cd s33 = Eigen::Matrix4cd::Zero();
    s33.topLeftCorner(2, 2) = pauli(3);
    s33.bottomRightCorner(2, 2) = pauli(3);
    for (std::size_t j = 0; j < g1.size(); ++j) {
        Eigen::Matrix4cd direct = Eigen::Matrix4cd::Zero();
        direct.topLeftCorner(2, 2) = g1.samples[j];
        direct.bottomRightCorner(2, 2) = g2.samples[j];
        Eigen::Matrix4cd swapped = Eigen::Matrix4cd::Zero();
        swapped.topLeftCorner(2, 2) = g2.samples[j];
        swapped.bottomRightCorner(2, 2) = g1.samples[j];
        for (int t = 0; t <= steps; ++t) {
            const double angle = 0.5 * pi * double(t) / double(steps);
            Eigen::Matrix4cd rot = Eigen::Matrix4cd::Zero();
            const double co = std::cos(angle), si = std::sin(angle);
            rot.topLeftCorner(2, 2) = co * Matrix2c::Identity();
            rot.topRightCorner(2, 2) = -si * Matrix2c::Identity();
            rot.bottomLeftCorner(2, 2) = si * Matrix2c::Identity();
            rot.bottomRightCorner(2, 2) = co * Matrix2c::Identity();
            const Eigen::Matrix4cd path = rot * direct * rot.transpose();
            if (t == 0 && (path - direct).cwiseAbs().maxCoeff() > tol) return false;
            if (t == steps && (path - swapped).cwiseAbs().maxCoeff() > tol) return false;
            if ((path * path - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() > tol)
                return false;
            if ((path * s33 + s33 * path).cwiseAbs().maxCoeff() > tol) return false;
        }
    }
    return true;
}

// Path Gamma(t) = cos(t) gamma + sin(t) inv for t in [0, pi]: a homotopy from
// gamma to -gamma through gradings, given an odd involution. Operators in
// `symmetries` must graded-commute with inv (even ones commute, odd ones
// anticommute).
inline std::vector<MatrixXc> trivializing_path(const MatrixXc& gamma, const MatrixXc& inv,
                                               const std::vector<DeclaredSymmetry>& symmetries = {},
                                               int steps = 64) {
    const auto dim = gamma.rows();
    require((inv * inv - MatrixXc::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-9,
            errc::not_involution, "operator does not square to +1");
    require((inv * gamma + gamma * inv).cwiseAbs().maxCoeff() < 1e-9, errc::not_odd,
            "operator does not anticommute with the grading");
    for (const auto& sym : symmetries) {
        const double resid =
            (inv * sym.op - double(sym.sign) * sym.op * inv).cwiseAbs().maxCoeff();
        require(resid < 1e-9, errc::precondition,
                "involution does not graded-commute with a declared symmetry");
    }
    const double pi = 3.14159265358979323846;
    std::vector<MatrixXc> path;
    path.reserve(steps + 1);
    for (int t = 0; t <= steps; ++t) {
        const double angle = pi * double(t) / double(steps);
        MatrixXc sample = std::cos(angle) * gamma + std::sin(angle) * inv;
        require((sample * sample - MatrixXc::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-9,
                errc::numeric, "path sample is not a grading");
        path.push_back(std::move(sample));
    }
    return path;
}

} // namespace tenfold
