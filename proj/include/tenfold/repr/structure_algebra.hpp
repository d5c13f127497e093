#pragma once

// Finite-dimensional real *-algebras held as structure constants, plus the
// finite twisted crossed product construction: group algebras twisted by a
// cocycle over a coefficient algebra, with the convolution product and
// involution specialized to finite groups.

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "tenfold/cocycle.hpp"
#include "tenfold/errors.hpp"
#include "tenfold/repr/finite_group.hpp"

namespace tenfold {

struct StructureAlgebra {
    int dim = 0;
    std::vector<Eigen::MatrixXd> left; // left[i] = matrix of left multiplication by basis i
    Eigen::MatrixXd involution;        // the *-operation as a real-linear map
    Eigen::VectorXd unit;              // coordinates of the identity element

    Eigen::VectorXd mul(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
        Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
        for (int i = 0; i < dim; ++i)
            if (a[i] != 0.0) out += a[i] * (left[i] * b);
        return out;
    }

    Eigen::MatrixXd left_of(const Eigen::VectorXd& a) const {
        Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
        for (int i = 0; i < dim; ++i)
            if (a[i] != 0.0) out += a[i] * left[i];
        return out;
    }

    // right_of(a) columns: b_j * a.
    Eigen::MatrixXd right_of(const Eigen::VectorXd& a) const {
        Eigen::MatrixXd out(dim, dim);
        for (int j = 0; j < dim; ++j) out.col(j) = left[j] * a;
        return out;
    }

    Eigen::VectorXd star(const Eigen::VectorXd& a) const { return involution * a; }

    Eigen::VectorXd basis_vec(int i) const {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
        e[i] = 1.0;
        return e;
    }

    // Max residual of associativity on basis triples: L_{b_i b_j} vs L_i L_j.
    double associativity_residual() const {
        double worst = 0.0;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                Eigen::VectorXd prod = left[i].col(j); // b_i * b_j
                Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(dim, dim);
                for (int k = 0; k < dim; ++k)
                    if (prod[k] != 0.0) lhs += prod[k] * left[k];
                worst = std::max(worst, (lhs - left[i] * left[j]).cwiseAbs().maxCoeff());
            }
        return worst;
    }

    // Max residual of: involution squares to the identity, reverses products,
    // and fixes the unit.
    double involution_residual() const {
        double worst = (involution * involution - Eigen::MatrixXd::Identity(dim, dim))
                           .cwiseAbs()
                           .maxCoeff();
        worst = std::max(worst, (star(unit) - unit).cwiseAbs().maxCoeff());
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                Eigen::VectorXd lhs = star(left[i].col(j));
                Eigen::VectorXd rhs = mul(star(basis_vec(j)), star(basis_vec(i)));
                worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
            }
        return worst;
    }

    double unit_residual() const {
        double worst = 0.0;
        for (int i = 0; i < dim; ++i) {
            worst = std::max(worst, (mul(unit, basis_vec(i)) - basis_vec(i)).cwiseAbs().maxCoeff());
            worst = std::max(worst, (mul(basis_vec(i), unit) - basis_vec(i)).cwiseAbs().maxCoeff());
        }
        return worst;
    }

    void validate(double tol = 1e-12) const {
        require(associativity_residual() <= tol, errc::numeric,
                "structure constants are not associative");
        require(involution_residual() <= tol, errc::numeric,
                "involution is not an anti-automorphism of order two");
        require(unit_residual() <= tol, errc::numeric, "unit element fails");
    }

    // The real algebra R.
    static StructureAlgebra reals() {
        StructureAlgebra a;
        a.dim = 1;
        a.left = {Eigen::MatrixXd::Identity(1, 1)};
        a.involution = Eigen::MatrixXd::Identity(1, 1);
        a.unit = Eigen::VectorXd::Ones(1);
        return a;
    }

    // C as a real *-algebra, basis {1, i}, conjugation as involution.
    static StructureAlgebra complexes() {
        StructureAlgebra a;
        a.dim = 2;
        Eigen::MatrixXd li(2, 2);
        li << 0, -1, 1, 0;
        a.left = {Eigen::MatrixXd::Identity(2, 2), li};
        a.involution = Eigen::MatrixXd::Identity(2, 2);
        a.involution(1, 1) = -1;
        a.unit = Eigen::VectorXd::Zero(2);
        a.unit[0] = 1.0;
        return a;
    }
};

enum class BaseAlgebra { R, C };

// Twisted crossed product A x|_{(alpha, sigma)} G for a finite group, with
// basis a_i delta_g indexed as g * dim(A) + i:
//   (a delta_g)(b delta_h) = a alpha_g(b) sigma(g,h) delta_{gh},
//   (a delta_g)^*          = sigma(g^-1, g)^* alpha_{g^-1}(a^*) delta_{g^-1}.
inline StructureAlgebra crossed_product(
    const StructureAlgebra& base, const FiniteGroup& group,
    const std::vector<Eigen::MatrixXd>& alpha,
    const std::function<Eigen::VectorXd(int, int)>& sigma) {
    require(static_cast<int>(alpha.size()) == group.order, errc::precondition,
            "one automorphism per group element required");

    StructureAlgebra out;
    const int bd = base.dim;
    out.dim = bd * group.order;
    out.left.assign(out.dim, Eigen::MatrixXd::Zero(out.dim, out.dim));
    out.involution = Eigen::MatrixXd::Zero(out.dim, out.dim);
    out.unit = Eigen::VectorXd::Zero(out.dim);
    out.unit.segment(0, bd) = base.unit;

    for (int g = 0; g < group.order; ++g)
        for (int i = 0; i < bd; ++i) {
            const int row_index = g * bd + i;
            Eigen::MatrixXd& L = out.left[row_index];
            for (int h = 0; h < group.order; ++h) {
                const int gh = group.mul(g, h);
                const Eigen::VectorXd twist = sigma(g, h);
                for (int j = 0; j < bd; ++j) {
                    // (a_i delta_g)(a_j delta_h)
                    Eigen::VectorXd v =
                        base.mul(base.mul(base.basis_vec(i), alpha[g] * base.basis_vec(j)), twist);
                    L.block(gh * bd, h * bd + j, bd, 1) = v;
                }
            }
        }

    for (int g = 0; g < group.order; ++g) {
        const int gi = group.inverse(g);
        const Eigen::VectorXd front = base.star(sigma(gi, g));
        for (int i = 0; i < bd; ++i) {
            Eigen::VectorXd v = base.mul(front, alpha[gi] * base.star(base.basis_vec(i)));
            out.involution.block(gi * bd, g * bd + i, bd, 1) = v;
        }
    }
    return out;
}

// Real twisted group algebra of ({+-1}^n, phi, sigma) over R or C-as-real.
// Antiunitary generators act on the coefficients by complex conjugation.
inline StructureAlgebra twisted_group_algebra(const ParityGroupData& d, BaseAlgebra base) {
    require(validate_cocycle(d), errc::precondition,
            "cocycle does not satisfy the twisted 2-cocycle identity");
    for (GroupElem x = 0; x < d.order(); ++x)
        for (GroupElem y = 0; y < d.order(); ++y) {
            require(d.sig(x, y).is_fourth_root(), errc::precondition,
                    "twisted group algebra needs phases in {+-1, +-i}");
            if (base == BaseAlgebra::R)
                require(d.sig(x, y).is_real(), errc::precondition,
                        "real coefficients admit only +-1 cocycle values");
        }
    const StructureAlgebra coeff =
        base == BaseAlgebra::R ? StructureAlgebra::reals() : StructureAlgebra::complexes();
    const FiniteGroup group = FiniteGroup::parity(d.n);

    std::vector<Eigen::MatrixXd> alpha;
    alpha.reserve(group.order);
    for (int g = 0; g < group.order; ++g) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(coeff.dim, coeff.dim);
        if (base == BaseAlgebra::C && d.phi_of(GroupElem(g)) == -1) m(1, 1) = -1.0;
        alpha.push_back(std::move(m));
    }

    auto sigma = [&](int g, int h) {
        auto [re, im] = d.sig(GroupElem(g), GroupElem(h)).gaussian_value();
        Eigen::VectorXd v = Eigen::VectorXd::Zero(coeff.dim);
        v[0] = re;
        if (coeff.dim > 1) v[1] = im;
        return v;
    };
    return crossed_product(coeff, group, alpha, sigma);
}

} // namespace tenfold
