#pragma once

// Finite Packer-Raeburn decomposition: rewriting A x|_(alpha,sigma) G as an
// iterated crossed product (A x| N) x|_(beta,nu) G/N for a normal subgroup N
// inside ker(c), with the twisting pair computed from a set-theoretic
// section, and the numerical comparison of both sides.

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "tenfold/phase.hpp"
#include "tenfold/repr/finite_group.hpp"
#include "tenfold/repr/structure_algebra.hpp"
#include "tenfold/repr/wedderburn.hpp"

namespace tenfold {

// Scalar-twisted system over a finite group: coefficients R or C-as-real,
// antiunitary elements (phi = -1) acting by conjugation, U(1) cocycle with
// values in {+-1, +-i}, and a grading homomorphism c.
struct TwistedSystem {
    FiniteGroup group;
    BaseAlgebra base = BaseAlgebra::R;
    std::vector<int> phi;
    std::vector<int> c;
    std::vector<std::vector<UnitPhase>> sigma;

    static TwistedSystem untwisted(FiniteGroup g, BaseAlgebra base_) {
        TwistedSystem s;
        s.group = std::move(g);
        s.base = base_;
        s.phi.assign(s.group.order, 1);
        s.c.assign(s.group.order, 1);
        s.sigma.assign(s.group.order, std::vector<UnitPhase>(s.group.order, UnitPhase::one()));
        return s;
    }

    void validate() const {
        const int n = group.order;
        require(static_cast<int>(phi.size()) == n && static_cast<int>(c.size()) == n &&
                    static_cast<int>(sigma.size()) == n,
                errc::precondition, "phi/c/sigma tables have wrong size");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                require(phi[group.mul(a, b)] == phi[a] * phi[b], errc::precondition,
                        "phi is not a homomorphism");
                require(c[group.mul(a, b)] == c[a] * c[b], errc::precondition,
                        "c is not a homomorphism");
            }
        for (int x = 0; x < n; ++x)
            require(sigma[x][0].is_one() && sigma[0][x].is_one(), errc::precondition,
                    "cocycle is not normalized");
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                require(sigma[x][y].is_fourth_root(), errc::precondition,
                        "cocycle values must lie in {+-1, +-i}");
                if (base == BaseAlgebra::R)
                    require(sigma[x][y].is_real(), errc::precondition,
                            "real coefficients admit only +-1 cocycle values");
                for (int z = 0; z < n; ++z) {
                    const UnitPhase lhs = sigma[x][y] * sigma[group.mul(x, y)][z];
                    const UnitPhase rhs =
                        sigma[y][z].twisted_by(phi[x]) * sigma[x][group.mul(y, z)];
                    require(lhs == rhs, errc::precondition,
                            "sigma fails the twisted 2-cocycle identity");
                }
            }
    }

    StructureAlgebra coefficient_algebra() const {
        return base == BaseAlgebra::R ? StructureAlgebra::reals()
                                      : StructureAlgebra::complexes();
    }

    Eigen::VectorXd phase_vec(const UnitPhase& p) const {
        auto [re, im] = p.gaussian_value();
        Eigen::VectorXd v = Eigen::VectorXd::Zero(base == BaseAlgebra::R ? 1 : 2);
        v[0] = re;
        if (base == BaseAlgebra::C) v[1] = im;
        return v;
    }

    StructureAlgebra algebra() const {
        validate();
        const StructureAlgebra coeff = coefficient_algebra();
        std::vector<Eigen::MatrixXd> alpha;
        for (int g = 0; g < group.order; ++g) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Identity(coeff.dim, coeff.dim);
            if (base == BaseAlgebra::C && phi[g] == -1) m(1, 1) = -1.0;
            alpha.push_back(std::move(m));
        }
        auto sig = [this](int g, int h) { return phase_vec(sigma[g][h]); };
        return crossed_product(coeff, group, alpha, sig);
    }
};

struct FiniteExtension {
    FiniteGroup group;                       // G
    std::vector<int> normal;                 // elements of the normal subgroup N
    std::optional<std::vector<int>> section; // coset representatives, s(eN) = e
};

struct DecomposedSystem {
    StructureAlgebra inner;                       // A x| N
    FiniteGroup quotient;                         // G/N
    std::vector<int> section;                     // s_p in G
    std::vector<Eigen::MatrixXd> beta;            // beta_p = gamma_{s_p} on the inner algebra
    std::vector<std::vector<Eigen::VectorXd>> nu; // nu(p,q) as inner-algebra elements
    double twisting_pair_residual = 0.0;          // identities (3a)-(3b) and unitarity
};

namespace detail {

// N as a FiniteGroup over sorted element indices, plus the index lookup.
struct SubgroupTable {
    FiniteGroup sub;
    std::vector<int> elems;       // sorted, elems[0] = 0
    std::vector<int> index_in_n;  // G-element -> N-index or -1
};

inline SubgroupTable subgroup_table(const FiniteGroup& g, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    require(!elems.empty() && elems[0] == 0, errc::precondition,
            "normal subgroup must contain the identity");
    SubgroupTable out;
    out.elems = elems;
    out.index_in_n.assign(g.order, -1);
    for (std::size_t i = 0; i < elems.size(); ++i) out.index_in_n[elems[i]] = int(i);
    const int k = static_cast<int>(elems.size());
    std::vector<std::vector<int>> rows(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const int prod = g.mul(elems[i], elems[j]);
            require(out.index_in_n[prod] >= 0, errc::precondition, "set is not closed");
            rows[i][j] = out.index_in_n[prod];
        }
    out.sub = FiniteGroup(std::move(rows));
    return out;
}

} // namespace detail

inline DecomposedSystem packer_raeburn_decompose(const TwistedSystem& sys,
                                                 const FiniteExtension& ext) {
    sys.validate();
    require(ext.group.order == sys.group.order && ext.group.table == sys.group.table,
            errc::precondition, "extension group differs from the system group");
    require(sys.group.is_normal(ext.normal), errc::precondition,
            "subgroup is not normal in G");
    for (int n : ext.normal)
        require(sys.c[n] == 1, errc::precondition, "normal subgroup must lie inside ker(c)");

    const auto nt = detail::subgroup_table(sys.group, ext.normal);
    const auto quot = make_quotient(sys.group, nt.elems,
                                    ext.section ? &*ext.section : nullptr);

    // Inner algebra A x| N with the restricted data.
    const StructureAlgebra coeff = sys.coefficient_algebra();
    const int bd = coeff.dim;
    std::vector<Eigen::MatrixXd> alpha_n;
    for (int i = 0; i < nt.sub.order; ++i) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(bd, bd);
        if (sys.base == BaseAlgebra::C && sys.phi[nt.elems[i]] == -1) m(1, 1) = -1.0;
        alpha_n.push_back(std::move(m));
    }
    auto sigma_n = [&](int i, int j) {
        return sys.phase_vec(sys.sigma[nt.elems[i]][nt.elems[j]]);
    };
    StructureAlgebra inner = crossed_product(coeff, nt.sub, alpha_n, sigma_n);

    // gamma_x on the inner algebra:
    //   gamma_x(a) = alpha_x(a) on coefficients,
    //   gamma_x(n) = sigma(x,n) sigma(x n x^-1, x)^-1 delta_{x n x^-1}.
    auto gamma_matrix = [&](int x) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(inner.dim, inner.dim);
        const int xi = sys.group.inverse(x);
        for (int i = 0; i < nt.sub.order; ++i) {
            const int n = nt.elems[i];
            const int conj = sys.group.mul(sys.group.mul(x, n), xi);
            const int ci = nt.index_in_n[conj];
            const UnitPhase phase = sys.sigma[x][n] * sys.sigma[conj][x].inverse();
            for (int j = 0; j < bd; ++j) {
                Eigen::VectorXd v = Eigen::VectorXd::Zero(bd);
                v[j] = 1.0;
                if (sys.base == BaseAlgebra::C && sys.phi[x] == -1) v[1] = -v[1];
                // multiply the coefficient by the phase inside the base algebra
                Eigen::VectorXd w = coeff.mul(sys.phase_vec(phase), v);
                m.block(ci * bd, i * bd + j, bd, 1) = w;
            }
        }
        return m;
    };

    DecomposedSystem out;
    out.inner = std::move(inner);
    out.quotient = quot.quotient;
    out.section = quot.section;
    for (int p = 0; p < quot.quotient.order; ++p) out.beta.push_back(gamma_matrix(quot.section[p]));

    out.nu.assign(quot.quotient.order, {});
    for (int p = 0; p < quot.quotient.order; ++p)
        for (int q = 0; q < quot.quotient.order; ++q) {
            const int sp = quot.section[p], sq = quot.section[q];
            const int spq = quot.section[quot.quotient.mul(p, q)];
            const int defect = sys.group.mul(sys.group.mul(sp, sq), sys.group.inverse(spq));
            const int ni = nt.index_in_n[defect];
            require(ni >= 0, errc::numeric, "section defect left the normal subgroup");
            const UnitPhase phase = sys.sigma[sp][sq] * sys.sigma[defect][spq].inverse();
            Eigen::VectorXd v = Eigen::VectorXd::Zero(out.inner.dim);
            v.segment(ni * bd, bd) = sys.phase_vec(phase);
            out.nu[p].push_back(std::move(v));
        }

    // Twisting-pair identities: beta_p beta_q = Ad(nu(p,q)) beta_{pq} and
    // nu(p,q) nu(pq,r) = beta_p(nu(q,r)) nu(p,qr); nu values are unitary.
    double worst = 0.0;
    const auto& B = out.inner;
    for (int p = 0; p < quot.quotient.order; ++p)
        for (int q = 0; q < quot.quotient.order; ++q) {
            const Eigen::VectorXd& u = out.nu[p][q];
            const Eigen::VectorXd ustar = B.star(u);
            worst = std::max(worst,
                             (B.mul(u, ustar) - B.unit).cwiseAbs().maxCoeff()); // unitarity
            const int pq = quot.quotient.mul(p, q);
            Eigen::MatrixXd lhs = out.beta[p] * out.beta[q];
            Eigen::MatrixXd ad = B.left_of(u) * B.right_of(ustar);
            worst = std::max(worst, (lhs - ad * out.beta[pq]).cwiseAbs().maxCoeff());
            for (int rr = 0; rr < quot.quotient.order; ++rr) {
                const Eigen::VectorXd a = B.mul(out.nu[p][q], out.nu[pq][rr]);
                const Eigen::VectorXd b =
                    B.mul(out.beta[p] * out.nu[q][rr], out.nu[p][quot.quotient.mul(q, rr)]);
                worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
            }
        }
    out.twisting_pair_residual = worst;
    require(worst < 1e-12, errc::numeric, "decomposed twisting pair fails its identities");
    return out;
}

// Dimension of the center, from the nullspace of the commutator constraints.
inline int center_dimension(const StructureAlgebra& alg) {
    Eigen::MatrixXd constraints(alg.dim * alg.dim, alg.dim);
    for (int i = 0; i < alg.dim; ++i)
        constraints.middleRows(i * alg.dim, alg.dim) =
            alg.left[i] - alg.right_of(alg.basis_vec(i));
    return static_cast<int>(detail::nullspace(constraints).cols());
}

// True iff A x| G and (A x| N) x| G/N agree in dimension, center dimension,
// and Wedderburn block multiset.
inline bool packer_raeburn_verify(const TwistedSystem& sys, const FiniteExtension& ext,
                                  std::uint64_t seed = 5150) {
    const StructureAlgebra full = sys.algebra();
    const DecomposedSystem dec = packer_raeburn_decompose(sys, ext);

    auto nu_fn = [&dec](int p, int q) { return dec.nu[p][q]; };
    const StructureAlgebra iterated =
        crossed_product(dec.inner, dec.quotient, dec.beta, nu_fn);
    full.validate();
    iterated.validate();

    if (full.dim != iterated.dim) return false;
    if (center_dimension(full) != center_dimension(iterated)) return false;
    return wedderburn(full, seed) == wedderburn(iterated, seed);
}

} // namespace tenfold
