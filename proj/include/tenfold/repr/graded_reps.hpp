#pragma once

// Explicit real graded Clifford modules. The regular representation of
// Cl_{r,s} is built from the sigma_{r,s} structure constants and split into
// irreducible graded submodules along a random even self-adjoint element of
// the commutant; multiplicities, equivalences, and endomorphism dimensions
// are read off from character sums over the finite group of signed Clifford
// monomials. Restriction matrices (forgetting the last positive generator)
// and their cokernels give the super-representation groups.

#include <Eigen/Dense>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "tenfold/abelian.hpp"
#include "tenfold/errors.hpp"
#include "tenfold/repr/wedderburn.hpp"

namespace tenfold {

// Graded module with grading diag(+1_p, -1_q) and odd generator matrices
// (negative-square generators first).
struct GradedRep {
    int p = 0;
    int q = 0;
    std::vector<Eigen::MatrixXd> gens;
    std::vector<int> signs; // declared square of each generator, +-1

    int dim() const { return p + q; }

    Eigen::VectorXd grading_diag() const {
        Eigen::VectorXd g(dim());
        g.head(p).setOnes();
        g.tail(q).setConstant(-1.0);
        return g;
    }

    // Max residual over: generators odd, pairwise anticommuting, squaring to
    // their declared sign.
    double residual() const {
        const Eigen::VectorXd g = grading_diag();
        const int d = dim();
        double worst = 0.0;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const Eigen::MatrixXd& a = gens[i];
            Eigen::MatrixXd anti = a.array().colwise() * g.array();
            anti += (a.array().rowwise() * g.transpose().array()).matrix();
            worst = std::max(worst, anti.cwiseAbs().maxCoeff()); // Gamma a + a Gamma
            worst = std::max(worst, (a * a - double(signs[i]) * Eigen::MatrixXd::Identity(d, d))
                                        .cwiseAbs()
                                        .maxCoeff());
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                worst = std::max(worst, (a * gens[j] + gens[j] * a).cwiseAbs().maxCoeff());
        }
        return worst;
    }
};

namespace detail {

// Character data over the 2^m monomial masks of an m-generator module, with
// rho(x) the ascending-bit-order product of generator matrices.
struct CharTable {
    int m = 0;
    std::vector<double> chi;    // tr rho(x)
    std::vector<double> chi_g;  // tr Gamma rho(x)
    std::vector<double> tr_sq;  // tr rho(x) rho(x)
    std::vector<double> tr_gsq; // tr rho(x)^T Gamma rho(x)^T Gamma
};

inline void char_dfs(const GradedRep& rep, const Eigen::VectorXd& g, const Eigen::MatrixXd& m,
                     std::uint32_t mask, int next, CharTable& out) {
    const int d = rep.dim();
    double chi = m.trace();
    double chi_g = 0.0, tr_sq = 0.0, tr_gsq = 0.0;
    for (int i = 0; i < d; ++i) chi_g += g[i] * m(i, i);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            tr_sq += m(i, j) * m(j, i);
            tr_gsq += m(i, j) * m(j, i) * g[i] * g[j];
        }
    out.chi[mask] = chi;
    out.chi_g[mask] = chi_g;
    out.tr_sq[mask] = tr_sq;
    out.tr_gsq[mask] = tr_gsq;
    for (int b = next; b < static_cast<int>(rep.gens.size()); ++b)
        char_dfs(rep, g, m * rep.gens[b], mask | (1u << b), b + 1, out);
}

inline CharTable characters(const GradedRep& rep) {
    CharTable out;
    out.m = static_cast<int>(rep.gens.size());
    const std::size_t n = std::size_t(1) << out.m;
    out.chi.assign(n, 0.0);
    out.chi_g.assign(n, 0.0);
    out.tr_sq.assign(n, 0.0);
    out.tr_gsq.assign(n, 0.0);
    char_dfs(rep, rep.grading_diag(), Eigen::MatrixXd::Identity(rep.dim(), rep.dim()), 0, 0, out);
    return out;
}

inline int rounded_dim(double value, const char* what) {
    const long long r = std::llround(value);
    require(std::abs(value - double(r)) < 1e-6 && r >= 0, errc::numeric,
            std::string("non-integer dimension for ") + what);
    return static_cast<int>(r);
}

// dim of the even intertwiner space Hom_even(W, V) over the first
// `shared_bits` generators, via the averaging projector's trace.
inline int hom_even_dim(const CharTable& v, const CharTable& w, int shared_bits) {
    double total = 0.0;
    for (std::uint32_t x = 0; x < (std::uint32_t(1) << shared_bits); ++x)
        total += v.chi[x] * w.chi[x] + v.chi_g[x] * w.chi_g[x];
    return rounded_dim(total / double(std::uint64_t(1) << (shared_bits + 1)), "Hom_even");
}

// dim of the symmetric part of End_even(W); equals 1 iff W is irreducible.
inline int sym_end_even_dim(const CharTable& w) {
    const int delta = hom_even_dim(w, w, w.m);
    double twist = 0.0;
    for (std::uint32_t x = 0; x < (std::uint32_t(1) << w.m); ++x)
        twist += w.tr_sq[x] + w.tr_gsq[x];
    twist /= double(std::uint64_t(1) << (w.m + 1));
    return rounded_dim(0.5 * (double(delta) + twist), "sym End_even");
}

// sigma_{r,s}(x, y) as a sign, evaluated directly from the bilinear form
// sum_{j<i} x_i y_j + sum_{i<=r} x_i y_i; avoids dense cocycle tables for
// the ten-generator modules.
inline int clifford_sign(int r, GroupElem x, GroupElem y) {
    int parity = 0;
    GroupElem rest = x;
    while (rest) {
        const int i = std::countr_zero(rest);
        rest &= rest - 1;
        parity += std::popcount(y & ((GroupElem(1) << i) - 1));
    }
    parity += std::popcount(x & y & ((GroupElem(1) << r) - 1));
    return parity % 2 == 0 ? 1 : -1;
}

// Left multiplication by the i-th Clifford generator on the monomial basis
// of the sigma_{r,s} twisted group algebra.
inline Eigen::MatrixXd monomial_generator(int r, int s, int i) {
    const GroupElem m = GroupElem(1) << (r + s);
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, m);
    const GroupElem g = GroupElem(1) << i;
    for (GroupElem y = 0; y < m; ++y) out(g ^ y, y) = double(clifford_sign(r, g, y));
    return out;
}

} // namespace detail

// All pairwise inequivalent irreducible graded Cl_{r,s}-modules, found by
// splitting the regular module and its parity reverse. The list has length 1
// or 2; completeness is certified by the regular-representation dimension
// count.
inline std::vector<GradedRep> build_irreducible_graded_reps(int r, int s,
                                                            std::uint64_t seed = 77001) {
    require(r >= 0 && s >= 0 && r + s <= 10, errc::precondition,
            "graded representations supported for r + s <= 10");
    const int n = r + s;
    const GroupElem m = GroupElem(1) << n;

    std::vector<Eigen::MatrixXd> gens;
    std::vector<int> signs;
    for (int i = 0; i < n; ++i) {
        gens.push_back(detail::monomial_generator(r, s, i));
        signs.push_back(i < r ? -1 : 1);
    }
    Eigen::VectorXd parity(m);
    for (GroupElem x = 0; x < m; ++x) parity[x] = (std::popcount(x) % 2 == 0) ? 1.0 : -1.0;

    // Even self-adjoint monomials: sigma(x,x) = +1 and even parity.
    std::vector<GroupElem> sa_support;
    for (GroupElem x = 0; x < m; ++x)
        if (parity[x] > 0 && detail::clifford_sign(r, x, x) == 1) sa_support.push_back(x);

    for (int attempt = 0; attempt < 8; ++attempt) {
        std::mt19937_64 rng(seed + attempt);
        std::normal_distribution<double> gauss;

        // Right multiplication by a random even self-adjoint element.
        Eigen::MatrixXd ra = Eigen::MatrixXd::Zero(m, m);
        for (GroupElem x : sa_support) {
            const double coeff = gauss(rng);
            if (x == 0) {
                ra += coeff * Eigen::MatrixXd::Identity(m, m);
                continue;
            }
            for (GroupElem y = 0; y < m; ++y)
                ra(y ^ x, y) += coeff * double(detail::clifford_sign(r, y, x));
        }
        ra = 0.5 * (ra + ra.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(ra);
        const auto ranges = detail::cluster_ranges(eig.eigenvalues(), 1e-6);

        std::vector<GradedRep> pieces;
        bool ok = true;
        for (int reversed = 0; reversed < 2 && ok; ++reversed) {
            const double sign_flip = reversed ? -1.0 : 1.0;
            for (const auto& [lo, hi] : ranges) {
                const int w = hi - lo;
                const Eigen::MatrixXd sub = eig.eigenvectors().middleCols(lo, w);
                // Sort the subspace into homogeneous parts of the grading.
                Eigen::MatrixXd gamma_sub =
                    sub.transpose() * (sub.array().colwise() * (sign_flip * parity.array())).matrix();
                gamma_sub = 0.5 * (gamma_sub + gamma_sub.transpose());
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gs(gamma_sub);
                int q_count = 0;
                for (int i = 0; i < w; ++i)
                    if (gs.eigenvalues()[i] < 0) ++q_count;
                if ((gs.eigenvalues().array().abs() - 1.0).abs().maxCoeff() > 1e-9) {
                    ok = false; // subspace is not grading-invariant; degenerate draw
                    break;
                }
                // Eigenvalues ascend: -1 block first; reorder to +1 block first.
                Eigen::MatrixXd frame(int(m), w);
                frame.leftCols(w - q_count) = sub * gs.eigenvectors().rightCols(w - q_count);
                frame.rightCols(q_count) = sub * gs.eigenvectors().leftCols(q_count);

                GradedRep piece;
                piece.p = w - q_count;
                piece.q = q_count;
                piece.signs = signs;
                for (const auto& g : gens) piece.gens.push_back(frame.transpose() * g * frame);
                if (piece.residual() > 1e-12) {
                    ok = false;
                    break;
                }
                pieces.push_back(std::move(piece));
            }
        }
        if (!ok) continue;

        std::vector<detail::CharTable> tables;
        tables.reserve(pieces.size());
        for (const auto& piece : pieces) tables.push_back(detail::characters(piece));
        for (std::size_t i = 0; i < pieces.size() && ok; ++i)
            if (detail::sym_end_even_dim(tables[i]) != 1) ok = false; // reducible piece
        if (!ok) continue;

        // Dedup by graded equivalence and certify the dimension count.
        std::vector<GradedRep> reps;
        std::vector<detail::CharTable> rep_tables;
        std::vector<int> mult;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            bool matched = false;
            for (std::size_t k = 0; k < reps.size() && !matched; ++k)
                if (pieces[i].dim() == reps[k].dim() &&
                    detail::hom_even_dim(tables[i], rep_tables[k], n) > 0) {
                    ++mult[k];
                    matched = true;
                }
            if (!matched) {
                reps.push_back(pieces[i]);
                rep_tables.push_back(tables[i]);
                mult.push_back(1);
            }
        }
        long long counted = 0;
        for (std::size_t k = 0; k < reps.size(); ++k) counted += (long long)mult[k] * reps[k].dim();
        require(counted == 2LL * m, errc::numeric,
                "irreducible pieces do not fill the regular representation");
        require(reps.size() == 1 || reps.size() == 2, errc::numeric,
                "unexpected number of irreducible graded modules");
        // Put the even-heavy module first for a deterministic order.
        if (reps.size() == 2 && reps[0].p < reps[1].p) std::swap(reps[0], reps[1]);
        return reps;
    }
    fail(errc::numeric, "graded splitting failed to separate after 8 seeds");
}

// Integer matrix whose column j decomposes the j-th irreducible graded
// Cl_{r,s+1}-module, restricted by forgetting the last positive generator,
// into irreducible graded Cl_{r,s}-modules. Multiplicities are the even
// intertwiner space dimensions divided by the endomorphism dimension of the
// target irreducible.
inline IntMatrix restriction_matrix(int r, int s, std::uint64_t seed = 77001) {
    require(r + s <= 9, errc::precondition, "restriction supported for r + s <= 9");
    const auto subs = build_irreducible_graded_reps(r, s, seed);
    const auto supers = build_irreducible_graded_reps(r, s + 1, seed);

    std::vector<detail::CharTable> sub_tables, super_tables;
    std::vector<int> delta;
    for (const auto& w : subs) {
        sub_tables.push_back(detail::characters(w));
        delta.push_back(detail::hom_even_dim(sub_tables.back(), sub_tables.back(), r + s));
    }
    for (const auto& v : supers) super_tables.push_back(detail::characters(v));

    IntMatrix out(subs.size(), supers.size());
    for (std::size_t j = 0; j < supers.size(); ++j) {
        long long dim_check = 0;
        for (std::size_t i = 0; i < subs.size(); ++i) {
            // The super-module characters restricted to masks over the first
            // r+s generators are the characters of the restriction.
            const int hom = detail::hom_even_dim(super_tables[j], sub_tables[i], r + s);
            require(hom % delta[i] == 0, errc::numeric, "multiplicity is not integral");
            const int mij = hom / delta[i];
            out.at(i, j) = mij;
            dim_check += (long long)mij * subs[i].dim();
        }
        require(dim_check == supers[j].dim(), errc::numeric,
                "restriction does not fill the module");
    }
    return out;
}

// SR(Cl_{r,s}) as the cokernel of the restriction map.
inline AbelianGroup sr_bruteforce(int r, int s, std::uint64_t seed = 77001) {
    return cokernel(restriction_matrix(r, s, seed));
}

} // namespace tenfold
