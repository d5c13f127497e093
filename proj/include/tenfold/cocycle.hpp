#pragma once

// Symmetry data (G, c, phi, sigma) for parity groups G = {+-1}^n, with group
// elements encoded as n-bit masks and the cocycle held as a dense 2^n x 2^n
// table of exact phases. Provides cocycle validation against the twisted
// 2-cocycle identity, reduction to at most two antiunitary generators,
// extraction of the standardized sign data, exterior equivalence transforms,
// and the reduction to {+-1}-valued cocycles.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tenfold/errors.hpp"
#include "tenfold/phase.hpp"

namespace tenfold {

using GroupElem = std::uint32_t; // bitmask in {0, ..., 2^n - 1}

struct ParityGroupData {
    int n = 0;                          // number of Z_2 generators (n <= 8)
    std::vector<int> phi;               // +-1 per generator: antiunitary iff -1
    std::vector<int> c;                 // +-1 per generator: odd iff -1
    std::vector<UnitPhase> sigma;       // 2^n * 2^n table, row-major

    ParityGroupData() = default;
    ParityGroupData(int n_, std::vector<int> phi_, std::vector<int> c_)
        : n(n_), phi(std::move(phi_)), c(std::move(c_)) {
        require(n >= 0 && n <= 8, errc::precondition, "parity group needs 0 <= n <= 8");
        require(static_cast<int>(phi.size()) == n && static_cast<int>(c.size()) == n,
                errc::precondition, "phi/c length must equal n");
        sigma.assign(std::size_t(order()) * order(), UnitPhase::one());
    }

    GroupElem order() const { return GroupElem(1) << n; }

    UnitPhase& sig(GroupElem x, GroupElem y) { return sigma[std::size_t(x) * order() + y]; }
    const UnitPhase& sig(GroupElem x, GroupElem y) const {
        return sigma[std::size_t(x) * order() + y];
    }

    // phi and c extended to the whole group multiplicatively.
    int phi_of(GroupElem x) const { return sign_of(x, phi); }
    int c_of(GroupElem x) const { return sign_of(x, c); }

private:
    int sign_of(GroupElem x, const std::vector<int>& gen_signs) const {
        int s = 1;
        for (int i = 0; i < n; ++i)
            if (x >> i & 1u) s *= gen_signs[i];
        return s;
    }
};

// sigma(x,y) = prod_{i>j} eps[i][j]^{x_i y_j} * prod_i squares[i]^{x_i y_i},
// the bilinear-form cocycle realizing generators with prescribed squares and
// pairwise commutation signs. Always a valid 2-cocycle for any phi.
inline ParityGroupData make_sign_cocycle(int n, std::vector<int> phi, std::vector<int> c,
                                         const std::vector<std::vector<int>>& eps,
                                         const std::vector<int>& squares) {
    ParityGroupData d(n, std::move(phi), std::move(c));
    for (GroupElem x = 0; x < d.order(); ++x)
        for (GroupElem y = 0; y < d.order(); ++y) {
            int s = 1;
            for (int i = 0; i < n; ++i) {
                if (!(x >> i & 1u)) continue;
                if (y >> i & 1u) s *= squares[i];
                for (int j = 0; j < i; ++j)
                    if (y >> j & 1u) s *= eps[i][j];
            }
            d.sig(x, y) = UnitPhase::from_sign(s);
        }
    return d;
}

// The Clifford cocycle sigma_{r,s} on Z_2^{r+s}: all generators pairwise
// anticommute, the first r square to -1 and the rest to +1.
inline ParityGroupData clifford_cocycle(int r, int s) {
    const int n = r + s;
    std::vector<std::vector<int>> eps(n, std::vector<int>(n, -1));
    std::vector<int> squares(n, 1);
    for (int i = 0; i < r; ++i) squares[i] = -1;
    return make_sign_cocycle(n, std::vector<int>(n, 1), std::vector<int>(n, 1), eps, squares);
}

// True iff sigma is normalized and satisfies
// sigma(x,y) sigma(xy,z) = sigma(y,z)^x sigma(x,yz) for all triples.
inline bool validate_cocycle(const ParityGroupData& d) {
    const GroupElem m = d.order();
    for (GroupElem x = 0; x < m; ++x)
        if (!d.sig(x, 0).is_one() || !d.sig(0, x).is_one()) return false;
    for (GroupElem x = 0; x < m; ++x) {
        const int px = d.phi_of(x);
        for (GroupElem y = 0; y < m; ++y) {
            const UnitPhase sxy = d.sig(x, y);
            for (GroupElem z = 0; z < m; ++z) {
                UnitPhase lhs = sxy * d.sig(x ^ y, z);
                UnitPhase rhs = d.sig(y, z).twisted_by(px) * d.sig(x, y ^ z);
                if (!(lhs == rhs)) return false;
            }
        }
    }
    return true;
}

// sigma'(x,y) = lambda(x) lambda(y)^x sigma(x,y) lambda(xy)^-1 for a phase
// function with lambda(e) = 1. Output is exterior equivalent to the input.
inline ParityGroupData exterior_transform(const ParityGroupData& d,
                                          const std::vector<UnitPhase>& lambda) {
    require(lambda.size() == d.order(), errc::precondition, "lambda table has wrong size");
    require(lambda[0].is_one(), errc::precondition, "lambda(e) must be 1");
    ParityGroupData out = d;
    for (GroupElem x = 0; x < d.order(); ++x)
        for (GroupElem y = 0; y < d.order(); ++y)
            out.sig(x, y) = lambda[x] * lambda[y].twisted_by(d.phi_of(x)) * d.sig(x, y) *
                            lambda[x ^ y].inverse();
    return out;
}

// Result of the F_2 basis change reducing the antiunitary generator count:
// the new generator list (as old-group bitmasks) and the transported data.
struct ReducedParityData {
    ParityGroupData data;               // cocycle in the new basis
    std::vector<GroupElem> new_basis;   // new generator j = old element new_basis[j]
    int unitary_count = 0;              // generators with phi = +1 (listed first)
};

namespace detail {

// Greedy F_2 span bookkeeping over bitmasks.
class F2Span {
public:
    bool contains(GroupElem x) const {
        for (GroupElem b : echelon_) x = std::min(x, x ^ b);
        return x == 0;
    }
    bool insert(GroupElem x) {
        for (GroupElem b : echelon_) x = std::min(x, x ^ b);
        if (x == 0) return false;
        echelon_.push_back(x);
        for (std::size_t i = 0; i + 1 < echelon_.size(); ++i)
            if (echelon_[i] < x) std::swap(echelon_[i], x);
        return true;
    }

private:
    std::vector<GroupElem> echelon_; // decreasing leading bits
};

} // namespace detail

// Chooses a new F_2 basis of {+-1}^n whose generators split into ker(phi,c)
// generators followed by at most two generators mapping onto a basis of the
// image of (phi,c); at most two of them are antiunitary. If the image is all
// of {+-1}^2, the antiunitary pair is chosen as one even and one odd
// generator. Ties are broken by lowest bitmask. The cocycle is transported to
// the new basis by pullback.
inline ReducedParityData reduce_antiunitaries(const ParityGroupData& d) {
    require(validate_cocycle(d), errc::precondition, "cocycle does not validate");
    const GroupElem m = d.order();

    // Signature preference order for image generators: T-type (anti, even),
    // C-type (anti, odd), S-type (unitary, odd).
    const std::pair<int, int> wanted[] = {{-1, +1}, {-1, -1}, {+1, -1}};
    std::vector<GroupElem> image_gens;
    detail::F2Span image_span;
    for (auto [pw, cw] : wanted) {
        for (GroupElem x = 1; x < m; ++x) {
            if (d.phi_of(x) == pw && d.c_of(x) == cw) {
                image_gens.push_back(x);
                image_span.insert(x);
                break;
            }
        }
        if (image_gens.size() == 2) break; // image of (phi,c) has dimension <= 2
    }

    std::vector<GroupElem> kernel_gens;
    detail::F2Span total = image_span;
    for (GroupElem x = 1; x < m && kernel_gens.size() + image_gens.size() < std::size_t(d.n);
         ++x) {
        if (d.phi_of(x) != 1 || d.c_of(x) != 1) continue;
        if (total.insert(x)) kernel_gens.push_back(x);
    }
    require(kernel_gens.size() + image_gens.size() == std::size_t(d.n), errc::numeric,
            "basis completion failed");

    std::vector<GroupElem> basis = kernel_gens;
    basis.insert(basis.end(), image_gens.begin(), image_gens.end());

    // Transport: new element x maps to old element B(x).
    std::vector<GroupElem> to_old(m, 0);
    for (GroupElem x = 0; x < m; ++x) {
        GroupElem old = 0;
        for (int i = 0; i < d.n; ++i)
            if (x >> i & 1u) old ^= basis[i];
        to_old[x] = old;
    }

    std::vector<int> phi(d.n), c(d.n);
    for (int i = 0; i < d.n; ++i) {
        phi[i] = d.phi_of(basis[i]);
        c[i] = d.c_of(basis[i]);
    }
    ReducedParityData out{ParityGroupData(d.n, phi, c), basis,
                          static_cast<int>(kernel_gens.size())};
    for (GroupElem x = 0; x < m; ++x)
        for (GroupElem y = 0; y < m; ++y) out.data.sig(x, y) = d.sig(to_old[x], to_old[y]);
    return out;
}

// Standardized cocycle data: unitary generator squares fixed to +1,
// antiunitary squares are the +-1 invariants, two antiunitaries commute, and
// all residual pairwise signs are +-1.
struct StandardForm {
    ParityGroupData data;                          // the standardized cocycle
    std::vector<int> u_squares;                    // all +1
    std::vector<int> a_squares;                    // +-1 per antiunitary generator
    std::vector<std::vector<int>> commutation_signs; // n x n, theta_i theta_j = s_ij theta_j theta_i
};

namespace detail {

inline bool is_reduced_layout(const ParityGroupData& d) {
    int seen_image = 0; // count of generators outside ker(phi,c)
    int antis = 0;
    for (int i = 0; i < d.n; ++i) {
        const bool in_kernel = d.phi[i] == 1 && d.c[i] == 1;
        if (in_kernel) {
            if (seen_image) return false; // kernel generators must come first
        } else {
            ++seen_image;
            if (d.phi[i] == -1) ++antis;
        }
    }
    return seen_image <= 2 && antis <= 2;
}

} // namespace detail

inline StandardForm standardize(const ParityGroupData& d) {
    require(detail::is_reduced_layout(d), errc::precondition,
            "standardize requires reduced generator layout");
    require(validate_cocycle(d), errc::precondition, "cocycle does not validate");
    const GroupElem m = d.order();

    // Phase adjustments on generators: unitary squares to +1; for a pair of
    // antiunitaries, cross square roots make them commute.
    std::vector<GroupElem> anti;
    for (int i = 0; i < d.n; ++i)
        if (d.phi[i] == -1) anti.push_back(GroupElem(1) << i);
    std::vector<UnitPhase> gen_lambda(d.n, UnitPhase::one());
    for (int i = 0; i < d.n; ++i) {
        const GroupElem g = GroupElem(1) << i;
        if (d.phi[i] == 1) gen_lambda[i] = d.sig(g, g).inverse().sqrt();
    }
    if (anti.size() == 2) {
        const int i1 = std::countr_zero(anti[0]), i2 = std::countr_zero(anti[1]);
        gen_lambda[i1] = d.sig(anti[1], anti[0]).sqrt();
        gen_lambda[i2] = d.sig(anti[0], anti[1]).sqrt();
    }

    // Extend to the whole group by declaring each composite representative to
    // be the ordered product of adjusted generator representatives:
    // mu(z) for z = g_b * z' (b the lowest set bit) satisfies
    // mu(z) = lambda_b * mu(z')^{phi(g_b)} * sigma(g_b, z').
    std::vector<UnitPhase> mu(m, UnitPhase::one());
    for (GroupElem z = 1; z < m; ++z) {
        const int b = std::countr_zero(z);
        const GroupElem g = GroupElem(1) << b;
        const GroupElem rest = z ^ g;
        mu[z] = gen_lambda[b] * mu[rest].twisted_by(d.phi[b]) * d.sig(g, rest);
    }

    StandardForm out{exterior_transform(d, mu), {}, {}, {}};

    for (int i = 0; i < d.n; ++i) {
        const GroupElem g = GroupElem(1) << i;
        const UnitPhase sq = out.data.sig(g, g);
        require(sq.is_real(), errc::numeric, "generator square is not +-1 after standardization");
        if (d.phi[i] == 1) {
            require(sq.is_one(), errc::numeric, "unitary square not fixed to +1");
            out.u_squares.push_back(1);
        } else {
            out.a_squares.push_back(sq.sign());
        }
    }
    out.commutation_signs.assign(d.n, std::vector<int>(d.n, 1));
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) {
            if (i == j) continue;
            const GroupElem gi = GroupElem(1) << i, gj = GroupElem(1) << j;
            const UnitPhase ratio = out.data.sig(gi, gj) * out.data.sig(gj, gi).inverse();
            require(ratio.is_real(), errc::numeric, "commutation phase is not +-1");
            out.commutation_signs[i][j] = ratio.sign();
        }
    // Two antiunitaries must commute after the cross adjustment.
    if (anti.size() == 2) {
        const int i1 = std::countr_zero(anti[0]), i2 = std::countr_zero(anti[1]);
        require(out.commutation_signs[i1][i2] == 1, errc::numeric,
                "antiunitary pair failed to commute");
    }
    return out;
}

// Exterior-equivalent cocycle taking only {+-1} values on the centralizer of
// w (all of G here, G being abelian), via the square root of
// lambda(y) = sigma(w,y) / sigma(w y w^-1, w).
inline ParityGroupData pm1_reduce(const ParityGroupData& d, GroupElem w) {
    require(w < d.order(), errc::precondition, "element out of range");
    require(d.phi_of(w) == -1, errc::precondition, "pm1_reduce needs an antiunitary element");
    require(validate_cocycle(d), errc::precondition, "cocycle does not validate");
    std::vector<UnitPhase> half(d.order());
    for (GroupElem y = 0; y < d.order(); ++y) {
        const UnitPhase varsigma = d.sig(w, y) * d.sig(y, w).inverse(); // wyw^-1 = y
        half[y] = varsigma.sqrt();
    }
    return exterior_transform(d, half);
}

} // namespace tenfold
