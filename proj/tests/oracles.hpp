#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <random>
#include <vector>

#include "tenfold/abelian.hpp"
#include "tenfold/cocycle.hpp"
#include "tenfold/repr/structure_algebra.hpp"

namespace tenfold::test {

// The same algebra expressed in a skewed basis b'_i = sum_j S_{ji} b_j.
inline StructureAlgebra rebase(const StructureAlgebra& alg, const Eigen::MatrixXd& s) {
    const Eigen::MatrixXd s_inv = s.inverse();
    StructureAlgebra out;
    out.dim = alg.dim;
    out.left.reserve(alg.dim);
    for (int i = 0; i < alg.dim; ++i)
        out.left.push_back(s_inv * alg.left_of(s.col(i)) * s);
    out.involution = s_inv * alg.involution * s;
    out.unit = s_inv * alg.unit;
    return out;
}

// Column-style Hermite reduction: right-multiplication by unimodular
// matrices only. Returns the reduced matrix with zero columns dropped.
inline IntMatrix hermite_column_form(const IntMatrix& m) {
    IntMatrix a = m;
    std::size_t row = 0, col = 0;
    while (row < a.rows && col < a.cols) {
        // gcd sweep across columns col..end on this row
        while (true) {
            std::size_t pivot = a.cols;
            for (std::size_t j = col; j < a.cols; ++j)
                if (a.at(row, j) != 0 &&
                    (pivot == a.cols || abs(a.at(row, j)) < abs(a.at(row, pivot))))
                    pivot = j;
            if (pivot == a.cols) break; // row is zero beyond col
            if (pivot != col)
                for (std::size_t i = 0; i < a.rows; ++i) std::swap(a.at(i, col), a.at(i, pivot));
            bool cleared = true;
            for (std::size_t j = col + 1; j < a.cols; ++j) {
                if (a.at(row, j) == 0) continue;
                const bigint q = a.at(row, j) / a.at(row, col);
                for (std::size_t i = 0; i < a.rows; ++i) a.at(i, j) -= q * a.at(i, col);
                if (a.at(row, j) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a.at(row, col) != 0) ++col;
        ++row;
    }
    // Drop zero columns.
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < a.cols; ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < a.rows; ++i) nonzero = nonzero || a.at(i, j) != 0;
        if (nonzero) keep.push_back(j);
    }
    IntMatrix out(a.rows, keep.size());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) out.at(i, j) = a.at(i, keep[j]);
    return out;
}

inline bigint minor_det(const IntMatrix& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 1) return m.at(rows[0], cols[0]);
    bigint det = 0;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < k; ++j) {
        if (m.at(rows[0], cols[j]) == 0) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t t = 0; t < k; ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        const bigint cof = minor_det(m, sub_rows, sub_cols);
        det += (j % 2 == 0 ? 1 : -1) * m.at(rows[0], cols[j]) * cof;
    }
    return det;
}

inline void subsets_of_size(std::size_t n, std::size_t k,
                            std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        out.push_back(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

// Cokernel via Hermite column reduction followed by the determinantal
// divisor formula: the k-th invariant factor is D_k / D_{k-1}, with D_k the
// gcd of all k x k minors.
inline AbelianGroup cokernel_via_hnf(const IntMatrix& m) {
    const IntMatrix h = hermite_column_form(m);
    const std::size_t rank = h.cols;
    std::vector<bigint> divisors; // D_1, D_2, ...
    for (std::size_t k = 1; k <= rank; ++k) {
        std::vector<std::vector<std::size_t>> row_sets, col_sets;
        subsets_of_size(h.rows, k, row_sets);
        subsets_of_size(h.cols, k, col_sets);
        bigint g = 0;
        for (const auto& rs : row_sets)
            for (const auto& cs : col_sets) g = boost::multiprecision::gcd(g, minor_det(h, rs, cs));
        divisors.push_back(abs(g));
    }
    std::vector<bigint> factors;
    bigint prev = 1;
    for (const bigint& d : divisors) {
        factors.push_back(d / prev);
        prev = d;
    }
    std::vector<bigint> torsion;
    for (const bigint& f : factors)
        if (f > 1) torsion.push_back(f);
    return AbelianGroup::from_cyclic_orders(m.rows - rank, torsion);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim = 6, long long bound = 5) {
    std::uniform_int_distribution<std::size_t> dims(1, max_dim);
    std::uniform_int_distribution<long long> entry(-bound, bound);
    IntMatrix m(dims(rng), dims(rng));
    for (auto& e : m.entries) e = entry(rng);
    return m;
}

// Random U(1) function with lambda(e) = 1 and denominators dividing `den`.
inline std::vector<UnitPhase> random_phase_function(std::mt19937_64& rng, int n, int den = 8) {
    std::uniform_int_distribution<int> num(0, den - 1);
    std::vector<UnitPhase> lambda(std::size_t(1) << n, UnitPhase::one());
    for (std::size_t x = 1; x < lambda.size(); ++x) lambda[x] = UnitPhase::turns(num(rng), den);
    return lambda;
}

// Random valid cocycle: a +-1 sign cocycle twisted by a random coboundary.
inline ParityGroupData random_valid_cocycle(std::mt19937_64& rng, int n, bool with_antiunitary) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> phi(n, 1), c(n, 1), squares(n);
    std::vector<std::vector<int>> eps(n, std::vector<int>(n, 1));
    for (int i = 0; i < n; ++i) {
        phi[i] = coin(rng) ? 1 : -1;
        c[i] = coin(rng) ? 1 : -1;
        squares[i] = coin(rng) ? 1 : -1;
        for (int j = 0; j < i; ++j) eps[i][j] = eps[j][i] = coin(rng) ? 1 : -1;
    }
    if (with_antiunitary) phi[0] = -1;
    ParityGroupData base = make_sign_cocycle(n, phi, c, eps, squares);
    return exterior_transform(base, random_phase_function(rng, n));
}

} // namespace tenfold::test
