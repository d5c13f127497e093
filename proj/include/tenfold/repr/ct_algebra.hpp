#pragma once

// Bridges CT symmetry data to the matrix oracle: the parity-group cocycle of
// the symmetry generators, optionally extended by the grading generator, and
// the resulting real structure-constant algebra.

#include "tenfold/cocycle.hpp"
#include "tenfold/repr/structure_algebra.hpp"
#include "tenfold/symmetry_spec.hpp"

namespace tenfold {

// Parity group data of the CT generators present in `spec`, in the order
// [T][C][S], optionally followed by the grading generator, whose commutation
// sign with a symmetry x is c(x).
inline ParityGroupData ct_parity_data(const SymmetrySpec& spec, bool with_grading) {
    spec.ensure_consistent();
    std::vector<int> phi, c, squares;
    if (spec.has_t()) {
        phi.push_back(-1);
        c.push_back(1);
        squares.push_back(*spec.t_square);
    }
    if (spec.has_c()) {
        phi.push_back(-1);
        c.push_back(-1);
        squares.push_back(*spec.c_square);
    }
    if (spec.s_present) {
        phi.push_back(1);
        c.push_back(-1);
        squares.push_back(1);
    }
    if (with_grading) {
        phi.push_back(1);
        c.push_back(1);
        squares.push_back(1);
    }
    const int n = static_cast<int>(phi.size());
    std::vector<std::vector<int>> eps(n, std::vector<int>(n, 1));
    if (with_grading)
        for (int i = 0; i + 1 < n; ++i) eps[n - 1][i] = eps[i][n - 1] = c[i];
    return make_sign_cocycle(n, phi, c, eps, squares);
}

// The ungraded algebra generated by i, the symmetry representatives, and the
// grading operator: the twisted group algebra over C-as-real of the extended
// parity group. Its Wedderburn shape is the "associated algebra" of the
// symmetry class.
inline StructureAlgebra ct_ungraded_algebra(const SymmetrySpec& spec) {
    return twisted_group_algebra(ct_parity_data(spec, true), BaseAlgebra::C);
}

} // namespace tenfold
