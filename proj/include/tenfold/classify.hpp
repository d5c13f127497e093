#pragma once

// The symbolic classification pipeline: CT data -> graded Morita class ->
// K-sequence degree, continuous dimensions as downward shifts, lattice
// dimensions through the binomial Pimsner-Voiculescu sum, and the full
// periodic table.

#include <vector>

#include "tenfold/clifford.hpp"
#include "tenfold/ksequence.hpp"
#include "tenfold/symmetry_spec.hpp"

namespace tenfold {

namespace detail {

inline SymmetrySpec point_data(const SymmetrySpec& spec) {
    SymmetrySpec flat = spec;
    flat.continuous_dims = 0;
    flat.lattice_dims = 0;
    flat.base_k.reset();
    return flat;
}

inline unsigned long long binomial(int n, int k) {
    require(n >= 0 && k >= 0 && k <= n && n <= 62, errc::precondition,
            "binomial coefficient out of supported range");
    unsigned long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (unsigned long long)(n - k + i) / i;
    return out;
}

} // namespace detail

// Classification group for continuous dimensions only: the base K-sequence
// evaluated at the graded Morita degree lowered by the number of dimensions.
inline AbelianGroup classify(const SymmetrySpec& spec) {
    spec.ensure_consistent();
    require(spec.lattice_dims == 0, errc::precondition,
            "classify handles lattice dimensions via lattice_classify");
    const CTCliffordData ct = ct_to_clifford(detail::point_data(spec));
    const KSequence base = spec.base_sequence();
    return base.at(ct.graded_morita.sr_degree() - spec.continuous_dims);
}

// Full classification with lattice dimensions d': the binomial sum
// (+)_{k=0..d'} C(d',k) * base[n0 - k], n0 the post-continuous-shift degree.
// Equals evaluating d' iterated crossings with Z.
inline AbelianGroup lattice_classify(const SymmetrySpec& spec) {
    spec.ensure_consistent();
    const CTCliffordData ct = ct_to_clifford(detail::point_data(spec));
    const KSequence base = spec.base_sequence();
    const long long n0 = ct.graded_morita.sr_degree() - spec.continuous_dims;
    AbelianGroup out;
    for (int k = 0; k <= spec.lattice_dims; ++k) {
        const auto copies = detail::binomial(spec.lattice_dims, k);
        out = direct_sum(out, multiple(base.at(n0 - k), copies));
    }
    return out;
}

// The periodic table: rows in the zero-dimensional table order, columns
// d = 0..d_max, entries k_point[n - d].
inline std::vector<std::vector<AbelianGroup>> periodic_table(int d_max) {
    require(d_max >= 0, errc::precondition, "d_max must be nonnegative");
    std::vector<std::vector<AbelianGroup>> table;
    for (const auto& row : tenfold_rows()) {
        const KSequence seq = k_point(row.field);
        std::vector<AbelianGroup> cells;
        cells.reserve(d_max + 1);
        for (int d = 0; d <= d_max; ++d) cells.push_back(seq.at(row.degree - d));
        table.push_back(std::move(cells));
    }
    return table;
}

} // namespace tenfold
