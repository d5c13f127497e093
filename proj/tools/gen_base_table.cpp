// Regenerates the frozen Clifford base structure table from the matrix
// oracle: the Wedderburn shape of the sigma_{r,s} twisted group algebra for
// Cl(k,0) and Cl(0,k), k = 0..7. Output goes to stdout; the repository keeps
// the result in data/clifford_base_table.txt.

#include <iostream>

#include "tenfold/algebra_structure.hpp"
#include "tenfold/repr/structure_algebra.hpp"
#include "tenfold/repr/wedderburn.hpp"

int main() {
    using namespace tenfold;
    auto emit = [](int r, int s) {
        const StructureAlgebra alg = twisted_group_algebra(clifford_cocycle(r, s), BaseAlgebra::R);
        std::cout << "Cl(" << r << "," << s << ") = " << to_string(wedderburn(alg)) << "\n";
    };
    for (int k = 0; k <= 7; ++k) emit(k, 0);
    for (int k = 1; k <= 7; ++k) emit(0, k);
    return 0;
}
