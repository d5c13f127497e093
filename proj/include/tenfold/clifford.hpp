#pragma once

// Symbolic Clifford-class arithmetic: the map from CT symmetry data to
// Clifford algebras (the tenfold way), graded Morita reduction mod the
// (1,1)-stripping and mod-8/mod-2 periodicities, and the semisimple block
// structure scaled up from a frozen base table.

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "tenfold/algebra_structure.hpp"
#include "tenfold/detail/base_table_data.hpp"
#include "tenfold/symmetry_spec.hpp"

namespace tenfold {

// Cl_{r,s} (real: r generators squaring to -1, s squaring to +1) or Cl_C(n).
struct CliffordClass {
    Field field = Field::real;
    int r = 0;
    int s = 0;
    int n = 0; // complex case only

    static CliffordClass real_class(int r, int s) {
        require(r >= 0 && s >= 0, errc::precondition, "negative Clifford signature");
        CliffordClass c;
        c.field = Field::real;
        c.r = r;
        c.s = s;
        return c;
    }
    static CliffordClass complex_class(int n) {
        require(n >= 0, errc::precondition, "negative Clifford index");
        CliffordClass c;
        c.field = Field::complex;
        c.n = n;
        return c;
    }

    bool operator==(const CliffordClass&) const = default;

    // K-theory degree of the super-representation group: (s - r) mod 8 in the
    // real case, n mod 2 in the complex case.
    int sr_degree() const {
        if (field == Field::real) return ((s - r) % 8 + 8) % 8;
        return n % 2;
    }
};

inline std::string to_string(const CliffordClass& c) {
    if (c.field == Field::real)
        return "Cl(" + std::to_string(c.r) + "," + std::to_string(c.s) + ")";
    return "Cl_C(" + std::to_string(c.n) + ")";
}

// Canonical representative under graded Morita equivalence: strip (1,1)
// pairs until min(r,s) = 0, then reduce the surviving index mod 8 (real) or
// mod 2 (complex). Idempotent.
inline CliffordClass morita_reduce(const CliffordClass& c) {
    if (c.field == Field::complex) return CliffordClass::complex_class(c.n % 2);
    int k = std::min(c.r, c.s);
    return CliffordClass::real_class((c.r - k) % 8, (c.s - k) % 8);
}

// CT symmetry data mapped to Clifford algebras: the ungraded algebra
// generated by the symmetry representatives together with the grading, and
// the graded Morita class written with a single nonzero first index
// Cl(k,0) / Cl_C(k).
struct CTCliffordData {
    CliffordClass ungraded;
    CliffordClass graded_morita;
};

inline CTCliffordData ct_to_clifford(const SymmetrySpec& spec) {
    spec.ensure_consistent();
    require(spec.continuous_dims == 0 && spec.lattice_dims == 0, errc::precondition,
            "ct_to_clifford applies to the d = d' = 0 symmetry data");

    auto real_result = [](int ur, int us, int gr, int gs) {
        CTCliffordData out;
        out.ungraded = CliffordClass::real_class(ur, us);
        const int k = ((gr - gs) % 8 + 8) % 8;
        out.graded_morita = CliffordClass::real_class(k, 0);
        return out;
    };

    if (!spec.has_t() && !spec.has_c()) {
        CTCliffordData out;
        out.ungraded = CliffordClass::complex_class(spec.s_present ? 2 : 1);
        out.graded_morita = CliffordClass::complex_class(spec.s_present ? 1 : 0);
        return out;
    }

    if (spec.has_t() && !spec.has_c()) {
        // {i, T, iT Gamma} generates Cl(1,2) for T^2 = +1 and Cl(3,0) for
        // T^2 = -1. The algebra is purely even, so the graded class comes
        // from the two extra generators e, f of the Cl(1,1) doubling:
        // Cl(2,2) respectively Cl(4,0).
        if (*spec.t_square == 1) return real_result(1, 2, 2, 2);
        return real_result(3, 0, 4, 0);
    }

    if (!spec.has_t() && spec.has_c()) {
        // {Gamma, C, iC} generates Cl(0,3) for C^2 = +1 and Cl(2,1) for
        // C^2 = -1; dropping Gamma leaves the graded class.
        if (*spec.c_square == 1) return real_result(0, 3, 0, 2);
        return real_result(2, 1, 2, 0);
    }

    // Full CT group: {Gamma, C, iC, iCT} are mutually anticommuting with
    // squares (+1, C^2, C^2, -C^2 T^2); dropping Gamma gives the graded class.
    const int c2 = *spec.c_square, t2 = *spec.t_square;
    int r = 0, s = 1; // Gamma counts +1
    (c2 == 1 ? s : r) += 2;           // C and iC
    (-c2 * t2 == 1 ? s : r) += 1;     // iCT
    return real_result(r, s, r, s - 1);
}

namespace detail {

struct BaseTable {
    std::array<AlgebraStructure, 8> neg; // Cl(k,0)
    std::array<AlgebraStructure, 8> pos; // Cl(0,k)
};

inline const BaseTable& clifford_base_table() {
    static const BaseTable table = [] {
        BaseTable t;
        std::array<bool, 8> got_neg{}, got_pos{};
        std::istringstream is(clifford_base_table_text());
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            std::size_t eq = line.find(" = ");
            require(eq != std::string::npos, errc::parse, "bad base-table line: " + line);
            std::string name = line.substr(0, eq);
            AlgebraStructure alg = parse_algebra_structure(line.substr(eq + 3));
            int r = 0, s = 0;
            require(std::sscanf(name.c_str(), "Cl(%d,%d)", &r, &s) == 2, errc::parse,
                    "bad base-table class name: " + name);
            require((r == 0 || s == 0) && r < 8 && s < 8, errc::parse,
                    "base-table entry out of range: " + name);
            if (s == 0) {
                t.neg[r] = alg;
                got_neg[r] = true;
            }
            if (r == 0) {
                t.pos[s] = alg;
                got_pos[s] = true;
            }
        }
        for (int k = 0; k < 8; ++k)
            require(got_neg[k] && got_pos[k], errc::parse, "base table is incomplete");
        return t;
    }();
    return table;
}

} // namespace detail

// Wedderburn block structure of the ungraded Clifford algebra, via
// Cl_{r+1,s+1} = Cl_{r,s} (x) M_2(R), the mod-8 periodicity worth M_16(R),
// and the frozen base table.
inline AlgebraStructure clifford_structure(const CliffordClass& c) {
    if (c.field == Field::complex) {
        // Cl_C(n+2) = Cl_C(n) (x) M_2(C).
        const int factor = 1 << (c.n / 2);
        AlgebraStructure base;
        if (c.n % 2 == 0) base = AlgebraStructure({{Division::C, 1}});
        else base = AlgebraStructure({{Division::C, 1}, {Division::C, 1}});
        return base.scaled(factor);
    }
    const int strip = std::min(c.r, c.s);
    int factor = 1 << strip; // one M_2(R) per stripped (1,1) pair
    int k = c.r + c.s - 2 * strip;
    const bool negative_side = c.r > c.s;
    while (k >= 8) {
        k -= 8;
        factor *= 16;
    }
    const auto& table = detail::clifford_base_table();
    return (negative_side ? table.neg[k] : table.pos[k]).scaled(factor);
}

} // namespace tenfold
