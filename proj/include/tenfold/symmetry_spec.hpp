#pragma once

// Classification input: which CT-type symmetries are present (with their
// squares), the number of continuous and lattice translation dimensions, and
// an optional replacement K-sequence for the base algebra.

#include <optional>
#include <string>

#include "tenfold/ksequence.hpp"

namespace tenfold {

struct SymmetrySpec {
    std::optional<int> t_square;     // +1 or -1 when T is present
    std::optional<int> c_square;     // +1 or -1 when C is present
    bool s_present = false;          // sublattice symmetry S (square +1)
    int continuous_dims = 0;
    int lattice_dims = 0;
    std::optional<KSequence> base_k; // defaults to the point sequence

    bool has_t() const { return t_square.has_value(); }
    bool has_c() const { return c_square.has_value(); }

    // T or C present forces the real series; otherwise the series is complex.
    Field field() const { return (has_t() || has_c()) ? Field::real : Field::complex; }

    // Returns the violated rule, or nullopt when consistent.
    std::optional<std::string> violation() const {
        if (s_present && has_t() && has_c())
            return "S specified alongside T and C (S = CT is implied and must not be "
                   "independently specified)";
        if (s_present && (has_t() || has_c()))
            return std::string("S specified alongside ") + (has_t() ? "T" : "C") +
                   " (the remaining symmetry square would be undetermined; specify either S "
                   "alone or both T and C)";
        if (t_square && *t_square != 1 && *t_square != -1) return "T square must be +1 or -1";
        if (c_square && *c_square != 1 && *c_square != -1) return "C square must be +1 or -1";
        if (continuous_dims < 0 || lattice_dims < 0) return "dimensions must be nonnegative";
        if (base_k && base_k->field != field())
            return std::string("base_k has period ") + std::to_string(base_k->period()) +
                   " but the symmetries force the " +
                   (field() == Field::real ? "real (period-8)" : "complex (period-2)") + " series";
        return std::nullopt;
    }

    void ensure_consistent() const {
        if (auto v = violation()) fail(errc::inconsistent_spec, *v);
    }

    const KSequence base_sequence() const { return base_k ? *base_k : k_point(field()); }
};

// The ten symmetry classes in the order of the zero-dimensional table:
// real rows n = 0..7, then complex rows n = 0..1.
struct TenfoldRow {
    std::string cartan;
    SymmetrySpec spec;
    Field field;
    int degree; // K-theory degree of the d = 0 classification group
};

inline std::vector<TenfoldRow> tenfold_rows() {
    auto mk = [](std::optional<int> t, std::optional<int> c, bool s) {
        SymmetrySpec sp;
        sp.t_square = t;
        sp.c_square = c;
        sp.s_present = s;
        return sp;
    };
    return {
        {"AI", mk(+1, std::nullopt, false), Field::real, 0},
        {"BDI", mk(+1, +1, false), Field::real, 1},
        {"D", mk(std::nullopt, +1, false), Field::real, 2},
        {"DIII", mk(-1, +1, false), Field::real, 3},
        {"AII", mk(-1, std::nullopt, false), Field::real, 4},
        {"CII", mk(-1, -1, false), Field::real, 5},
        {"C", mk(std::nullopt, -1, false), Field::real, 6},
        {"CI", mk(+1, -1, false), Field::real, 7},
        {"A", mk(std::nullopt, std::nullopt, false), Field::complex, 0},
        {"AIII", mk(std::nullopt, std::nullopt, true), Field::complex, 1},
    };
}

} // namespace tenfold
