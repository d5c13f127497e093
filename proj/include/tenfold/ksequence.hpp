#pragma once

// Period-8 (real) and period-2 (complex) sequences of abelian groups with
// wrap-around indexing, the point sequences, degree shifts, and the
// Pimsner-Voiculescu double for crossing with Z.

#include <vector>

#include "tenfold/abelian.hpp"

namespace tenfold {

enum class Field { real, complex };

inline int field_period(Field f) { return f == Field::real ? 8 : 2; }

struct KSequence {
    Field field = Field::real;
    std::vector<AbelianGroup> groups; // length 8 (real) or 2 (complex)

    KSequence() = default;
    KSequence(Field f, std::vector<AbelianGroup> g) : field(f), groups(std::move(g)) {
        require(static_cast<int>(groups.size()) == field_period(field), errc::precondition,
                "K-sequence length must match the field period");
    }

    int period() const { return field_period(field); }

    // Indexing wraps: degree n means n mod period.
    const AbelianGroup& at(long long degree) const {
        long long p = period();
        long long idx = ((degree % p) + p) % p;
        return groups[static_cast<std::size_t>(idx)];
    }

    bool operator==(const KSequence& other) const = default;
};

// K_n of a point: real (Z, Z_2, Z_2, 0, Z, 0, 0, 0); complex (Z, 0).
inline KSequence k_point(Field f) {
    const AbelianGroup Z(1), Z2(0, {2}), zero;
    if (f == Field::real) return KSequence(f, {Z, Z2, Z2, zero, Z, zero, zero, zero});
    return KSequence(f, {Z, zero});
}

// groups'[n] = groups[(n - d) mod period]; d may be negative.
inline KSequence shift(const KSequence& seq, long long d) {
    std::vector<AbelianGroup> out(seq.groups.size());
    for (long long n = 0; n < seq.period(); ++n)
        out[static_cast<std::size_t>(n)] = seq.at(n - d);
    return KSequence(seq.field, std::move(out));
}

// Pimsner-Voiculescu: crossing with Z sends K_n to K_n + K_{n-1}, pointwise.
inline KSequence crossed_with_Z(const KSequence& seq) {
    std::vector<AbelianGroup> out(seq.groups.size());
    for (long long n = 0; n < seq.period(); ++n)
        out[static_cast<std::size_t>(n)] = direct_sum(seq.at(n), seq.at(n - 1));
    return KSequence(seq.field, std::move(out));
}

} // namespace tenfold
