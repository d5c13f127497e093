#pragma once

// Small finite groups given by multiplication tables, with subgroups,
// quotients, and set-theoretic sections of the quotient map.

#include <algorithm>
#include <string>
#include <vector>

#include "tenfold/errors.hpp"

namespace tenfold {

struct FiniteGroup {
    int order = 1;
    std::vector<int> table; // table[a * order + b] = a * b; element 0 is the identity

    FiniteGroup() : table{0} {}
    explicit FiniteGroup(std::vector<std::vector<int>> rows) {
        order = static_cast<int>(rows.size());
        table.reserve(std::size_t(order) * order);
        for (const auto& row : rows) {
            require(static_cast<int>(row.size()) == order, errc::precondition,
                    "ragged multiplication table");
            for (int v : row) table.push_back(v);
        }
        validate();
    }

    int mul(int a, int b) const { return table[std::size_t(a) * order + b]; }

    int inverse(int a) const {
        for (int b = 0; b < order; ++b)
            if (mul(a, b) == 0) return b;
        fail(errc::precondition, "element has no inverse");
    }

    bool is_subgroup(const std::vector<int>& elems) const {
        if (std::find(elems.begin(), elems.end(), 0) == elems.end()) return false;
        for (int a : elems)
            for (int b : elems) {
                int ab = mul(a, b);
                if (std::find(elems.begin(), elems.end(), ab) == elems.end()) return false;
            }
        return true;
    }

    bool is_normal(const std::vector<int>& elems) const {
        if (!is_subgroup(elems)) return false;
        for (int g = 0; g < order; ++g) {
            const int gi = inverse(g);
            for (int n : elems) {
                int conj = mul(mul(g, n), gi);
                if (std::find(elems.begin(), elems.end(), conj) == elems.end()) return false;
            }
        }
        return true;
    }

    static FiniteGroup cyclic(int n) {
        std::vector<std::vector<int>> rows(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
        return FiniteGroup(std::move(rows));
    }

    // Elementary abelian Z_2^n on bitmasks (XOR).
    static FiniteGroup parity(int n) {
        const int m = 1 << n;
        std::vector<std::vector<int>> rows(m, std::vector<int>(m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) rows[a][b] = a ^ b;
        return FiniteGroup(std::move(rows));
    }

    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
        const int m = g.order * h.order;
        std::vector<std::vector<int>> rows(m, std::vector<int>(m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                int ga = a / h.order, ha = a % h.order;
                int gb = b / h.order, hb = b % h.order;
                rows[a][b] = g.mul(ga, gb) * h.order + h.mul(ha, hb);
            }
        return FiniteGroup(std::move(rows));
    }

private:
    void validate() const {
        require(order >= 1, errc::precondition, "empty group");
        for (int a = 0; a < order; ++a) {
            require(mul(0, a) == a && mul(a, 0) == a, errc::precondition,
                    "element 0 is not the identity");
            for (int b = 0; b < order; ++b)
                require(mul(a, b) >= 0 && mul(a, b) < order, errc::precondition,
                        "table entry out of range");
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    require(mul(mul(a, b), c) == mul(a, mul(b, c)), errc::precondition,
                            "multiplication table is not associative");
        }
        for (int a = 0; a < order; ++a) inverse(a); // throws when missing
    }
};

// Quotient G/N for normal N, with a set-theoretic section s: G/N -> G,
// s(eN) = e. The default section picks the lowest-index coset representative.
struct QuotientData {
    FiniteGroup quotient;
    std::vector<std::vector<int>> cosets; // coset p = set of G-elements
    std::vector<int> section;             // s_p in G
    std::vector<int> coset_of;            // G-element -> coset index
};

inline QuotientData make_quotient(const FiniteGroup& g, const std::vector<int>& n,
                                  const std::vector<int>* custom_section = nullptr) {
    require(g.is_normal(n), errc::precondition, "subgroup is not normal");

    QuotientData out;
    out.coset_of.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x) {
        if (out.coset_of[x] >= 0) continue;
        const int p = static_cast<int>(out.cosets.size());
        std::vector<int> coset;
        for (int m : n) coset.push_back(g.mul(x, m));
        std::sort(coset.begin(), coset.end());
        for (int y : coset) out.coset_of[y] = p;
        out.cosets.push_back(std::move(coset));
    }

    const int q = static_cast<int>(out.cosets.size());
    out.section.resize(q);
    for (int p = 0; p < q; ++p) out.section[p] = out.cosets[p].front();
    if (custom_section) {
        require(static_cast<int>(custom_section->size()) == q, errc::precondition,
                "section has wrong length");
        for (int p = 0; p < q; ++p) {
            require(out.coset_of[(*custom_section)[p]] == p, errc::precondition,
                    "section element lies in the wrong coset");
            out.section[p] = (*custom_section)[p];
        }
    }
    require(out.coset_of[0] == 0 && out.section[0] == 0, errc::precondition,
            "section must send the identity coset to e");

    std::vector<std::vector<int>> rows(q, std::vector<int>(q));
    for (int p = 0; p < q; ++p)
        for (int r = 0; r < q; ++r)
            rows[p][r] = out.coset_of[g.mul(out.cosets[p].front(), out.cosets[r].front())];
    out.quotient = FiniteGroup(std::move(rows));
    return out;
}

} // namespace tenfold
