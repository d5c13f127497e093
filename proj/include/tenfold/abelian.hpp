#pragma once

// Exact arithmetic on finitely generated abelian groups: Smith normal form
// over the integers, cokernels of integer matrices, and the canonical
// invariant-factor representation with its text rendering.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "tenfold/errors.hpp"

namespace tenfold {

using bigint = boost::multiprecision::cpp_int;

// Dense matrix over Z. Row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<bigint> entries; // rows*cols

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
        rows = init.size();
        cols = rows ? init.begin()->size() : 0;
        entries.reserve(rows * cols);
        for (const auto& row : init) {
            require(row.size() == cols, errc::precondition, "ragged initializer for IntMatrix");
            for (long long v : row) entries.emplace_back(v);
        }
    }

    bigint& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const bigint& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntMatrix operator*(const IntMatrix& other) const {
        require(cols == other.rows, errc::precondition, "matrix dimension mismatch");
        IntMatrix out(rows, other.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                if (at(i, k) == 0) continue;
                for (std::size_t j = 0; j < other.cols; ++j)
                    out.at(i, j) += at(i, k) * other.at(k, j);
            }
        return out;
    }

    bool operator==(const IntMatrix& other) const {
        return rows == other.rows && cols == other.cols && entries == other.entries;
    }
};

struct SmithForm {
    std::vector<bigint> diagonal; // length min(rows, cols), divisibility chain
    IntMatrix left;               // U, rows x rows, unimodular
    IntMatrix right;              // V, cols x cols, unimodular
};

// U * m * V = diag(diagonal), with d1 | d2 | ... and all di >= 0.
inline SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t nr = m.rows, nc = m.cols;
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(nr);
    IntMatrix v = IntMatrix::identity(nc);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < nc; ++k) std::swap(a.at(i, k), a.at(j, k));
        for (std::size_t k = 0; k < nr; ++k) std::swap(u.at(i, k), u.at(j, k));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < nr; ++k) std::swap(a.at(k, i), a.at(k, j));
        for (std::size_t k = 0; k < nc; ++k) std::swap(v.at(k, i), v.at(k, j));
    };
    // row_i -= q * row_j  /  col_i -= q * col_j
    auto addmul_row = [&](std::size_t i, std::size_t j, const bigint& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < nc; ++k) a.at(i, k) -= q * a.at(j, k);
        for (std::size_t k = 0; k < nr; ++k) u.at(i, k) -= q * u.at(j, k);
    };
    auto addmul_col = [&](std::size_t i, std::size_t j, const bigint& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < nr; ++k) a.at(k, i) -= q * a.at(k, j);
        for (std::size_t k = 0; k < nc; ++k) v.at(k, i) -= q * v.at(k, j);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t k = 0; k < nc; ++k) a.at(i, k) = -a.at(i, k);
        for (std::size_t k = 0; k < nr; ++k) u.at(i, k) = -u.at(i, k);
    };

    const std::size_t nmin = std::min(nr, nc);
    bool exhausted = false;
    for (std::size_t t = 0; t < nmin && !exhausted; ++t) {
        bool redo = true;
        while (redo) {
            redo = false;
            // Locate the smallest nonzero entry in the trailing block.
            std::size_t pi = t, pj = t;
            bool found = false;
            bigint best = 0;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j) {
                    const bigint& x = a.at(i, j);
                    if (x == 0) continue;
                    bigint ax = abs(x);
                    if (!found || ax < best) {
                        found = true;
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) { // trailing block is zero
                exhausted = true;
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);

            // Clear row and column t; the pivot shrinks until it divides everything it meets.
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t i = t + 1; i < nr; ++i) {
                    if (a.at(i, t) == 0) continue;
                    bigint q = a.at(i, t) / a.at(t, t);
                    addmul_row(i, t, q);
                    if (a.at(i, t) != 0) { // remainder became the smaller pivot
                        swap_rows(t, i);
                        dirty = true;
                    }
                }
                for (std::size_t j = t + 1; j < nc; ++j) {
                    if (a.at(t, j) == 0) continue;
                    bigint q = a.at(t, j) / a.at(t, t);
                    addmul_col(j, t, q);
                    if (a.at(t, j) != 0) {
                        swap_cols(t, j);
                        dirty = true;
                    }
                }
            }
            if (a.at(t, t) < 0) negate_row(t);
            // Enforce the divisibility chain: fold any non-multiple into this
            // pivot's column and reprocess. The pivot strictly shrinks, so
            // this terminates.
            for (std::size_t i = t + 1; i < nr && !redo; ++i)
                for (std::size_t j = t + 1; j < nc && !redo; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        addmul_col(t, j, bigint(-1));
                        redo = true;
                    }
        }
    }

    SmithForm out;
    out.diagonal.reserve(nmin);
    for (std::size_t t = 0; t < nmin; ++t) out.diagonal.push_back(a.at(t, t));
    out.left = std::move(u);
    out.right = std::move(v);
    return out;
}

// Canonical finitely generated abelian group: free rank plus invariant
// factors d1 | d2 | ... (each >= 2). Equality of the field tuples is
// equality of groups.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<bigint> torsion;

    AbelianGroup() = default;
    explicit AbelianGroup(std::size_t rank, std::vector<bigint> factors = {})
        : free_rank(rank), torsion(std::move(factors)) {
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            require(torsion[i] >= 2, errc::precondition, "invariant factor below 2");
            if (i + 1 < torsion.size())
                require(torsion[i + 1] % torsion[i] == 0, errc::precondition,
                        "torsion list is not a divisibility chain");
        }
    }

    bool operator==(const AbelianGroup& other) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    static AbelianGroup trivial() { return AbelianGroup(); }

    // Normalizes an arbitrary list of cyclic orders (>= 1) into invariant
    // factors by running Smith reduction on the corresponding diagonal matrix.
    static AbelianGroup from_cyclic_orders(std::size_t rank, const std::vector<bigint>& orders) {
        std::vector<bigint> significant;
        for (const bigint& d : orders) {
            require(d >= 1, errc::precondition, "cyclic order must be positive");
            if (d > 1) significant.push_back(d);
        }
        if (significant.size() <= 1) return AbelianGroup(rank, std::move(significant));
        IntMatrix diag(significant.size(), significant.size());
        for (std::size_t i = 0; i < significant.size(); ++i) diag.at(i, i) = significant[i];
        auto snf = smith_normal_form(diag);
        std::vector<bigint> factors;
        for (const bigint& d : snf.diagonal)
            if (d > 1) factors.push_back(d);
        return AbelianGroup(rank, std::move(factors));
    }
};

inline AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<bigint> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return AbelianGroup::from_cyclic_orders(a.free_rank + b.free_rank, orders);
}

// n-fold direct sum of g with itself. Repeating each invariant factor n times
// (in order) is already a divisibility chain, so no renormalization is needed.
inline AbelianGroup multiple(const AbelianGroup& g, std::size_t n) {
    if (n == 0) return AbelianGroup::trivial();
    std::vector<bigint> torsion;
    torsion.reserve(g.torsion.size() * n);
    for (const bigint& d : g.torsion)
        for (std::size_t i = 0; i < n; ++i) torsion.push_back(d);
    return AbelianGroup(g.free_rank * n, std::move(torsion));
}

// Z^rows / image(m), in canonical form.
inline AbelianGroup cokernel(const IntMatrix& m) {
    auto snf = smith_normal_form(m);
    std::size_t image_rank = 0;
    std::vector<bigint> torsion;
    for (const bigint& d : snf.diagonal) {
        if (d == 0) continue;
        ++image_rank;
        if (d > 1) torsion.push_back(d);
    }
    std::sort(torsion.begin(), torsion.end());
    return AbelianGroup(m.rows - image_rank, std::move(torsion));
}

// Canonical text rendering: "0", "Z", "Z^k", "Z_m", "Z_m^j", joined with
// " + ", free part first, torsion ascending. Bit-exact output.
inline std::string to_string(const AbelianGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& term) {
        if (!first) os << " + ";
        os << term;
        first = false;
    };
    if (g.free_rank == 1) emit("Z");
    else if (g.free_rank > 1) emit("Z^" + std::to_string(g.free_rank));
    std::size_t i = 0;
    while (i < g.torsion.size()) {
        std::size_t j = i;
        while (j < g.torsion.size() && g.torsion[j] == g.torsion[i]) ++j;
        std::string term = "Z_" + g.torsion[i].str();
        if (j - i > 1) term += "^" + std::to_string(j - i);
        emit(term);
        i = j;
    }
    return os.str();
}

namespace detail {

inline std::string strip_ws(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace detail

// Parses the canonical rendering produced by to_string.
inline AbelianGroup parse_abelian_group(const std::string& text) {
    std::string s = detail::strip_ws(text);
    require(!s.empty(), errc::parse, "empty group expression");
    if (s == "0") return AbelianGroup::trivial();

    std::size_t rank = 0;
    std::vector<bigint> torsion;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(" + ", pos);
        std::string term =
            detail::strip_ws(next == std::string::npos ? s.substr(pos) : s.substr(pos, next - pos));
        pos = next == std::string::npos ? s.size() : next + 3;
        require(!term.empty() && term[0] == 'Z', errc::parse, "bad group term: '" + term + "'");

        std::string body = term.substr(1);
        bigint base = 0; // 0 means a free factor
        std::size_t power = 1;
        if (!body.empty() && body[0] == '_') {
            std::size_t caret = body.find('^');
            std::string mod = caret == std::string::npos ? body.substr(1) : body.substr(1, caret - 1);
            require(!mod.empty() && mod.find_first_not_of("0123456789") == std::string::npos,
                    errc::parse, "bad torsion modulus in '" + term + "'");
            base = bigint(mod);
            require(base >= 2, errc::parse, "torsion modulus must be >= 2 in '" + term + "'");
            body = caret == std::string::npos ? "" : body.substr(caret);
        }
        if (!body.empty()) {
            require(body[0] == '^', errc::parse, "bad group term: '" + term + "'");
            std::string exp = body.substr(1);
            require(!exp.empty() && exp.find_first_not_of("0123456789") == std::string::npos,
                    errc::parse, "bad exponent in '" + term + "'");
            power = static_cast<std::size_t>(std::stoull(exp));
            require(power >= 1, errc::parse, "exponent must be >= 1 in '" + term + "'");
        }
        if (base == 0) rank += power;
        else
            for (std::size_t k = 0; k < power; ++k) torsion.push_back(base);
    }
    return AbelianGroup::from_cyclic_orders(rank, torsion);
}

// Machine format: "free_rank=<k> torsion=<m1,m2,...>" (torsion may be empty).
inline std::string to_machine_string(const AbelianGroup& g) {
    std::ostringstream os;
    os << "free_rank=" << g.free_rank << " torsion=";
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        if (i) os << ",";
        os << g.torsion[i].str();
    }
    return os.str();
}

inline AbelianGroup parse_machine_group(const std::string& text) {
    std::string s = detail::strip_ws(text);
    const std::string p1 = "free_rank=", p2 = "torsion=";
    std::size_t sp = s.find(' ');
    require(s.rfind(p1, 0) == 0 && sp != std::string::npos, errc::parse,
            "bad machine group: '" + text + "'");
    std::string rank_str = s.substr(p1.size(), sp - p1.size());
    std::string rest = detail::strip_ws(s.substr(sp + 1));
    require(rest.rfind(p2, 0) == 0, errc::parse, "bad machine group: '" + text + "'");
    require(!rank_str.empty() && rank_str.find_first_not_of("0123456789") == std::string::npos,
            errc::parse, "bad free_rank: '" + rank_str + "'");
    std::size_t rank = static_cast<std::size_t>(std::stoull(rank_str));
    std::vector<bigint> torsion;
    std::string list = rest.substr(p2.size());
    std::size_t pos = 0;
    while (pos < list.size()) {
        std::size_t comma = list.find(',', pos);
        std::string item = list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? list.size() : comma + 1;
        item = detail::strip_ws(item);
        if (item.empty()) continue;
        require(item.find_first_not_of("0123456789") == std::string::npos, errc::parse,
                "bad torsion entry: '" + item + "'");
        torsion.emplace_back(item);
    }
    return AbelianGroup::from_cyclic_orders(rank, torsion);
}

} // namespace tenfold
