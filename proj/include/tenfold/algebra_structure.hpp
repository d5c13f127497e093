#pragma once

// Wedderburn shape of a finite-dimensional semisimple real algebra: a
// multiset of matrix blocks M_k(D) with D one of R, C, H.

#include <algorithm>
#include <string>
#include <vector>

#include "tenfold/errors.hpp"

namespace tenfold {

enum class Division { R, C, H };

inline int division_dim(Division d) {
    switch (d) {
        case Division::R: return 1;
        case Division::C: return 2;
        default: return 4;
    }
}

inline char division_letter(Division d) {
    switch (d) {
        case Division::R: return 'R';
        case Division::C: return 'C';
        default: return 'H';
    }
}

struct AlgebraStructure {
    struct Block {
        Division division;
        int size = 1; // matrix size k in M_k(D)

        bool operator==(const Block&) const = default;
        // Canonical order: by size, then R < C < H.
        bool operator<(const Block& o) const {
            if (size != o.size) return size < o.size;
            return static_cast<int>(division) < static_cast<int>(o.division);
        }
    };

    std::vector<Block> blocks;

    AlgebraStructure() = default;
    explicit AlgebraStructure(std::vector<Block> b) : blocks(std::move(b)) { canonicalize(); }

    void canonicalize() { std::sort(blocks.begin(), blocks.end()); }

    int real_dim() const {
        int d = 0;
        for (const auto& b : blocks) d += b.size * b.size * division_dim(b.division);
        return d;
    }

    AlgebraStructure scaled(int factor) const {
        AlgebraStructure out = *this;
        for (auto& b : out.blocks) b.size *= factor;
        return out;
    }

    bool operator==(const AlgebraStructure&) const = default;
};

// Rendering: "R", "C", "H" for 1x1 blocks, "M_k(D)" otherwise, joined by
// " + " in canonical order. Used verbatim in the frozen base table.
inline std::string to_string(const AlgebraStructure& a) {
    require(!a.blocks.empty(), errc::precondition, "empty algebra structure");
    std::string out;
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        if (i) out += " + ";
        const auto& b = a.blocks[i];
        if (b.size == 1) out += division_letter(b.division);
        else out += "M_" + std::to_string(b.size) + "(" + division_letter(b.division) + ")";
    }
    return out;
}

inline AlgebraStructure parse_algebra_structure(const std::string& text) {
    std::vector<AlgebraStructure::Block> blocks;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(" + ", pos);
        std::string term = text.substr(pos, next == std::string::npos ? std::string::npos
                                                                      : next - pos);
        pos = next == std::string::npos ? text.size() : next + 3;
        auto letter = [&](char ch) -> Division {
            switch (ch) {
                case 'R': return Division::R;
                case 'C': return Division::C;
                case 'H': return Division::H;
                default: fail(errc::parse, std::string("bad division letter '") + ch + "'");
            }
        };
        if (term.size() == 1) {
            blocks.push_back({letter(term[0]), 1});
        } else {
            require(term.rfind("M_", 0) == 0 && term.size() >= 6 && term[term.size() - 1] == ')' &&
                        term[term.size() - 3] == '(',
                    errc::parse, "bad algebra block: '" + term + "'");
            int size = std::stoi(term.substr(2, term.size() - 5));
            blocks.push_back({letter(term[term.size() - 2]), size});
        }
    }
    return AlgebraStructure(std::move(blocks));
}

} // namespace tenfold
