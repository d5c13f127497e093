#pragma once

// Text input formats: the line-oriented key = value symmetry spec files and
// the grading-family sample files.

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "tenfold/homotopy.hpp"
#include "tenfold/symmetry_spec.hpp"

namespace tenfold {

namespace detail {

inline std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip_ws(line);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    require(bool(in), errc::parse, "cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace detail

// Grammar (one key per line, each at most once, '#' starts a comment):
//   T = none|+1|-1
//   C = none|+1|-1
//   S = none|+1
//   continuous_dims = <int >= 0>
//   lattice_dims = <int >= 0>
//   base_k = [G0,...,G7] or [G0,G1]   with G in canonical group notation
// Missing keys default to none / 0. Unknown keys are rejected. Inversion and
// point-group keys are reserved: they act on the translation lattice, which
// breaks the product form this classifier relies on.
inline SymmetrySpec parse_spec_text(const std::string& text) {
    static const std::set<std::string> known = {"T", "C", "S", "continuous_dims",
                                                "lattice_dims", "base_k"};
    static const std::set<std::string> reserved = {"inversion", "point_group", "space_group"};

    SymmetrySpec spec;
    std::set<std::string> seen;
    for (const std::string& line : detail::content_lines(text)) {
        const std::size_t eq = line.find('=');
        require(eq != std::string::npos, errc::parse, "expected 'key = value': '" + line + "'");
        const std::string key = detail::strip_ws(line.substr(0, eq));
        const std::string value = detail::strip_ws(line.substr(eq + 1));
        if (reserved.count(key))
            fail(errc::parse, "key '" + key +
                                  "' is reserved: such symmetries act nontrivially on the "
                                  "translation lattice, and the product-form classification "
                                  "formula does not apply");
        require(known.count(key) > 0, errc::parse, "unknown key '" + key + "'");
        require(seen.insert(key).second, errc::parse, "duplicate key '" + key + "'");
        require(!value.empty(), errc::parse, "missing value for key '" + key + "'");

        auto parse_sign = [&](bool allow_minus) {
            if (value == "+1") return 1;
            if (allow_minus && value == "-1") return -1;
            fail(errc::parse, "bad value '" + value + "' for key '" + key + "'");
        };
        auto parse_dim = [&] {
            require(value.find_first_not_of("0123456789") == std::string::npos, errc::parse,
                    "bad value '" + value + "' for key '" + key + "'");
            return std::stoi(value);
        };

        if (key == "T") {
            if (value != "none") spec.t_square = parse_sign(true);
        } else if (key == "C") {
            if (value != "none") spec.c_square = parse_sign(true);
        } else if (key == "S") {
            if (value != "none") {
                parse_sign(false);
                spec.s_present = true;
            }
        } else if (key == "continuous_dims") {
            spec.continuous_dims = parse_dim();
        } else if (key == "lattice_dims") {
            spec.lattice_dims = parse_dim();
        } else { // base_k
            require(value.size() >= 2 && value.front() == '[' && value.back() == ']',
                    errc::parse, "base_k must be a bracketed list");
            std::vector<AbelianGroup> groups;
            std::string body = value.substr(1, value.size() - 2);
            std::size_t pos = 0;
            while (pos <= body.size() && !body.empty()) {
                std::size_t comma = body.find(',', pos);
                std::string item =
                    body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                groups.push_back(parse_abelian_group(item));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            require(groups.size() == 8 || groups.size() == 2, errc::parse,
                    "base_k needs 8 (real) or 2 (complex) entries");
            const Field field = groups.size() == 8 ? Field::real : Field::complex;
            spec.base_k = KSequence(field, std::move(groups));
        }
    }
    return spec;
}

inline SymmetrySpec load_spec_file(const std::string& path) {
    return parse_spec_text(detail::read_file(path));
}

// Family files: one sample per line, either "f <value>" (phase form, radians)
// or 8 reals (the 2x2 complex matrix, row-major, re/im interleaved).
inline GradingFamily parse_family_text(const std::string& text) {
    GradingFamily fam;
    for (const std::string& line : detail::content_lines(text)) {
        std::istringstream is(line);
        std::string first;
        is >> first;
        if (first == "f") {
            double f = 0;
            require(bool(is >> f), errc::parse, "bad phase line: '" + line + "'");
            std::string extra;
            require(!(is >> extra), errc::parse, "trailing input: '" + line + "'");
            fam.samples.push_back(std::cos(f) * pauli(1) + std::sin(f) * pauli(2));
        } else {
            std::istringstream nums(line);
            double v[8];
            for (double& x : v)
                require(bool(nums >> x), errc::parse, "expected 8 reals: '" + line + "'");
            std::string extra;
            require(!(nums >> extra), errc::parse, "trailing input: '" + line + "'");
            Matrix2c m;
            m << complexd(v[0], v[1]), complexd(v[2], v[3]), complexd(v[4], v[5]),
                complexd(v[6], v[7]);
            fam.samples.push_back(m);
        }
    }
    require(fam.size() >= 2, errc::parse, "family file needs at least two samples");
    return fam;
}

inline GradingFamily load_family_file(const std::string& path) {
    return parse_family_text(detail::read_file(path));
}

} // namespace tenfold
