#pragma once

// Deterministic text renderings of the three tables: the tenfold class /
// algebra table, the zero-dimensional classification, and the periodic table
// of classification groups against dimension.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "tenfold/classify.hpp"
#include "tenfold/repr/ct_algebra.hpp"
#include "tenfold/repr/wedderburn.hpp"

namespace tenfold {

namespace detail {

inline std::string layout_columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t j = 0; j < row.size(); ++j)
            width[j] = std::max(width[j], row[j].size());
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            line += row[j];
            if (j + 1 < row.size()) line.append(width[j] - row[j].size() + 2, ' ');
        }
        os << line << "\n";
    }
    return os.str();
}

inline std::string generators_label(const SymmetrySpec& s) {
    if (s.has_t() && s.has_c()) return "C,T";
    if (s.has_t()) return "T";
    if (s.has_c()) return "C";
    if (s.s_present) return "S";
    return "-";
}

inline std::string square_label(const std::optional<int>& sq) {
    if (!sq) return "";
    return *sq == 1 ? "+1" : "-1";
}

// The tenfold table lists the four one-antiunitary classes first (T alone),
// then the CT pairs and the complex classes, matching the order in which the
// associated algebras are usually tabulated.
inline std::vector<std::string> tenfold_table_order() {
    return {"AI", "CI", "C", "CII", "AII", "DIII", "D", "BDI", "A", "AIII"};
}

inline TenfoldRow row_by_label(const std::string& label) {
    for (const auto& row : tenfold_rows())
        if (row.cartan == label) return row;
    fail(errc::precondition, "unknown Cartan label " + label);
}

} // namespace detail

// Ten rows: class data, associated algebra, ungraded Clifford algebra, and
// graded Morita class.
inline std::string render_tenfold_table() {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"class", "A", "C^2", "T^2", "associated algebra", "ungraded", "morita"});
    for (const auto& label : detail::tenfold_table_order()) {
        const TenfoldRow row = detail::row_by_label(label);
        const CTCliffordData ct = ct_to_clifford(row.spec);
        rows.push_back({row.cartan, detail::generators_label(row.spec),
                        detail::square_label(row.spec.c_square),
                        detail::square_label(row.spec.t_square),
                        to_string(clifford_structure(ct.ungraded)), to_string(ct.ungraded),
                        to_string(ct.graded_morita)});
    }
    return detail::layout_columns(rows);
}

// Zero-dimensional classification: the group column is K_n of the point
// sequence, one row per symmetry class in degree order.
inline std::string render_zero_d_table() {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", "class", "A", "C^2", "T^2", "Clifford", "group"});
    for (const auto& row : tenfold_rows()) {
        const std::string cl = row.field == Field::real
                                   ? "Cl(0," + std::to_string(row.degree) + ")"
                                   : "Cl_C(" + std::to_string(row.degree) + ")";
        rows.push_back({std::to_string(row.degree), row.cartan,
                        detail::generators_label(row.spec),
                        detail::square_label(row.spec.c_square),
                        detail::square_label(row.spec.t_square), cl,
                        to_string(k_point(row.field).at(row.degree))});
    }
    return detail::layout_columns(rows);
}

inline std::string render_periodic_table(int d_max) {
    require(d_max >= 0 && d_max <= 12, errc::precondition, "d_max must lie in 0..12");
    const auto cells = periodic_table(d_max);
    const auto rows_meta = tenfold_rows();
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {"n", "class", "C^2", "T^2"};
    for (int d = 0; d <= d_max; ++d) header.push_back("d=" + std::to_string(d));
    rows.push_back(std::move(header));
    for (std::size_t i = 0; i < rows_meta.size(); ++i) {
        std::vector<std::string> row = {std::to_string(rows_meta[i].degree),
                                        rows_meta[i].cartan,
                                        detail::square_label(rows_meta[i].spec.c_square),
                                        detail::square_label(rows_meta[i].spec.t_square)};
        for (const auto& cell : cells[i]) row.push_back(to_string(cell));
        rows.push_back(std::move(row));
    }
    return detail::layout_columns(rows);
}

} // namespace tenfold
