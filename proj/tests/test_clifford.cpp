#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "tenfold/clifford.hpp"
#include "tenfold/repr/structure_algebra.hpp"
#include "tenfold/repr/wedderburn.hpp"

using namespace tenfold;

namespace {

SymmetrySpec make_spec(std::optional<int> t, std::optional<int> c, bool s = false) {
    SymmetrySpec spec;
    spec.t_square = t;
    spec.c_square = c;
    spec.s_present = s;
    return spec;
}

} // namespace

TEST_CASE("ct_to_clifford covers the ten classes") {
    struct Case {
        std::optional<int> t, c;
        bool s;
        CliffordClass ungraded, graded;
    };
    const auto R = CliffordClass::real_class;
    const auto C = CliffordClass::complex_class;
    const std::vector<Case> cases = {
        {+1, std::nullopt, false, R(1, 2), R(0, 0)},         // AI
        {+1, -1, false, R(2, 2), R(1, 0)},                   // CI
        {std::nullopt, -1, false, R(2, 1), R(2, 0)},         // C
        {-1, -1, false, R(3, 1), R(3, 0)},                   // CII
        {-1, std::nullopt, false, R(3, 0), R(4, 0)},         // AII
        {-1, +1, false, R(0, 4), R(5, 0)},                   // DIII
        {std::nullopt, +1, false, R(0, 3), R(6, 0)},         // D
        {+1, +1, false, R(1, 3), R(7, 0)},                   // BDI
        {std::nullopt, std::nullopt, false, C(1), C(0)},     // A
        {std::nullopt, std::nullopt, true, C(2), C(1)},      // AIII
    };
    for (const auto& cse : cases) {
        const CTCliffordData out = ct_to_clifford(make_spec(cse.t, cse.c, cse.s));
        INFO("expected ungraded " << to_string(cse.ungraded));
        REQUIRE(out.ungraded == cse.ungraded);
        REQUIRE(out.graded_morita == cse.graded);
    }
}

TEST_CASE("ct_to_clifford rejects bad input") {
    SymmetrySpec both = make_spec(1, 1, true);
    REQUIRE_THROWS_AS(ct_to_clifford(both), error);
    SymmetrySpec with_dims = make_spec(1, std::nullopt);
    with_dims.continuous_dims = 1;
    REQUIRE_THROWS_AS(ct_to_clifford(with_dims), error);
}

TEST_CASE("morita reduction") {
    const auto R = CliffordClass::real_class;
    REQUIRE(morita_reduce(R(2, 2)) == R(0, 0));
    REQUIRE(morita_reduce(R(0, 9)) == R(0, 1));
    REQUIRE(morita_reduce(CliffordClass::complex_class(5)) == CliffordClass::complex_class(1));
    for (int r = 0; r <= 9; ++r)
        for (int s = 0; s <= 9; ++s) {
            const CliffordClass reduced = morita_reduce(R(r, s));
            REQUIRE(morita_reduce(reduced) == reduced);
            REQUIRE(std::min(reduced.r, reduced.s) == 0);
        }
}

TEST_CASE("clifford_structure on pinned classes") {
    const auto R = CliffordClass::real_class;
    REQUIRE(to_string(clifford_structure(R(3, 0))) == "H + H");
    REQUIRE(to_string(clifford_structure(R(1, 3))) == "M_4(R)");
    REQUIRE(to_string(clifford_structure(R(1, 1))) == "M_2(R)");
    REQUIRE(to_string(clifford_structure(CliffordClass::complex_class(0))) == "C");
    REQUIRE(to_string(clifford_structure(CliffordClass::complex_class(1))) == "C + C");
    REQUIRE(to_string(clifford_structure(CliffordClass::complex_class(2))) == "M_2(C)");
    // Periodicity scales matrix sizes by 16 per period.
    REQUIRE(to_string(clifford_structure(R(0, 9))) == "M_16(R) + M_16(R)");
}

TEST_CASE("structure respects graded Morita reduction up to matrix factors") {
    for (int r = 0; r <= 4; ++r)
        for (int s = 0; s <= 4; ++s) {
            const CliffordClass full = CliffordClass::real_class(r, s);
            const AlgebraStructure a = clifford_structure(full);
            const AlgebraStructure b = clifford_structure(morita_reduce(full));
            REQUIRE(a.blocks.size() == b.blocks.size());
            for (std::size_t i = 0; i < a.blocks.size(); ++i)
                REQUIRE(a.blocks[i].division == b.blocks[i].division);
        }
}

TEST_CASE("the ten associated algebras match the class table") {
    const std::vector<std::pair<SymmetrySpec, std::string>> rows = {
        {make_spec(+1, std::nullopt), "M_2(R) + M_2(R)"},
        {make_spec(+1, -1), "M_4(R)"},
        {make_spec(std::nullopt, -1), "M_2(C)"},
        {make_spec(-1, -1), "M_2(H)"},
        {make_spec(-1, std::nullopt), "H + H"},
        {make_spec(-1, +1), "M_2(H)"},
        {make_spec(std::nullopt, +1), "M_2(C)"},
        {make_spec(+1, +1), "M_4(R)"},
        {make_spec(std::nullopt, std::nullopt), "C + C"},
        {make_spec(std::nullopt, std::nullopt, true), "M_2(C)"},
    };
    for (const auto& [spec, expected] : rows) {
        const CTCliffordData ct = ct_to_clifford(spec);
        REQUIRE(to_string(clifford_structure(ct.ungraded)) == expected);
    }
}

TEST_CASE("frozen base table regenerates from the oracle byte for byte") {
    std::ostringstream os;
    auto emit = [&](int r, int s) {
        const StructureAlgebra alg =
            twisted_group_algebra(clifford_cocycle(r, s), BaseAlgebra::R);
        os << "Cl(" << r << "," << s << ") = " << to_string(wedderburn(alg)) << "\n";
    };
    for (int k = 0; k <= 7; ++k) emit(k, 0);
    for (int k = 1; k <= 7; ++k) emit(0, k);
    REQUIRE(os.str() == detail::clifford_base_table_text());
}

TEST_CASE("frozen base table matches the dimension formula") {
    for (int k = 0; k <= 7; ++k) {
        REQUIRE(clifford_structure(CliffordClass::real_class(k, 0)).real_dim() == (1 << k));
        REQUIRE(clifford_structure(CliffordClass::real_class(0, k)).real_dim() == (1 << k));
    }
}
