#include <catch2/catch_amalgamated.hpp>

#include "tenfold/repr/packer_raeburn.hpp"
#include "tenfold/verify.hpp"

using namespace tenfold;

TEST_CASE("finite groups and quotients") {
    const FiniteGroup z4 = FiniteGroup::cyclic(4);
    REQUIRE(z4.inverse(1) == 3);
    REQUIRE(z4.is_normal({0, 2}));
    REQUIRE_FALSE(z4.is_subgroup({0, 1}));

    const auto quot = make_quotient(z4, {0, 2});
    REQUIRE(quot.quotient.order == 2);
    REQUIRE(quot.section[0] == 0);
    REQUIRE(quot.section[1] == 1); // lowest representative is the generator

    const FiniteGroup z2z2 = FiniteGroup::parity(2);
    REQUIRE(z2z2.is_normal({0, 3}));
}

TEST_CASE("decomposition on a direct product is untwisted") {
    TwistedSystem sys =
        TwistedSystem::untwisted(FiniteGroup::parity(2), BaseAlgebra::R);
    FiniteExtension ext{sys.group, {0, 1}, std::nullopt};
    const auto dec = packer_raeburn_decompose(sys, ext);
    REQUIRE(dec.quotient.order == 2);
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            REQUIRE((dec.nu[p][q] - dec.inner.unit).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("the Z4 extension has a nontrivial section cocycle") {
    TwistedSystem sys = TwistedSystem::untwisted(FiniteGroup::cyclic(4), BaseAlgebra::C);
    FiniteExtension ext{sys.group, {0, 2}, std::nullopt};
    const auto dec = packer_raeburn_decompose(sys, ext);
    // nu(1,1) = s_1 s_1 s_0^-1 = the nontrivial element of N = {0, 2},
    // i.e. the basis element over N-index 1 with coefficient 1.
    const Eigen::VectorXd& nu11 = dec.nu[1][1];
    Eigen::VectorXd expected = Eigen::VectorXd::Zero(dec.inner.dim);
    expected[1 * 2 + 0] = 1.0;
    REQUIRE((nu11 - expected).cwiseAbs().maxCoeff() == 0.0);
    // Iterated dimension counting: |G/N| * dim(A x| N) = dim(A x| G).
    REQUIRE(dec.quotient.order * dec.inner.dim == sys.algebra().dim);
}

TEST_CASE("verification succeeds on the fixed extension suite") {
    for (const auto& cse : verify_detail::extension_cases()) {
        INFO(cse.name);
        REQUIRE(packer_raeburn_verify(cse.system, cse.extension));
    }
}

TEST_CASE("custom sections yield the same verification verdict") {
    TwistedSystem sys = TwistedSystem::untwisted(FiniteGroup::cyclic(4), BaseAlgebra::C);
    // Pick the other representative of the nontrivial coset.
    FiniteExtension ext{sys.group, {0, 2}, std::vector<int>{0, 3}};
    const auto dec = packer_raeburn_decompose(sys, ext);
    REQUIRE(dec.section == std::vector<int>({0, 3}));
    // s_1 s_1 s_0^-1 = 3 + 3 = 2, again the nontrivial element of N.
    Eigen::VectorXd expected = Eigen::VectorXd::Zero(dec.inner.dim);
    expected[1 * 2 + 0] = 1.0;
    REQUIRE((dec.nu[1][1] - expected).cwiseAbs().maxCoeff() == 0.0);
    REQUIRE(packer_raeburn_verify(sys, ext));

    SECTION("sections must respect cosets and fix the identity") {
        FiniteExtension bad{sys.group, {0, 2}, std::vector<int>{0, 2}};
        REQUIRE_THROWS_AS(packer_raeburn_decompose(sys, bad), error);
        FiniteExtension bad_id{sys.group, {0, 2}, std::vector<int>{2, 1}};
        REQUIRE_THROWS_AS(packer_raeburn_decompose(sys, bad_id), error);
    }
}

TEST_CASE("invalid extensions are rejected") {
    SECTION("subgroup outside ker(c)") {
        // CT group with genuine grading: c(C) = -1, N = {1, C}.
        ParityGroupData d = make_sign_cocycle(2, {-1, -1}, {1, -1}, {{1, 1}, {1, 1}}, {1, 1});
        TwistedSystem sys = verify_detail::parity_system(d, BaseAlgebra::C);
        FiniteExtension ext{sys.group, {0, 2}, std::nullopt};
        REQUIRE_THROWS_AS(packer_raeburn_decompose(sys, ext), error);
    }
    SECTION("non-subgroup input") {
        TwistedSystem sys = TwistedSystem::untwisted(FiniteGroup::cyclic(4), BaseAlgebra::R);
        FiniteExtension ext{sys.group, {0, 1}, std::nullopt};
        REQUIRE_THROWS_AS(packer_raeburn_decompose(sys, ext), error);
    }
}

TEST_CASE("iterated product matches the direct character count for Z4 over C") {
    // Oracle: the complex group algebra of Z_4 splits into the four
    // characters, i.e. four copies of C as a real algebra.
    TwistedSystem sys = TwistedSystem::untwisted(FiniteGroup::cyclic(4), BaseAlgebra::C);
    const AlgebraStructure shape = wedderburn(sys.algebra());
    AlgebraStructure expected;
    for (int i = 0; i < 4; ++i) expected.blocks.push_back({Division::C, 1});
    expected.canonicalize();
    REQUIRE(shape == expected);

    FiniteExtension ext{sys.group, {0, 2}, std::nullopt};
    const auto dec = packer_raeburn_decompose(sys, ext);
    auto nu_fn = [&dec](int p, int q) { return dec.nu[p][q]; };
    const StructureAlgebra iterated = crossed_product(dec.inner, dec.quotient, dec.beta, nu_fn);
    REQUIRE(wedderburn(iterated) == expected);
}
