#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tenfold/homotopy.hpp"
#include "tenfold/verify.hpp"

using namespace tenfold;

TEST_CASE("spectral flattening") {
    SECTION("diagonal matrix") {
        MatrixXc h(2, 2);
        h << 2, 0, 0, -1;
        const MatrixXc flat = spectral_flatten(GappedMatrix(h, 0.5));
        MatrixXc expected(2, 2);
        expected << 1, 0, 0, -1;
        REQUIRE((flat - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
    SECTION("scaled pauli matrix is already flat up to scale") {
        const MatrixXc flat = spectral_flatten(GappedMatrix(3.0 * pauli(1), 1.0));
        REQUIRE((flat - MatrixXc(pauli(1))).cwiseAbs().maxCoeff() < 1e-12);
    }
    SECTION("random gapped hermitian squares to the identity") {
        std::mt19937_64 rng(904);
        std::normal_distribution<double> gauss;
        for (int trial = 0; trial < 20; ++trial) {
            MatrixXc h(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) h(i, j) = complexd(gauss(rng), gauss(rng));
            h = (h + h.adjoint()).eval();
            Eigen::SelfAdjointEigenSolver<MatrixXc> eig(h);
            if (eig.eigenvalues().cwiseAbs().minCoeff() < 1e-6) continue;
            const MatrixXc flat = spectral_flatten(GappedMatrix(h, 1e-6));
            REQUIRE((flat * flat - MatrixXc::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
            REQUIRE((flat * h - h * flat).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
    SECTION("gapless input is rejected") {
        MatrixXc h(2, 2);
        h << 1e-12, 0, 0, 1;
        REQUIRE_THROWS_MATCHES(spectral_flatten(GappedMatrix(h, 1e-6)), error,
                               Catch::Matchers::Predicate<error>([](const error& e) {
                                   return e.code() == errc::gapless;
                               }));
    }
    SECTION("anticommutation with declared symmetries is preserved") {
        const MatrixXc h = 2.5 * pauli(1) - 0.5 * pauli(2);
        const MatrixXc flat = spectral_flatten(GappedMatrix(h, 0.5), {{pauli(3), -1}});
        REQUIRE((flat * pauli(3) + pauli(3) * flat).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("winding numbers") {
    SECTION("constant loop") {
        REQUIRE(winding(sample_phase_function([](double) { return 0.0; })) == 0);
    }
    SECTION("doubled loop") {
        REQUIRE(winding(sample_phase_function([](double t) { return 2.0 * t; })) == 2);
    }
    SECTION("reverse loop") {
        REQUIRE(winding(sample_phase_function([](double t) { return -t; })) == -1);
    }
    SECTION("coarse sampling of a fast loop is rejected") {
        std::vector<double> phases;
        for (int j = 0; j < 8; ++j) phases.push_back(3.0 * 2.0 * 3.14159265358979 * j / 8.0);
        const GradingFamily fam = make_phase_family(phases);
        REQUIRE_THROWS_MATCHES(winding(fam), error,
                               Catch::Matchers::Predicate<error>([](const error& e) {
                                   return e.code() == errc::step_too_large;
                               }));
    }
    SECTION("degenerate samples are invalid") {
        GradingFamily fam = sample_phase_function([](double) { return 0.0; }, 64);
        fam.samples[3] = Matrix2c::Zero();
        REQUIRE_THROWS_MATCHES(winding(fam), error,
                               Catch::Matchers::Predicate<error>([](const error& e) {
                                   return e.code() == errc::invalid_sample;
                               }));
    }
}

TEST_CASE("difference classes") {
    const GradingFamily g0 = sample_phase_function([](double) { return 0.0; });
    const GradingFamily g1 = sample_phase_function([](double t) { return 2.0 * t; });
    REQUIRE(difference_class(g0, g0) == 0);
    REQUIRE(difference_class(g0, g1) == 2);
    REQUIRE(difference_class(g1, g0) == -2);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const GradingFamily a = verify_detail::random_family(rng);
        const GradingFamily b = verify_detail::random_family(rng);
        const GradingFamily c = verify_detail::random_family(rng);
        REQUIRE(difference_class(a, b) + difference_class(b, c) == difference_class(a, c));
        REQUIRE(difference_class(a, b) == -difference_class(b, a));
    }
}

TEST_CASE("gauge conjugation") {
    const GradingFamily g0 = sample_phase_function([](double) { return 0.0; });
    const GradingFamily g1 = sample_phase_function([](double t) { return 2.0 * t; });
    SECTION("k = 0 is the identity") {
        const GradingFamily out = conjugate_family(g0, 0);
        for (std::size_t j = 0; j < out.size(); ++j)
            REQUIRE((out.samples[j] - g0.samples[j]).cwiseAbs().maxCoeff() == 0.0);
    }
    SECTION("k = 2 maps the constant loop onto the doubled loop") {
        const GradingFamily out = conjugate_family(g0, 2);
        for (std::size_t j = 0; j < out.size(); ++j)
            REQUIRE((out.samples[j] - g1.samples[j]).cwiseAbs().maxCoeff() < 1e-9);
    }
    SECTION("the winding shift is independent of the starting family") {
        std::mt19937_64 rng(2718);
        for (long long k : {-2LL, 1LL, 3LL}) {
            for (int trial = 0; trial < 10; ++trial) {
                const GradingFamily fam = verify_detail::random_family(rng);
                REQUIRE(winding(conjugate_family(fam, k)) - winding(fam) == k);
            }
        }
    }
    SECTION("conjugated families remain valid gradings") {
        const GradingFamily out = conjugate_family(g1, 3);
        out.validate();
    }
}

TEST_CASE("swap rotation homotopy") {
    const GradingFamily g0 = sample_phase_function([](double) { return 0.0; });
    const GradingFamily g1 = sample_phase_function([](double t) { return 2.0 * t; });
    REQUIRE(direct_sum_swap_check(g0, g0));
    REQUIRE(direct_sum_swap_check(g0, g1));
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial)
        REQUIRE(direct_sum_swap_check(verify_detail::random_family(rng),
                                      verify_detail::random_family(rng)));
}

TEST_CASE("trivializing paths") {
    SECTION("block grading with the swap involution") {
        MatrixXc gamma = MatrixXc::Zero(4, 4);
        gamma.topLeftCorner(2, 2) = Matrix2c::Identity();
        gamma.bottomRightCorner(2, 2) = -Matrix2c::Identity();
        MatrixXc inv = MatrixXc::Zero(4, 4);
        inv.topRightCorner(2, 2) = Matrix2c::Identity();
        inv.bottomLeftCorner(2, 2) = Matrix2c::Identity();
        const auto path = trivializing_path(gamma, inv);
        REQUIRE((path.front() - gamma).cwiseAbs().maxCoeff() < 1e-12);
        REQUIRE((path.back() + gamma).cwiseAbs().maxCoeff() < 1e-9);
        for (const auto& sample : path)
            REQUIRE((sample * sample - MatrixXc::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-9);
    }
    SECTION("an anti-involution is rejected") {
        const MatrixXc gamma = pauli(3);
        MatrixXc inv(2, 2);
        inv << 0, -1, 1, 0; // squares to -1
        REQUIRE_THROWS_MATCHES(trivializing_path(gamma, inv), error,
                               Catch::Matchers::Predicate<error>([](const error& e) {
                                   return e.code() == errc::not_involution;
                               }));
    }
    SECTION("a non-odd operator is rejected") {
        const MatrixXc gamma = pauli(3);
        REQUIRE_THROWS_MATCHES(trivializing_path(gamma, MatrixXc(MatrixXc::Identity(2, 2))),
                               error, Catch::Matchers::Predicate<error>([](const error& e) {
                                   return e.code() == errc::not_odd;
                               }));
    }
    SECTION("graded commutation with declared symmetries is enforced") {
        const MatrixXc gamma = pauli(3);
        const MatrixXc inv = pauli(1);
        REQUIRE_NOTHROW(trivializing_path(gamma, inv, {{pauli(2), -1}}));
        REQUIRE_THROWS_AS(trivializing_path(gamma, inv, {{pauli(2), +1}}), error);
    }
}

TEST_CASE("winding survives small perturbation plus re-flattening") {
    std::mt19937_64 rng(515);
    std::uniform_real_distribution<double> eps(-1e-2, 1e-2);
    for (int trial = 0; trial < 10; ++trial) {
        const GradingFamily fam = verify_detail::random_family(rng);
        GradingFamily pert;
        for (const auto& sample : fam.samples) {
            MatrixXc h = sample;
            h += eps(rng) * pauli(1) + eps(rng) * pauli(2);
            pert.samples.push_back(
                Matrix2c(spectral_flatten(GappedMatrix(h, 0.5), {{pauli(3), -1}})));
        }
        REQUIRE(winding(pert) == winding(fam));
    }
}
