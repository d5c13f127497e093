#pragma once

// Named verification suites driving the matrix oracle and the homotopy
// checks. Shared by the command-line front end and the acceptance tests.

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tenfold/classify.hpp"
#include "tenfold/homotopy.hpp"
#include "tenfold/repr/ct_algebra.hpp"
#include "tenfold/repr/graded_reps.hpp"
#include "tenfold/repr/packer_raeburn.hpp"
#include "tenfold/tables.hpp"

namespace tenfold {

struct CheckReport {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckReport> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

inline void print_report(std::ostream& os, const SuiteReport& report) {
    for (const auto& c : report.checks)
        os << (c.passed ? "  ok  " : "  FAIL") << "  " << c.name
           << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    os << "suite " << report.suite << ": " << (report.passed() ? "pass" : "FAIL") << "\n";
}

namespace verify_detail {

template <typename Fn>
void run_check(SuiteReport& report, const std::string& name, Fn&& fn) {
    CheckReport check{name, false, ""};
    try {
        check.passed = fn(check.detail);
    } catch (const std::exception& e) {
        check.passed = false;
        check.detail = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(check));
}

inline std::string fmt_residual(double r) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << "residual " << r;
    return os.str();
}

inline GradingFamily random_family(std::mt19937_64& rng, std::size_t m = 256) {
    std::uniform_int_distribution<int> kdist(-3, 3);
    std::uniform_real_distribution<double> amp(0.0, 0.8), ph(0.0, 6.28);
    const int k = kdist(rng);
    const double a = amp(rng), b = amp(rng), p0 = ph(rng), p1 = ph(rng);
    return sample_phase_function(
        [&](double theta) {
            return double(k) * theta + a * std::sin(theta + p0) + 0.5 * b * std::sin(2 * theta + p1);
        },
        m);
}

} // namespace verify_detail

// SR(Cl_{0,n}) from explicit matrix modules and Smith normal form against
// the zero-dimensional classification sequence.
inline SuiteReport verify_repr() {
    using namespace verify_detail;
    SuiteReport report{"repr", {}};
    const KSequence expected = k_point(Field::real);
    for (int n = 0; n <= 7; ++n) {
        run_check(report, "SR(Cl(0," + std::to_string(n) + "))", [&](std::string& detail) {
            const auto reps = build_irreducible_graded_reps(0, n);
            double resid = 0.0;
            for (const auto& rep : reps) resid = std::max(resid, rep.residual());
            const AbelianGroup got = sr_bruteforce(0, n);
            detail = to_string(got) + ", " + fmt_residual(resid);
            return got == expected.at(n) && resid < 1e-12;
        });
    }
    return report;
}

// Numerical Wedderburn shapes of the ten ungraded symmetry algebras against
// the associated-algebra column.
inline SuiteReport verify_wedderburn() {
    using namespace verify_detail;
    SuiteReport report{"wedderburn", {}};
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"AI", "M_2(R) + M_2(R)"}, {"CI", "M_4(R)"},
        {"C", "M_2(C)"},           {"CII", "M_2(H)"},
        {"AII", "H + H"},          {"DIII", "M_2(H)"},
        {"D", "M_2(C)"},           {"BDI", "M_4(R)"},
        {"A", "C + C"},            {"AIII", "M_2(C)"},
    };
    for (const auto& [label, algebra_text] : expected) {
        run_check(report, "associated algebra of " + label, [&](std::string& detail) {
            const TenfoldRow row = detail::row_by_label(label);
            const StructureAlgebra alg = ct_ungraded_algebra(row.spec);
            alg.validate();
            const AlgebraStructure numeric = wedderburn(alg);
            const AlgebraStructure symbolic = clifford_structure(ct_to_clifford(row.spec).ungraded);
            detail = to_string(numeric);
            return to_string(numeric) == algebra_text && numeric == symbolic;
        });
    }
    return report;
}

namespace verify_detail {

inline TwistedSystem parity_system(const ParityGroupData& d, BaseAlgebra base) {
    TwistedSystem sys;
    sys.group = FiniteGroup::parity(d.n);
    sys.base = base;
    sys.phi.resize(sys.group.order);
    sys.c.resize(sys.group.order);
    sys.sigma.assign(sys.group.order, std::vector<UnitPhase>(sys.group.order));
    for (int x = 0; x < sys.group.order; ++x) {
        sys.phi[x] = d.phi_of(GroupElem(x));
        sys.c[x] = d.c_of(GroupElem(x));
        for (int y = 0; y < sys.group.order; ++y) sys.sigma[x][y] = d.sig(GroupElem(x), GroupElem(y));
    }
    return sys;
}

struct ExtensionCase {
    std::string name;
    TwistedSystem system;
    FiniteExtension extension;
};

// Fixed suite of group extensions of order <= 16.
inline std::vector<ExtensionCase> extension_cases() {
    std::vector<ExtensionCase> cases;

    {
        ExtensionCase c;
        c.name = "Z2xZ2 / Z2, untwisted, base R";
        c.system = TwistedSystem::untwisted(FiniteGroup::parity(2), BaseAlgebra::R);
        c.extension = {c.system.group, {0, 1}, std::nullopt};
        cases.push_back(std::move(c));
    }
    {
        ExtensionCase c;
        c.name = "Z4 / Z2, untwisted, base C";
        c.system = TwistedSystem::untwisted(FiniteGroup::cyclic(4), BaseAlgebra::C);
        c.extension = {c.system.group, {0, 2}, std::nullopt};
        cases.push_back(std::move(c));
    }
    {
        // CT group with T^2 = +1, C^2 = -1 over the sublattice subgroup
        // {1, S}; compared as ungraded algebras (c taken trivial so the
        // subgroup lies inside ker(c)).
        ExtensionCase c;
        c.name = "CT group / {1,S}, T^2=+1 C^2=-1, base C";
        ParityGroupData d = make_sign_cocycle(2, {-1, -1}, {1, 1}, {{1, 1}, {1, 1}}, {1, -1});
        c.system = parity_system(d, BaseAlgebra::C);
        c.extension = {c.system.group, {0, 3}, std::nullopt};
        cases.push_back(std::move(c));
    }
    {
        // Graded case: N = {1, T} genuinely sits inside ker(c).
        ExtensionCase c;
        c.name = "CT group / {1,T}, T^2=-1 C^2=-1, graded, base C";
        ParityGroupData d = make_sign_cocycle(2, {-1, -1}, {1, -1}, {{1, 1}, {1, 1}}, {-1, -1});
        c.system = parity_system(d, BaseAlgebra::C);
        c.extension = {c.system.group, {0, 1}, std::nullopt};
        cases.push_back(std::move(c));
    }
    {
        ExtensionCase c;
        c.name = "Z2^3 / Z2^2, untwisted, base R";
        c.system = TwistedSystem::untwisted(FiniteGroup::parity(3), BaseAlgebra::R);
        c.extension = {c.system.group, {0, 1, 2, 3}, std::nullopt};
        cases.push_back(std::move(c));
    }
    {
        ExtensionCase c;
        c.name = "Z8 / Z4, untwisted, base C";
        c.system = TwistedSystem::untwisted(FiniteGroup::cyclic(8), BaseAlgebra::C);
        c.extension = {c.system.group, {0, 2, 4, 6}, std::nullopt};
        cases.push_back(std::move(c));
    }
    {
        ExtensionCase c;
        c.name = "Z2^2 twisted by sigma_{0,2} / Z2, base R";
        c.system = parity_system(clifford_cocycle(0, 2), BaseAlgebra::R);
        c.extension = {c.system.group, {0, 1}, std::nullopt};
        cases.push_back(std::move(c));
    }
    {
        ExtensionCase c;
        c.name = "Z4xZ2 / Z4, untwisted, base C";
        c.system = TwistedSystem::untwisted(
            FiniteGroup::direct_product(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2)),
            BaseAlgebra::C);
        c.extension = {c.system.group, {0, 2, 4, 6}, std::nullopt};
        cases.push_back(std::move(c));
    }
    return cases;
}

} // namespace verify_detail

// Both sides of the iterated crossed-product isomorphism on a fixed suite of
// finite extensions: dimension, center dimension, Wedderburn multiset.
inline SuiteReport verify_packer_raeburn() {
    using namespace verify_detail;
    SuiteReport report{"packer-raeburn", {}};
    for (const auto& cse : extension_cases()) {
        run_check(report, cse.name, [&](std::string& detail) {
            const auto dec = packer_raeburn_decompose(cse.system, cse.extension);
            detail = fmt_residual(dec.twisting_pair_residual);
            return packer_raeburn_verify(cse.system, cse.extension);
        });
    }
    return report;
}

// Winding model checks: the two reference loops, the gauge map between them,
// chain rule and antisymmetry on random loops, the swap homotopy, and
// stability of the winding under small perturbation plus re-flattening.
inline SuiteReport verify_homotopy(int random_triples = 25) {
    using namespace verify_detail;
    SuiteReport report{"homotopy", {}};
    const GradingFamily gamma0 = sample_phase_function([](double) { return 0.0; });
    const GradingFamily gamma1 = sample_phase_function([](double theta) { return 2.0 * theta; });

    run_check(report, "winding of the constant loop is 0",
              [&](std::string&) { return winding(gamma0) == 0; });
    run_check(report, "winding of the doubled loop is 2",
              [&](std::string&) { return winding(gamma1) == 2; });
    run_check(report, "difference class of the pair is 2",
              [&](std::string&) { return difference_class(gamma0, gamma1) == 2; });
    run_check(report, "gauge conjugation maps the constant loop to the doubled loop",
              [&](std::string& detail) {
                  const GradingFamily mapped = conjugate_family(gamma0, 2);
                  double worst = 0.0;
                  for (std::size_t j = 0; j < mapped.size(); ++j)
                      worst = std::max(worst, (mapped.samples[j] - gamma1.samples[j])
                                                  .cwiseAbs()
                                                  .maxCoeff());
                  detail = fmt_residual(worst);
                  return worst < 1e-9;
              });
    run_check(report, "chain rule and antisymmetry on random triples", [&](std::string& detail) {
        std::mt19937_64 rng(424243);
        for (int i = 0; i < random_triples; ++i) {
            const GradingFamily a = random_family(rng), b = random_family(rng),
                                c = random_family(rng);
            if (difference_class(a, b) + difference_class(b, c) != difference_class(a, c))
                return false;
            if (difference_class(a, b) != -difference_class(b, a)) return false;
        }
        detail = std::to_string(random_triples) + " triples";
        return true;
    });
    run_check(report, "swap rotation homotopy is valid fibrewise", [&](std::string&) {
        std::mt19937_64 rng(515151);
        if (!direct_sum_swap_check(gamma0, gamma0)) return false;
        if (!direct_sum_swap_check(gamma0, gamma1)) return false;
        return direct_sum_swap_check(random_family(rng), random_family(rng));
    });
    run_check(report, "winding stable under 1e-2 perturbation and re-flattening",
              [&](std::string&) {
                  std::mt19937_64 rng(626262);
                  std::uniform_real_distribution<double> eps(-1e-2, 1e-2);
                  for (int trial = 0; trial < 5; ++trial) {
                      const GradingFamily fam = random_family(rng);
                      GradingFamily pert;
                      for (const auto& sample : fam.samples) {
                          MatrixXc h = sample;
                          h += eps(rng) * pauli(1) + eps(rng) * pauli(2);
                          const MatrixXc flat = spectral_flatten(
                              GappedMatrix(h, 0.5), {{pauli(3), -1}});
                          pert.samples.push_back(Matrix2c(flat));
                      }
                      if (winding(pert) != winding(fam)) return false;
                  }
                  return true;
              });
    run_check(report, "spectral flattening squares to identity", [&](std::string& detail) {
        std::mt19937_64 rng(737373);
        std::normal_distribution<double> gauss;
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            MatrixXc h(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) h(i, j) = complexd(gauss(rng), gauss(rng));
            h = (h + h.adjoint()).eval();
            Eigen::SelfAdjointEigenSolver<MatrixXc> eig(h);
            if (eig.eigenvalues().cwiseAbs().minCoeff() < 1e-3) continue;
            const MatrixXc flat = spectral_flatten(GappedMatrix(h, 1e-3));
            worst = std::max(
                worst,
                (flat * flat - MatrixXc::Identity(4, 4)).cwiseAbs().maxCoeff());
        }
        detail = fmt_residual(worst);
        return worst < 1e-12;
    });
    return report;
}

inline std::vector<SuiteReport> verify_suites(const std::string& which) {
    std::vector<SuiteReport> reports;
    if (which == "repr" || which == "all") reports.push_back(verify_repr());
    if (which == "wedderburn" || which == "all") reports.push_back(verify_wedderburn());
    if (which == "packer-raeburn" || which == "all") reports.push_back(verify_packer_raeburn());
    if (which == "homotopy" || which == "all") reports.push_back(verify_homotopy());
    require(!reports.empty(), errc::precondition, "unknown suite: " + which);
    return reports;
}

} // namespace tenfold
