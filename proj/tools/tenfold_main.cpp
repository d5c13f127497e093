// Command-line front end: classify symmetry specs, render the tables, run
// the oracle verification suites, and compute loop windings.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "tenfold/classify.hpp"
#include "tenfold/specfile.hpp"
#include "tenfold/tables.hpp"
#include "tenfold/verify.hpp"

namespace {

int exit_code_for(tenfold::errc code) {
    switch (code) {
        case tenfold::errc::parse: return 2;
        case tenfold::errc::inconsistent_spec: return 3;
        case tenfold::errc::step_too_large: return 4;
        case tenfold::errc::invalid_sample: return 5;
        default: return 1;
    }
}

int cmd_classify(const std::string& path, const std::string& format) {
    const tenfold::SymmetrySpec spec = tenfold::load_spec_file(path);
    spec.ensure_consistent();
    const tenfold::AbelianGroup group = tenfold::lattice_classify(spec);
    if (format == "machine") std::cout << tenfold::to_machine_string(group) << "\n";
    else std::cout << tenfold::to_string(group) << "\n";
    return 0;
}

int cmd_table(const std::string& which, int dmax) {
    if (which == "tenfold") std::cout << tenfold::render_tenfold_table();
    else if (which == "zero-d") std::cout << tenfold::render_zero_d_table();
    else std::cout << tenfold::render_periodic_table(dmax);
    return 0;
}

int cmd_verify(const std::string& suite) {
    bool all_passed = true;
    for (const auto& report : tenfold::verify_suites(suite)) {
        tenfold::print_report(std::cout, report);
        all_passed = all_passed && report.passed();
    }
    return all_passed ? 0 : 1;
}

int cmd_winding(const std::string& path) {
    const tenfold::GradingFamily fam = tenfold::load_family_file(path);
    std::cout << tenfold::winding(fam) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classifier for gapped free-fermion phases from CT-type symmetry data"};
    app.require_subcommand(1);

    std::string spec_path, format = "human";
    auto* classify = app.add_subcommand("classify", "Classify a symmetry spec file");
    classify->add_option("--spec", spec_path, "spec file (key = value lines)")->required();
    classify->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "machine"}));

    std::string which;
    int dmax = 3;
    auto* table = app.add_subcommand("table", "Render a classification table");
    table->add_option("--which", which, "table to render")
        ->required()
        ->check(CLI::IsMember({"tenfold", "zero-d", "periodic"}));
    table->add_option("--dmax", dmax, "max dimension column (periodic table)")
        ->check(CLI::Range(0, 12));

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run an oracle verification suite");
    verify->add_option("--suite", suite, "suite to run")
        ->required()
        ->check(CLI::IsMember({"repr", "wedderburn", "packer-raeburn", "homotopy", "all"}));

    std::string family_path;
    auto* winding = app.add_subcommand("winding", "Winding number of a grading loop file");
    winding->add_option("--input", family_path, "family file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(spec_path, format);
        if (table->parsed()) return cmd_table(which, dmax);
        if (verify->parsed()) return cmd_verify(suite);
        return cmd_winding(family_path);
    } catch (const tenfold::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
