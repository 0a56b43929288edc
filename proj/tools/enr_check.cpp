#include "enr/app/checks.hpp"
#include "enr/specialize/specialize.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Reproduce the lattice and surface computations from the published fixtures"};
    std::string suite = "all", format = "text", output;
    enr::RunOptions opts;
    std::uint64_t root = 0;
    bool list = false;

    app.add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(enr::suite_names()));
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--fixtures", opts.fixtures, "Fixture directory")->check(CLI::ExistingDirectory);
    app.add_option("--prime", opts.prime, "Prime for the reduction")->capture_default_str();
    auto* root_opt = app.add_option("--root", root, "Root of the minimal polynomial mod p defining the place");
    app.add_flag("--char0", opts.char0, "Also recompute over the number field (slower)");
    app.add_option("-o,--output", output, "Write the report to a file instead of stdout");
    app.add_flag("--list", list, "List the checks of the suite and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (*root_opt) opts.root = root;

    if (list) {
        for (const auto& id : enr::suite_checks(suite)) std::cout << id << '\n';
        return 0;
    }

    std::unique_ptr<enr::CheckSession> session;
    try {
        session = std::make_unique<enr::CheckSession>(opts);
        const auto K = session->fixtures().field();
        if (opts.root)
            enr::reduction_at_root(K, opts.prime, *opts.root);
        else
            enr::find_degree_one_place(K, opts.prime);
    } catch (const std::exception& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    }

    const auto report = enr::run_suite(*session, suite);
    const auto fmt = format == "json" ? enr::ReportFormat::Json : enr::ReportFormat::Text;
    try {
        if (output.empty()) {
            enr::emit_report(report, fmt, std::cout);
        } else {
            std::ofstream out(output);
            if (!out) throw std::ios_base::failure("cannot open " + output);
            enr::emit_report(report, fmt, out);
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    return report.passed() ? 0 : 1;
}
