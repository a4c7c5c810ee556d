#include <iostream>

#include <CLI11.hpp>

#include "posetq/cli.hpp"

int main(int argc, char** argv) {
    posetq::cli::RunSpec spec;
    CLI::App app{"Poset-metric additive and quantum stabilizer codes"};
    app.add_option("--input", spec.input, "JSON input document")->required();
    app.add_option("--command", spec.command, "Command to run")
        ->required()
        ->check(CLI::IsMember(posetq::cli::commands()));
    app.add_option("--poset", spec.poset, "JSON poset file overriding the input's poset");
    app.add_option("--cap", spec.cap, "Enumeration cap on code sizes");
    app.add_option("--seed", spec.seed, "Seed for randomized poset search");
    app.add_option("--search-limit", spec.search_limit, "Random posets tried by construct-mds for n > 5");
    app.add_flag("--json", spec.json, "Emit a JSON report");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    return posetq::cli::run(spec, std::cout, std::cerr);
}
