#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lkd/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Linear Koszul duality engine"};
    std::string config_path;
    std::string command;
    std::string window;
    std::string cell;
    std::string format = "tsv";
    std::uint64_t seed = 0;
    app.add_option("--config", config_path, "JSON run description")->required();
    app.add_option("--command", command, "check-axioms, koszul-lemmas, roundtrip, cohomology, kappa or intersect");
    app.add_option("--window", window, "imin,imax,jmin,jmax");
    auto* seed_opt = app.add_option("--seed", seed, "seed for randomized commands");
    app.add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--cell", cell, "i,j: rerun on a single cell");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        std::ifstream in(config_path);
        if (!in) throw lkd::ConfigError("--config: cannot read " + config_path);
        std::stringstream text;
        text << in.rdbuf();
        lkd::RunConfig c = lkd::parse_config(text.str());
        if (!command.empty()) c.command = command;
        if (!window.empty()) c.window = lkd::parse_window(window);
        if (!cell.empty()) c.window = lkd::parse_cell(cell);
        if (*seed_opt) c.seed = seed;
        c.format = format == "json" ? lkd::OutputFormat::Json : lkd::OutputFormat::Tsv;
        lkd::validate(c);
        return lkd::run(c, std::cout);
    } catch (const lkd::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
