#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primroot/cli.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit upper bounds for the least primitive root mod p"};
    app.require_subcommand(1);

    primroot::RunManifest manifest;
    std::string alpha_csv;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"table1", "per-omega exception classes from the no-sieve screening"},
        {"table2", "per-omega exception classes after the sieve"},
        {"compare-bounds", "PV vs Burgess crossover and best r"},
        {"tree", "prime divisor tree for one (alpha, omega) class"},
        {"verify-small", "exhaustive least-primitive-root scan up to --limit"},
        {"oracle-tests", "character-sum indicator vs brute-force oracles"},
    };
    for (const auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--alpha", alpha_csv, "comma-separated alpha exponents, e.g. 0.68,0.65");
        sub->add_option("--mode", manifest.mode, "raw|cutoff (table1)");
        sub->add_option("--omega", manifest.omega, "omega(p-1) class (tree)");
        sub->add_option("--max-enum", manifest.max_enum, "enumeration threshold override (tree)");
        sub->add_option("--checkpoint", manifest.checkpoint_path, "checkpoint path (tree)");
        sub->add_option("--resume", manifest.resume_path, "resume from checkpoint (tree)");
        auto* limit = sub->add_option("--limit", manifest.limit,
                                      "scan limit / node budget, command-dependent");
        if (name == "oracle-tests") sub->add_option("--pmax", manifest.limit)->excludes(limit);
        sub->add_option("--seed", manifest.seed, "seed for randomized factoring");
        sub->add_option("--config", manifest.config_path, "config file (JSON)");
        sub->add_option("--out", manifest.out_base, "artifact base name");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return primroot::EXIT_CONFIG;
    }

    manifest.command = app.get_subcommands().front()->get_name();
    manifest.alpha_texts = split_csv(alpha_csv);
    return primroot::run_command(manifest);
}
