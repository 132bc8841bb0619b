#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "primroot/cli.hpp"

using namespace primroot;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string f;
    while (std::getline(in, f, ',')) out.push_back(f);
    return out;
}

fs::path out_base(const std::string& name) {
    return fs::temp_directory_path() / ("primroot_cli_" + name);
}

}  // namespace

TEST_CASE("verify-small flags the alpha = 0.6309 violation at p = 3") {
    const fs::path base = out_base("vsmall1");
    RunManifest m;
    m.command = "verify-small";
    m.alpha_texts = {"0.6309"};
    m.limit = 2000;
    m.out_base = base.string();
    REQUIRE(run_command(m) == EXIT_VIOLATION);

    const auto lines = lines_of(slurp(base.string() + ".csv"));
    REQUIRE(lines.size() == 3);
    REQUIRE(lines[0].rfind("# config_hash=" + config_hash(default_bound_config()), 0) == 0);
    REQUIRE(lines[1] == "p,least_root,alpha");
    REQUIRE(lines[2] == "3,2,0.6309");
    fs::remove(base.string() + ".csv");
}

TEST_CASE("verify-small is clean at alpha = 0.68") {
    const fs::path base = out_base("vsmall2");
    RunManifest m;
    m.command = "verify-small";
    m.alpha_texts = {"0.68"};
    m.limit = 2000;
    m.out_base = base.string();
    REQUIRE(run_command(m) == EXIT_OK);
    REQUIRE(lines_of(slurp(base.string() + ".csv")).size() == 2);  // meta + header only
    fs::remove(base.string() + ".csv");
}

TEST_CASE("table1 emits the no-sieve exception brackets per mode") {
    const fs::path base = out_base("t1");
    RunManifest m;
    m.command = "table1";
    m.out_base = base.string();
    REQUIRE(run_command(m) == EXIT_OK);
    auto lines = lines_of(slurp(base.string() + ".csv"));
    REQUIRE(lines[1] == "alpha,omega_lower,omega_upper,mode");
    REQUIRE(lines[2] == "0.8,13,15,cutoff");
    REQUIRE(lines[6] == "0.6309,5,149,cutoff");

    m.mode = "raw";
    REQUIRE(run_command(m) == EXIT_OK);
    lines = lines_of(slurp(base.string() + ".csv"));
    REQUIRE(lines[2] == "0.8,3,15,raw");

    // JSON stream opens with the meta record.
    const auto jl = lines_of(slurp(base.string() + ".jsonl"));
    REQUIRE(nlohmann::json::parse(jl[0]).at("type") == "meta");
    REQUIRE(nlohmann::json::parse(jl[1]).at("type") == "summary");
    fs::remove(base.string() + ".csv");
    fs::remove(base.string() + ".jsonl");

    m.mode = "sideways";
    REQUIRE(run_command(m) == EXIT_CONFIG);
}

TEST_CASE("table2 emits the sieve brackets") {
    const fs::path base = out_base("t2");
    RunManifest m;
    m.command = "table2";
    m.out_base = base.string();
    REQUIRE(run_command(m) == EXIT_OK);
    const auto lines = lines_of(slurp(base.string() + ".csv"));
    REQUIRE(lines[2] == "0.69,12,14,sieve");
    REQUIRE(lines[3] == "0.68,10,15,sieve");
    REQUIRE(lines[4] == "0.65,7,18,sieve");
    REQUIRE(lines[5] == "0.6309,5,21,sieve");
    fs::remove(base.string() + ".csv");
    fs::remove(base.string() + ".jsonl");
}

TEST_CASE("compare-bounds reports the crossover when it exists") {
    const fs::path base = out_base("cb");
    RunManifest m;
    m.command = "compare-bounds";
    m.out_base = base.string();
    REQUIRE(run_command(m) == EXIT_OK);
    const auto lines = lines_of(slurp(base.string() + ".csv"));
    REQUIRE(lines[1] == "alpha,c2,crossover_log10_p,best_r_at_1p5e6,best_r_at_1e30");

    const auto row06 = fields_of(lines[2]);
    REQUIRE(row06[0] == "0.6");
    REQUIRE(row06[1] == "6");
    REQUIRE(std::abs(std::stod(row06[2]) - 21.9603842039) < 1e-3);
    // Direct evaluation at p = 1.5e6, H = p^0.6: log-bounds 9.388 (r=2),
    // 9.154 (r=6), 9.148 (r=7), 9.162 (r=8) -> small p favors large r.
    REQUIRE(row06[3] == "7");
    REQUIRE(row06[4] == "2");

    const auto row063 = fields_of(lines[3]);
    REQUIRE(row063[0] == "0.63");
    REQUIRE(row063[2] == "-");  // no crossover above alpha = 5/8
    fs::remove(base.string() + ".csv");
    fs::remove(base.string() + ".jsonl");
}

TEST_CASE("tree command maps verdicts onto exit codes") {
    const fs::path base = out_base("tree1");
    RunManifest m;
    m.command = "tree";
    m.alpha_texts = {"0.9"};
    m.omega = 5;
    m.out_base = base.string();
    REQUIRE(run_command(m) == EXIT_OK);
    const auto rep = nlohmann::json::parse(slurp(base.string() + ".json"));
    REQUIRE(rep.at("verdict") == "complete-no-violations");
    REQUIRE(rep.at("config_hash") == config_hash(default_bound_config()));
    fs::remove(base.string() + ".json");

    // A one-node budget cannot finish the 0.68 / omega = 13 tree.
    m.alpha_texts = {"0.68"};
    m.omega = 13;
    m.limit = 1;
    REQUIRE(run_command(m) == EXIT_INCOMPLETE);
    REQUIRE(nlohmann::json::parse(slurp(base.string() + ".json")).at("verdict") ==
            "incomplete-budget-exhausted");
    fs::remove(base.string() + ".json");
}

TEST_CASE("tree command usage errors") {
    RunManifest m;
    m.command = "tree";
    m.alpha_texts = {"0.68"};
    REQUIRE(run_command(m) == EXIT_CONFIG);  // missing --omega

    m.omega = 5;
    m.alpha_texts = {"0.68", "0.65"};
    REQUIRE(run_command(m) == EXIT_CONFIG);  // exactly one alpha

    m.alpha_texts = {"1.5"};
    REQUIRE(run_command(m) == EXIT_CONFIG);

    m.alpha_texts = {"0.5"};
    REQUIRE(run_command(m) == EXIT_CONFIG);  // boundary excluded
}

TEST_CASE("oracle-tests pass at a small limit") {
    const fs::path base = out_base("oracle");
    RunManifest m;
    m.command = "oracle-tests";
    m.limit = 50;
    m.out_base = base.string();
    REQUIRE(run_command(m) == EXIT_OK);
    const auto jl = lines_of(slurp(base.string() + ".jsonl"));
    const auto summary = nlohmann::json::parse(jl[1]);
    REQUIRE(summary.at("type") == "oracle-summary");
    REQUIRE(summary.at("failures") == 0);
    REQUIRE(summary.at("indicator_checks").get<std::uint64_t>() > 0);
    REQUIRE(summary.at("efree_checks").get<std::uint64_t>() > 0);
    fs::remove(base.string() + ".jsonl");
}

TEST_CASE("config file plumbing: custom file, bad file, missing file") {
    const fs::path cfg_path = fs::temp_directory_path() / "primroot_cli_cfg.json";
    BoundConfig cfg = default_bound_config();
    cfg.verified_cutoff = 100;
    save_config(cfg, cfg_path.string());

    const fs::path base = out_base("cfg");
    RunManifest m;
    m.command = "verify-small";
    m.alpha_texts = {"0.68"};
    m.limit = 500;
    m.config_path = cfg_path.string();
    m.out_base = base.string();
    REQUIRE(run_command(m) == EXIT_OK);
    // The artifact is stamped with the custom config's hash, not the default's.
    const auto lines = lines_of(slurp(base.string() + ".csv"));
    REQUIRE(lines[0].rfind("# config_hash=" + config_hash(cfg), 0) == 0);
    REQUIRE(config_hash(cfg) != config_hash(default_bound_config()));
    fs::remove(base.string() + ".csv");

    std::ofstream(cfg_path) << "{\"verified_cutof\": 100}";
    REQUIRE(run_command(m) == EXIT_CONFIG);
    fs::remove(cfg_path);
    REQUIRE(run_command(m) == EXIT_CONFIG);
}

TEST_CASE("unknown commands are usage errors") {
    RunManifest m;
    m.command = "does-not-exist";
    REQUIRE(run_command(m) == EXIT_CONFIG);
}
