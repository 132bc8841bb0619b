#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "primroot/config_io.hpp"
#include "primroot/report.hpp"

using namespace primroot;
namespace fs = std::filesystem;

namespace {

nlohmann::json default_json() { return config_to_json(default_bound_config()); }

}  // namespace

TEST_CASE("config round trips through its JSON form") {
    const BoundConfig cfg = default_bound_config();
    REQUIRE(parse_config(config_to_json(cfg).dump()) == cfg);
}

TEST_CASE("big naturals accept decimal strings and integral floats") {
    nlohmann::json j = default_json();
    j["verified_cutoff"] = "2.5e15";
    REQUIRE(parse_config(j.dump()).verified_cutoff == BigInt("2500000000000000"));
    j["verified_cutoff"] = "12345678901234567890123";
    REQUIRE(parse_config(j.dump()).verified_cutoff == BigInt("12345678901234567890123"));
    j["verified_cutoff"] = 2.5e15;  // integral double, still exact
    REQUIRE(parse_config(j.dump()).verified_cutoff == BigInt("2500000000000000"));
    j["verified_cutoff"] = 1000;
    REQUIRE(parse_config(j.dump()).verified_cutoff == 1000);

    j["verified_cutoff"] = 0.5;
    REQUIRE_THROWS_AS(parse_config(j.dump()), config_error);
    j["verified_cutoff"] = 1e16;  // above exact-double range: demand a string
    REQUIRE_THROWS_AS(parse_config(j.dump()), config_error);
    j["verified_cutoff"] = -5;
    REQUIRE_THROWS_AS(parse_config(j.dump()), config_error);
    j["verified_cutoff"] = "2.5";
    REQUIRE_THROWS_AS(parse_config(j.dump()), argument_error);  // not an integer
    j["verified_cutoff"] = 0;
    REQUIRE_THROWS_AS(parse_config(j.dump()), config_error);  // cutoff >= 3

    j = default_json();
    j["enumeration_threshold"] = "1e20";
    REQUIRE_THROWS_AS(parse_config(j.dump()), config_error);  // exceeds u64
    j["enumeration_threshold"] = 0;
    REQUIRE_THROWS_AS(parse_config(j.dump()), config_error);
}

TEST_CASE("strict keys: typos and partial Burgess entries are rejected") {
    REQUIRE_THROWS_AS(parse_config("{}"), config_error);  // no C(r) table at all

    nlohmann::json j = default_json();
    j["verified_cutof"] = 100;
    REQUIRE_THROWS_AS(parse_config(j.dump()), config_error);

    j = default_json();
    j["burgess_constants"].erase("2");
    REQUIRE_THROWS_AS(parse_config(j.dump()), config_error);  // C(2) required

    j = default_json();
    j["burgess_constants"]["2"].erase("provenance");
    REQUIRE_THROWS_AS(parse_config(j.dump()), config_error);

    j = default_json();
    j["burgess_constants"]["2"]["note"] = "extra";
    REQUIRE_THROWS_AS(parse_config(j.dump()), config_error);

    j = default_json();
    j["burgess_constants"]["abc"] = j["burgess_constants"]["2"];
    REQUIRE_THROWS_AS(parse_config(j.dump()), config_error);

    j = default_json();
    j["burgess_constants"]["1"] = j["burgess_constants"]["2"];
    REQUIRE_THROWS_AS(parse_config(j.dump()), config_error);  // r >= 2

    j = default_json();
    j["burgess_constants"]["2"]["value"] = -1.0;
    REQUIRE_THROWS_AS(parse_config(j.dump()), config_error);

    j = default_json();
    j["burgess_constants"]["2"]["provenance"] = "";
    REQUIRE_THROWS_AS(parse_config(j.dump()), config_error);
}

TEST_CASE("parse failures report the offending line") {
    const std::string text = "{\n  \"robin_constant\": 2.8973,\n  oops\n}";
    REQUIRE_THROWS_WITH(parse_config(text), Catch::Matchers::ContainsSubstring("line 3"));
}

TEST_CASE("config hash is stable and input-sensitive") {
    const BoundConfig cfg = default_bound_config();
    const std::string h = config_hash(cfg);
    REQUIRE(h.size() == 16);
    REQUIRE(h.find_first_not_of("0123456789abcdef") == std::string::npos);
    REQUIRE(h == config_hash(default_bound_config()));

    BoundConfig other = cfg;
    other.robin_constant = 2.9;
    REQUIRE(config_hash(other) != h);
}

TEST_CASE("config files save and load unchanged") {
    const fs::path path = fs::temp_directory_path() / "primroot_config_test.json";
    const BoundConfig cfg = default_bound_config();
    save_config(cfg, path.string());
    REQUIRE(load_config(path.string()) == cfg);
    fs::remove(path);
    REQUIRE_THROWS_AS(load_config(path.string()), config_error);
}

TEST_CASE("fnv1a64 reference vectors and hex rendering") {
    REQUIRE(fnv1a64("") == 0xcbf29ce484222325ULL);
    REQUIRE(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    REQUIRE(hex16(0) == "0000000000000000");
    REQUIRE(hex16(0xcbf29ce484222325ULL) == "cbf29ce484222325");
}

TEST_CASE("doubles format with 12 significant digits, shortest form") {
    REQUIRE(format_double(0.5) == "0.5");
    REQUIRE(format_double(19.535630212422) == "19.5356302124");
    REQUIRE(format_double(0.172015699354) == "0.172015699354");
    REQUIRE(format_double(2.5e15) == "2.5e+15");
}

TEST_CASE("csv tables carry the meta comment and reject ragged rows") {
    const ArtifactMeta m{"abc", 7, "table1 --alpha 0.68"};
    REQUIRE(csv_table(m, {"a", "b"}, {{"1", "2"}, {"3", "4"}}) ==
            "# config_hash=abc seed=7 command=table1 --alpha 0.68\na,b\n1,2\n3,4\n");
    REQUIRE_THROWS_AS(csv_table(m, {"a", "b"}, {{"1"}}), argument_error);
}

TEST_CASE("jsonl streams start with a meta record") {
    const ArtifactMeta m{"abc", 7, "tree"};
    nlohmann::json rec;
    rec["p"] = "2311";
    const std::string out = jsonl_records(m, {rec});
    std::istringstream in(out);
    std::string line;
    REQUIRE(std::getline(in, line));
    const nlohmann::json meta = nlohmann::json::parse(line);
    REQUIRE(meta.at("type") == "meta");
    REQUIRE(meta.at("config_hash") == "abc");
    REQUIRE(meta.at("seed") == 7);
    REQUIRE(std::getline(in, line));
    REQUIRE(nlohmann::json::parse(line).at("p") == "2311");
    REQUIRE_FALSE(std::getline(in, line));
}

TEST_CASE("text files round trip or fail loudly") {
    const fs::path path = fs::temp_directory_path() / "primroot_report_test.txt";
    write_text_file(path.string(), "payload\n");
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    REQUIRE(content == "payload\n");
    fs::remove(path);
    REQUIRE_THROWS_AS(write_text_file("/nonexistent_dir_primroot/x.txt", "y"), argument_error);
}
