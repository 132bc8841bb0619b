// Command dispatch and artifact plumbing.
//
// Exit codes: 0 success, 1 verified bound violation (or failed oracle
// check), 2 configuration/usage error, 3 incomplete budget.
#pragma once

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "primroot/character_table.hpp"
#include "primroot/config_io.hpp"
#include "primroot/divisor_tree.hpp"
#include "primroot/oracles.hpp"
#include "primroot/pv_screen.hpp"
#include "primroot/report.hpp"
#include "primroot/sieve.hpp"
#include "primroot/verify.hpp"

namespace primroot {

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_VIOLATION = 1;
inline constexpr int EXIT_CONFIG = 2;
inline constexpr int EXIT_INCOMPLETE = 3;

struct RunManifest {
    std::string command;
    std::vector<std::string> alpha_texts;  // from --alpha, comma-separated
    std::string config_path;               // empty -> built-in defaults
    std::string out_base;                  // artifact base name; empty -> command name
    std::string mode = "cutoff";           // raw | cutoff
    unsigned omega = 0;
    std::uint64_t max_enum = 0;
    std::string checkpoint_path;
    std::string resume_path;
    std::uint64_t limit = 0;
    std::uint64_t seed = 1;
};

namespace detail {

inline std::vector<AlphaSpec> manifest_alphas(const RunManifest& m,
                                              const std::vector<std::string>& defaults) {
    const std::vector<std::string>& texts = m.alpha_texts.empty() ? defaults : m.alpha_texts;
    std::vector<AlphaSpec> out;
    for (const std::string& t : texts) {
        AlphaSpec a = parse_alpha(t);
        if (!(a.value > 0.5 && a.value < 1.0))
            throw argument_error("alpha must lie in (0.5, 1): " + t);
        out.push_back(std::move(a));
    }
    return out;
}

inline std::string opt_to_string(const std::optional<unsigned>& v) {
    return v ? std::to_string(*v) : "-";
}

inline nlohmann::json logreal_json(const LogReal& v) {
    nlohmann::json j;
    j["log"] = v.log();
    j["sci"] = v.to_sci_string();
    return j;
}

}  // namespace detail

inline int run_table1(const RunManifest& m, const BoundConfig& cfg, const ArtifactMeta& meta) {
    const auto alphas = detail::manifest_alphas(m, {"0.8", "0.75", "0.7", "0.65", "0.6309"});
    ScreenMode mode;
    if (m.mode == "raw")
        mode = ScreenMode::raw;
    else if (m.mode == "cutoff")
        mode = ScreenMode::cutoff_applied;
    else
        throw config_error("table1: --mode must be raw or cutoff");
    std::vector<double> vals;
    for (const auto& a : alphas) vals.push_back(a.value);
    const std::vector<OmegaTable> tables = omega_exception_table(vals, cfg, mode);

    std::vector<std::vector<std::string>> rows;
    std::vector<nlohmann::json> records;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        const OmegaTable& t = tables[i];
        rows.push_back({alphas[i].text, detail::opt_to_string(t.omega_lower),
                        detail::opt_to_string(t.omega_upper), to_string(t.mode)});
        nlohmann::json s;
        s["type"] = "summary";
        s["alpha"] = alphas[i].text;
        s["mode"] = to_string(t.mode);
        s["p_star"] = detail::logreal_json(t.p_star);
        s["robin_omega"] = t.robin_omega;
        s["omega_cap"] = t.omega_cap;
        s["omega_lower"] = detail::opt_to_string(t.omega_lower);
        s["omega_upper"] = detail::opt_to_string(t.omega_upper);
        records.push_back(std::move(s));
        for (const ExceptionClass& c : t.classes) {
            nlohmann::json j;
            j["type"] = "exception-class";
            j["alpha"] = alphas[i].text;
            j["omega"] = c.omega;
            j["p_min"] = to_decimal(c.p_min);
            j["p_threshold"] = detail::logreal_json(c.p_threshold);
            j["is_exception"] = c.is_exception;
            j["mode"] = to_string(c.mode);
            records.push_back(std::move(j));
        }
        std::cout << "alpha " << alphas[i].text << " mode " << to_string(t.mode) << ": omega in ["
                  << detail::opt_to_string(t.omega_lower) << ", "
                  << detail::opt_to_string(t.omega_upper) << "], cap " << t.omega_cap
                  << ", p* = " << t.p_star.to_sci_string() << ", robin omega = "
                  << format_double(t.robin_omega) << "\n";
    }
    const std::string base = m.out_base.empty() ? "table1" : m.out_base;
    write_text_file(base + ".csv",
                    csv_table(meta, {"alpha", "omega_lower", "omega_upper", "mode"}, rows));
    write_text_file(base + ".jsonl", jsonl_records(meta, records));
    std::cout << "wrote " << base << ".csv and " << base << ".jsonl\n";
    return EXIT_OK;
}

inline int run_table2(const RunManifest& m, const BoundConfig& cfg, const ArtifactMeta& meta) {
    const auto alphas = detail::manifest_alphas(m, {"0.69", "0.68", "0.65", "0.6309"});
    std::vector<double> vals;
    for (const auto& a : alphas) vals.push_back(a.value);
    const std::vector<SieveTable> tables = sieve_exception_table(vals, cfg);

    std::vector<std::vector<std::string>> rows;
    std::vector<nlohmann::json> records;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        const SieveTable& t = tables[i];
        rows.push_back({alphas[i].text, detail::opt_to_string(t.omega_lower),
                        detail::opt_to_string(t.omega_upper), "sieve"});
        nlohmann::json s;
        s["type"] = "summary";
        s["alpha"] = alphas[i].text;
        s["mode"] = "sieve";
        s["p_star"] = detail::logreal_json(t.p_star);
        s["robin_omega"] = t.robin_omega;
        s["omega_cap"] = t.omega_cap;
        s["omega_lower"] = detail::opt_to_string(t.omega_lower);
        s["omega_upper"] = detail::opt_to_string(t.omega_upper);
        if (t.max_exception_threshold)
            s["max_exception_threshold"] = detail::logreal_json(*t.max_exception_threshold);
        records.push_back(std::move(s));
        for (const SieveClass& c : t.classes) {
            nlohmann::json j;
            j["type"] = "sieve-class";
            j["alpha"] = alphas[i].text;
            j["omega"] = c.omega;
            j["p_min"] = to_decimal(c.p_min);
            j["p_threshold"] = detail::logreal_json(c.p_threshold);
            j["is_exception"] = c.is_exception;
            j["chosen_s"] = c.chosen_s;  // 0 marks the omega=1 no-sieve fallback
            j["delta"] = c.delta;
            j["capital_delta"] = c.capital_delta;
            if (c.is_exception) {
                j["interval_lo"] = to_decimal(c.interval_lo);
                j["interval_hi"] =
                    to_decimal(detail::bigint_upper_from_log(c.p_threshold.log()));
            } else {
                j["interval_lo"] = "-";
                j["interval_hi"] = "-";
            }
            records.push_back(std::move(j));
        }
        std::cout << "alpha " << alphas[i].text << " sieve: omega in ["
                  << detail::opt_to_string(t.omega_lower) << ", "
                  << detail::opt_to_string(t.omega_upper) << "], cap " << t.omega_cap;
        if (t.max_exception_threshold)
            std::cout << ", max exception threshold = "
                      << t.max_exception_threshold->to_sci_string();
        std::cout << "\n";
    }
    const std::string base = m.out_base.empty() ? "table2" : m.out_base;
    write_text_file(base + ".csv",
                    csv_table(meta, {"alpha", "omega_lower", "omega_upper", "mode"}, rows));
    write_text_file(base + ".jsonl", jsonl_records(meta, records));
    std::cout << "wrote " << base << ".csv and " << base << ".jsonl\n";
    return EXIT_OK;
}

inline int run_compare_bounds(const RunManifest& m, const BoundConfig& cfg,
                              const ArtifactMeta& meta) {
    const auto alphas = detail::manifest_alphas(m, {"0.6", "0.63"});
    static const double LN10 = std::log(10.0);
    std::vector<std::vector<std::string>> rows;
    std::vector<nlohmann::json> records;
    const double c2 = cfg.burgess_constants.at(2).value;
    for (const AlphaSpec& a : alphas) {
        const auto cross = crossover_p(a.value, cfg);
        const LogReal p_small = LogReal::from_log(std::log(1.5e6));
        const LogReal p_large = LogReal::from_log(30 * LN10);
        const int r_small = best_burgess_r(a.value, p_small, cfg);
        const int r_large = best_burgess_r(a.value, p_large, cfg);
        rows.push_back({a.text, format_double(c2),
                        cross ? format_double(cross->log() / LN10) : "-",
                        std::to_string(r_small), std::to_string(r_large)});
        nlohmann::json j;
        j["type"] = "crossover";
        j["alpha"] = a.text;
        j["c2"] = c2;
        j["present"] = static_cast<bool>(cross);
        if (cross) j["crossover"] = detail::logreal_json(*cross);
        j["best_r_at_1p5e6"] = r_small;
        j["best_r_at_1e30"] = r_large;
        records.push_back(std::move(j));
        std::cout << "alpha " << a.text << ": crossover "
                  << (cross ? ("10^" + format_double(cross->log() / LN10)) : std::string("absent"))
                  << " (C(2) = " << format_double(c2) << "), best r at 1.5e6 = " << r_small
                  << ", at 1e30 = " << r_large << "\n";
    }
    const std::string base = m.out_base.empty() ? "compare-bounds" : m.out_base;
    write_text_file(base + ".csv",
                    csv_table(meta,
                              {"alpha", "c2", "crossover_log10_p", "best_r_at_1p5e6",
                               "best_r_at_1e30"},
                              rows));
    write_text_file(base + ".jsonl", jsonl_records(meta, records));
    std::cout << "wrote " << base << ".csv and " << base << ".jsonl\n";
    return EXIT_OK;
}

inline int run_tree_command(const RunManifest& m, const BoundConfig& cfg,
                            const ArtifactMeta& meta) {
    if (m.alpha_texts.size() != 1)
        throw config_error("tree: exactly one --alpha value is required");
    if (m.omega < 1) throw config_error("tree: --omega >= 1 is required");
    const AlphaSpec alpha = detail::manifest_alphas(m, {})[0];
    TreeOptions opt;
    opt.max_nodes = m.limit;  // --limit bounds the node budget here
    opt.enumeration_threshold = m.max_enum;
    opt.checkpoint_path = m.checkpoint_path;
    opt.resume_path = m.resume_path;
    opt.seed = m.seed;
    opt.config_hash = meta.config_hash;
    const TreeReport rep = run_tree(alpha, m.omega, cfg, opt);
    const std::string base = m.out_base.empty() ? "tree" : m.out_base;
    write_text_file(base + ".json", tree_report_to_json(rep).dump() + "\n");
    std::cout << "alpha " << rep.alpha_text << " omega " << rep.omega << ": " << rep.verdict
              << " (nodes " << rep.nodes_processed << ", candidates "
              << rep.candidates_enumerated << ", violations " << rep.violations
              << ", unresolved " << rep.unresolved << ", "
              << format_double(rep.elapsed_seconds) << " s)\n";
    std::cout << "wrote " << base << ".json\n";
    if (!rep.complete || rep.unresolved > 0) return EXIT_INCOMPLETE;
    return rep.violations > 0 ? EXIT_VIOLATION : EXIT_OK;
}

inline int run_verify_small(const RunManifest& m, const BoundConfig&, const ArtifactMeta& meta) {
    if (m.alpha_texts.size() != 1)
        throw config_error("verify-small: exactly one --alpha value is required");
    const AlphaSpec alpha = detail::manifest_alphas(m, {})[0];
    const std::uint64_t limit = m.limit ? m.limit : 1'000'000;
    const SmallScanResult res = verify_small(alpha, limit);
    std::vector<std::vector<std::string>> rows;
    for (const auto& [p, g] : res.violations)
        rows.push_back({std::to_string(p), std::to_string(g), alpha.text});
    const std::string base = m.out_base.empty() ? "verify-small" : m.out_base;
    write_text_file(base + ".csv", csv_table(meta, {"p", "least_root", "alpha"}, rows));
    std::cout << "alpha " << alpha.text << ", limit " << limit << ": scanned "
              << res.primes_scanned << " primes, " << res.violations.size() << " violation(s)";
    for (const auto& [p, g] : res.violations) std::cout << " (p=" << p << ", g=" << g << ")";
    std::cout << "\nwrote " << base << ".csv\n";
    return res.violations.empty() ? EXIT_OK : EXIT_VIOLATION;
}

inline int run_oracle_tests(const RunManifest& m, const BoundConfig&, const ArtifactMeta& meta) {
    const std::uint64_t pmax = std::min<std::uint64_t>(m.limit ? m.limit : 2000, 10'000);
    std::uint64_t indicator_checks = 0, efree_checks = 0, failures = 0;
    for (std::uint64_t p : primes_up_to(pmax)) {
        if (p == 2) continue;
        const CharacterTable table = build_character_table(p);
        for (std::uint64_t x = 1; x < p; ++x) {
            const double ind = primitive_root_indicator(x, table);
            const double truth = oracle::is_primitive_root(x, p) ? 1.0 : 0.0;
            ++indicator_checks;
            if (std::abs(ind - truth) > 1e-9) {
                ++failures;
                std::cout << "FAIL indicator p=" << p << " x=" << x << " value=" << ind << "\n";
            }
        }
        if (p < 500) {
            const oracle::EFreeOracle ef(p);
            for (std::uint64_t e = 2; e <= p - 1; e += 2) {
                if ((p - 1) % e != 0) continue;
                for (std::uint64_t x = 1; x < p; ++x) {
                    const double ind = efree_indicator(x, e, table);
                    const double truth = ef.is_e_free(x, e) ? 1.0 : 0.0;
                    ++efree_checks;
                    if (std::abs(ind - truth) > 1e-9) {
                        ++failures;
                        std::cout << "FAIL efree p=" << p << " e=" << e << " x=" << x
                                  << " value=" << ind << "\n";
                    }
                }
            }
        }
    }
    std::vector<nlohmann::json> records;
    nlohmann::json j;
    j["type"] = "oracle-summary";
    j["pmax"] = pmax;
    j["indicator_checks"] = indicator_checks;
    j["efree_checks"] = efree_checks;
    j["failures"] = failures;
    records.push_back(j);
    const std::string base = m.out_base.empty() ? "oracle-tests" : m.out_base;
    write_text_file(base + ".jsonl", jsonl_records(meta, records));
    std::cout << "oracle checks: " << indicator_checks << " indicator, " << efree_checks
              << " e-free, " << failures << " failure(s)\nwrote " << base << ".jsonl\n";
    return failures == 0 ? EXIT_OK : EXIT_VIOLATION;
}

inline int run_command(const RunManifest& m) {
    try {
        const BoundConfig cfg =
            m.config_path.empty() ? default_bound_config() : load_config(m.config_path);
        ArtifactMeta meta;
        meta.config_hash = config_hash(cfg);
        meta.seed = m.seed;
        meta.command = m.command;
        if (m.command == "table1") return run_table1(m, cfg, meta);
        if (m.command == "table2") return run_table2(m, cfg, meta);
        if (m.command == "compare-bounds") return run_compare_bounds(m, cfg, meta);
        if (m.command == "tree") return run_tree_command(m, cfg, meta);
        if (m.command == "verify-small") return run_verify_small(m, cfg, meta);
        if (m.command == "oracle-tests") return run_oracle_tests(m, cfg, meta);
        throw config_error("unknown command: " + m.command);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_CONFIG;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_CONFIG;
    }
}

}  // namespace primroot
