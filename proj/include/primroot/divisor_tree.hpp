// Prime divisor tree: splits an exception class on "q divides p-1" vs
// "q does not", recomputes the sieve threshold per node, enumerates the
// residual arithmetic progressions, and verifies least primitive roots.
//
// A node's candidates are the primes p in [lo, hi] with k | p-1 and no
// excluded prime dividing p-1.  That set is a superset of the omega-class
// being cleared (omega(p-1) = n is not enforced during enumeration), which
// is sound: extra candidates only get verified, never skipped.
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "primroot/bigint.hpp"
#include "primroot/errors.hpp"
#include "primroot/factorization.hpp"
#include "primroot/logreal.hpp"
#include "primroot/power_bounds.hpp"
#include "primroot/primes.hpp"
#include "primroot/primitive_root.hpp"
#include "primroot/sieve.hpp"

namespace primroot {

enum class NodeStatus { open, closed_empty, closed_enumerated, branched };

inline const char* to_string(NodeStatus s) {
    switch (s) {
        case NodeStatus::open: return "open";
        case NodeStatus::closed_empty: return "closed-empty";
        case NodeStatus::closed_enumerated: return "closed-enumerated";
        case NodeStatus::branched: return "branched";
    }
    return "open";
}

struct TreeNode {
    unsigned depth = 0;
    std::vector<std::uint64_t> known_divisors{2};  // ascending; 2 is always present
    BigInt k = 2;                                  // product of known_divisors (squarefree)
    std::vector<std::uint64_t> excluded_primes;
    std::uint64_t next_prime = 3;
    unsigned omega_target = 0;
    BigInt lo, hi;
    NodeStatus status = NodeStatus::open;
    std::string path = "R";  // canonical key, e.g. "R.D3.X5"
};

namespace detail {

// Conservative BigInt upper bound for e^L (relative slack ~1e-12).
inline BigInt bigint_upper_from_log(double L) {
    L += std::abs(L) * 1e-12 + 1e-12;
    if (L < 1.0) return BigInt(3);
    static const double LN2 = std::log(2.0);
    if (L <= 62 * LN2)
        return BigInt(static_cast<std::uint64_t>(std::ceil(std::exp(L)))) + 1;
    const long long shift = static_cast<long long>(std::floor(L / LN2)) - 52;
    const double mant = std::exp(L - static_cast<double>(shift) * LN2);  // in [2^52, 2^53)
    return (BigInt(static_cast<std::uint64_t>(std::ceil(mant))) + 1) << shift;
}

}  // namespace detail

// Known divisors fixed, remaining omega slots filled with the smallest
// primes not yet decided (all primes below next_prime are already in
// known_divisors or excluded_primes).  Empty when the node already names
// more divisors than the class allows.
inline std::vector<std::uint64_t> worst_multiset(const TreeNode& node) {
    if (node.known_divisors.size() > node.omega_target) return {};
    std::vector<std::uint64_t> ms = node.known_divisors;
    std::uint64_t q = node.next_prime;
    while (ms.size() < node.omega_target) {
        if (std::find(node.excluded_primes.begin(), node.excluded_primes.end(), q) ==
            node.excluded_primes.end())
            ms.push_back(q);
        q = next_prime_u64(q);
    }
    std::sort(ms.begin(), ms.end());
    return ms;
}

// Tightens [lo, hi] from the node's worst-case sieve threshold and minimal
// admissible p-1 product; marks closed-empty when the bounds cross.  An
// infeasible sieve leaves the bounds untouched (conservative).
inline TreeNode recompute_interval(TreeNode node, double alpha, const BoundConfig& cfg) {
    if (node.status != NodeStatus::open) return node;
    if (node.known_divisors.size() > node.omega_target) {
        node.status = NodeStatus::closed_empty;
        return node;
    }
    const std::vector<std::uint64_t> ms = worst_multiset(node);
    BigInt minprod = 1;
    for (std::uint64_t q : ms) minprod *= q;
    try {
        const double c = detail::frozen_c(cfg);
        const SieveContext ctx = optimal_sieve_context(ms, c);
        const double L_u = detail::largest_root_threshold(alpha, sieve_rhs_log(ctx, c));
        node.hi = std::min(node.hi, detail::bigint_upper_from_log(L_u));
    } catch (const infeasible_sieve_error&) {
        // keep bounds unchanged
    }
    node.lo = std::max({node.lo, BigInt(cfg.verified_cutoff + 1), BigInt(minprod + 1)});
    if (node.lo > node.hi) node.status = NodeStatus::closed_empty;
    return node;
}

inline TreeNode make_tree_root(double alpha, unsigned omega, const BoundConfig& cfg) {
    if (omega < 1) throw argument_error("make_tree_root: omega must be >= 1");
    TreeNode root;
    root.omega_target = omega;
    root.lo = cfg.verified_cutoff + 1;
    LogReal p_u = LogReal::from_log(0.0);
    try {
        p_u = sieve_threshold(alpha, omega, cfg);
    } catch (const infeasible_sieve_error&) {
        p_u = per_omega_threshold(alpha, omega, cfg);
    }
    root.hi = detail::bigint_upper_from_log(p_u.log());
    return recompute_interval(std::move(root), alpha, cfg);
}

// Splits on whether next_prime divides p-1.  Both children advance to the
// following sequential prime and get recomputed intervals; divides-child
// first is the canonical order.
inline std::pair<TreeNode, TreeNode> branch(const TreeNode& node, double alpha,
                                            const BoundConfig& cfg) {
    if (node.status != NodeStatus::open) throw argument_error("branch: node must be open");
    const std::uint64_t q = node.next_prime;
    const std::uint64_t following = next_prime_u64(q);
    TreeNode divides = node;
    divides.depth += 1;
    divides.known_divisors.push_back(q);
    divides.k *= q;
    divides.next_prime = following;
    divides.path += ".D" + std::to_string(q);
    TreeNode excludes = node;
    excludes.depth += 1;
    excludes.excluded_primes.push_back(q);
    excludes.next_prime = following;
    excludes.path += ".X" + std::to_string(q);
    return {recompute_interval(std::move(divides), alpha, cfg),
            recompute_interval(std::move(excludes), alpha, cfg)};
}

struct EnumerationResult {
    bool must_branch = false;
    std::vector<BigInt> primes;
};

// (hi - lo) / k + 1 bounds the count of p = k m + 1 in [lo, hi] from
// above, so the 2x-padded comparison against the threshold can only
// over-trigger branching, never admit an oversized enumeration.
inline BigInt estimated_candidates(const TreeNode& node) {
    if (node.hi < node.lo) return 0;
    return (node.hi - node.lo) / node.k + 1;
}

inline EnumerationResult enumerate_candidates(const TreeNode& node,
                                              std::uint64_t enumeration_threshold,
                                              bool force = false) {
    EnumerationResult res;
    if (node.hi < node.lo) return res;
    if (!force && 2 * estimated_candidates(node) > enumeration_threshold) {
        res.must_branch = true;
        return res;
    }
    const BigInt m0 = (node.lo + node.k - 2) / node.k;  // least m with k m + 1 >= lo
    const BigInt m1 = (node.hi - 1) / node.k;
    std::uint64_t emitted = 0;
    for (BigInt m = m0; m <= m1; ++m) {
        bool skip = false;
        for (std::uint64_t q : node.excluded_primes)
            if (m % q == 0) {  // q never divides the squarefree k, so q | p-1 iff q | m
                skip = true;
                break;
            }
        if (skip) continue;
        const BigInt p = node.k * m + 1;
        if (!is_prime(p)) continue;
        res.primes.push_back(p);
        // Defensive re-branch: unreachable while the estimate is a true
        // upper bound, kept as a guard against estimator regressions.
        if (!force && ++emitted > enumeration_threshold) {
            res.must_branch = true;
            res.primes.clear();
            return res;
        }
    }
    return res;
}

struct ExceptionRecord {
    BigInt p;
    BigInt least_root;
    BigInt bound;  // floor(p^alpha)
    bool within_bound = false;
    bool resolved = true;  // false when p-1 resisted factorization
};

namespace detail {

// p-1 = k*m with k's prime divisors known: strip those first (with
// multiplicity), then factor only the desk-scale cofactor.
inline PrimeFactorization factor_with_known(const BigInt& n,
                                            const std::vector<std::uint64_t>& known,
                                            const FactorOptions& fopt) {
    std::map<BigInt, unsigned> acc;
    BigInt rem = n;
    if (fits_u64(rem)) {
        std::uint64_t r = to_u64(rem);
        for (std::uint64_t q : known)
            while (r % q == 0) {
                acc[BigInt(q)] += 1;
                r /= q;
            }
        rem = r;
    } else {
        for (std::uint64_t q : known)
            while (rem % q == 0) {
                acc[BigInt(q)] += 1;
                rem /= q;
            }
    }
    if (rem > 1)
        for (const auto& [q, e] : factorize(rem, fopt).factors) acc[q] += e;
    PrimeFactorization f;
    f.value = n;
    f.factors.assign(acc.begin(), acc.end());
    return f;
}

}  // namespace detail

// Verifies each candidate directly: least primitive root vs floor(p^alpha).
// Factorization failures are recorded as unresolved, never dropped.
inline std::vector<ExceptionRecord> verify_candidates(
    const std::vector<BigInt>& primes, const AlphaSpec& alpha, const FactorOptions& fopt = {},
    const std::vector<std::uint64_t>& known_divisors = {}) {
    std::vector<ExceptionRecord> out;
    out.reserve(primes.size());
    for (const BigInt& p : primes) {
        ExceptionRecord rec;
        rec.p = p;
        rec.bound = floor_pow(p, alpha);
        try {
            rec.least_root =
                least_primitive_root(p, detail::factor_with_known(p - 1, known_divisors, fopt));
            rec.within_bound = rec.least_root < rec.bound;
        } catch (const factor_error&) {
            rec.resolved = false;
        }
        out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(),
              [](const ExceptionRecord& a, const ExceptionRecord& b) { return a.p < b.p; });
    return out;
}

struct TreeOptions {
    std::uint64_t max_nodes = 0;   // 0 -> BoundConfig::tree_max_nodes
    std::uint64_t wall_ms = 0;     // 0 -> BoundConfig::tree_wall_ms (0 = unlimited)
    std::uint64_t enumeration_threshold = 0;  // 0 -> BoundConfig value
    std::uint64_t checkpoint_every = 1000;
    std::string checkpoint_path;  // empty = no checkpointing
    std::string resume_path;      // empty = fresh run
    std::uint64_t seed = 1;
    std::string config_hash;  // embedded in checkpoints and validated on resume
    // Within-bound records beyond this many are counted but not stored;
    // violations and unresolved records are always kept in full.
    std::uint64_t record_cap = 100'000;
};

struct TreeReport {
    std::string alpha_text;
    unsigned omega = 0;
    std::uint64_t seed = 1;
    std::string config_hash;
    std::uint64_t nodes_processed = 0;
    std::uint64_t nodes_branched = 0;
    std::uint64_t nodes_closed_empty = 0;
    std::uint64_t nodes_closed_enumerated = 0;
    std::uint64_t candidates_enumerated = 0;
    std::vector<ExceptionRecord> records;  // ascending p
    std::uint64_t records_dropped = 0;     // within-bound records past the cap
    std::uint64_t violations = 0;          // records with within_bound = false
    std::uint64_t unresolved = 0;
    bool complete = false;
    std::string verdict;  // complete-no-violations | complete-violations-found |
                          // complete-with-unresolved | incomplete-budget-exhausted
    double elapsed_seconds = 0.0;  // informational; never serialized
};

namespace detail {

inline nlohmann::json node_to_json(const TreeNode& n) {
    nlohmann::json j;
    j["depth"] = n.depth;
    j["known_divisors"] = n.known_divisors;
    j["excluded_primes"] = n.excluded_primes;
    j["next_prime"] = n.next_prime;
    j["omega_target"] = n.omega_target;
    j["lo"] = to_decimal(n.lo);
    j["hi"] = to_decimal(n.hi);
    j["status"] = to_string(n.status);
    j["path"] = n.path;
    return j;
}

inline TreeNode node_from_json(const nlohmann::json& j) {
    TreeNode n;
    n.depth = j.at("depth").get<unsigned>();
    n.known_divisors = j.at("known_divisors").get<std::vector<std::uint64_t>>();
    n.excluded_primes = j.at("excluded_primes").get<std::vector<std::uint64_t>>();
    n.next_prime = j.at("next_prime").get<std::uint64_t>();
    n.omega_target = j.at("omega_target").get<unsigned>();
    n.lo = BigInt(j.at("lo").get<std::string>());
    n.hi = BigInt(j.at("hi").get<std::string>());
    n.path = j.at("path").get<std::string>();
    n.k = 1;
    for (std::uint64_t q : n.known_divisors) n.k *= q;
    const std::string st = j.at("status").get<std::string>();
    n.status = st == "closed-empty"        ? NodeStatus::closed_empty
               : st == "closed-enumerated" ? NodeStatus::closed_enumerated
               : st == "branched"          ? NodeStatus::branched
                                           : NodeStatus::open;
    return n;
}

inline nlohmann::json record_to_json(const ExceptionRecord& r) {
    nlohmann::json j;
    j["p"] = to_decimal(r.p);
    j["least_root"] = to_decimal(r.least_root);
    j["bound"] = to_decimal(r.bound);
    j["within_bound"] = r.within_bound;
    j["resolved"] = r.resolved;
    return j;
}

inline ExceptionRecord record_from_json(const nlohmann::json& j) {
    ExceptionRecord r;
    r.p = BigInt(j.at("p").get<std::string>());
    r.least_root = BigInt(j.at("least_root").get<std::string>());
    r.bound = BigInt(j.at("bound").get<std::string>());
    r.within_bound = j.at("within_bound").get<bool>();
    r.resolved = j.at("resolved").get<bool>();
    return r;
}

}  // namespace detail

// Checkpoint layout: one meta line, then record lines, then the open DFS
// stack bottom-to-top, one node per line.
inline void write_checkpoint(const std::string& path, const TreeReport& rep,
                             const std::vector<TreeNode>& stack) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw argument_error("write_checkpoint: cannot open " + path);
    nlohmann::json meta;
    meta["type"] = "meta";
    meta["alpha"] = rep.alpha_text;
    meta["omega"] = rep.omega;
    meta["seed"] = rep.seed;
    meta["config_hash"] = rep.config_hash;
    meta["nodes_processed"] = rep.nodes_processed;
    meta["nodes_branched"] = rep.nodes_branched;
    meta["nodes_closed_empty"] = rep.nodes_closed_empty;
    meta["nodes_closed_enumerated"] = rep.nodes_closed_enumerated;
    meta["candidates_enumerated"] = rep.candidates_enumerated;
    meta["records_dropped"] = rep.records_dropped;
    out << meta.dump() << '\n';
    for (const ExceptionRecord& r : rep.records) {
        nlohmann::json j = detail::record_to_json(r);
        j["type"] = "record";
        out << j.dump() << '\n';
    }
    for (const TreeNode& n : stack) {
        nlohmann::json j = detail::node_to_json(n);
        j["type"] = "node";
        out << j.dump() << '\n';
    }
}

inline void read_checkpoint(const std::string& path, TreeReport& rep,
                            std::vector<TreeNode>& stack) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw argument_error("read_checkpoint: cannot open " + path);
    std::string line;
    bool have_meta = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        const std::string type = j.at("type").get<std::string>();
        if (type == "meta") {
            if (j.at("alpha").get<std::string>() != rep.alpha_text ||
                j.at("omega").get<unsigned>() != rep.omega)
                throw config_error("read_checkpoint: checkpoint is for a different run");
            if (!rep.config_hash.empty() && !j.at("config_hash").get<std::string>().empty() &&
                j.at("config_hash").get<std::string>() != rep.config_hash)
                throw config_error("read_checkpoint: config hash mismatch");
            rep.seed = j.at("seed").get<std::uint64_t>();
            rep.nodes_processed = j.at("nodes_processed").get<std::uint64_t>();
            rep.nodes_branched = j.at("nodes_branched").get<std::uint64_t>();
            rep.nodes_closed_empty = j.at("nodes_closed_empty").get<std::uint64_t>();
            rep.nodes_closed_enumerated = j.at("nodes_closed_enumerated").get<std::uint64_t>();
            rep.candidates_enumerated = j.at("candidates_enumerated").get<std::uint64_t>();
            rep.records_dropped = j.value("records_dropped", std::uint64_t{0});
            have_meta = true;
        } else if (type == "record") {
            rep.records.push_back(detail::record_from_json(j));
        } else if (type == "node") {
            stack.push_back(detail::node_from_json(j));
        }
    }
    if (!have_meta) throw config_error("read_checkpoint: missing meta line in " + path);
}

// Depth-first traversal, divides-child first.  Every popped open node is
// either closed empty, enumerated and verified, or branched.  Budget
// exhaustion checkpoints the frontier and reports incomplete.
inline TreeReport run_tree(const AlphaSpec& alpha, unsigned omega, const BoundConfig& cfg,
                           const TreeOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t max_nodes = opt.max_nodes ? opt.max_nodes : cfg.tree_max_nodes;
    const std::uint64_t wall_ms = opt.wall_ms ? opt.wall_ms : cfg.tree_wall_ms;
    const std::uint64_t enum_threshold =
        opt.enumeration_threshold ? opt.enumeration_threshold : cfg.enumeration_threshold;
    FactorOptions fopt;
    fopt.seed = opt.seed;

    TreeReport rep;
    rep.alpha_text = alpha.text;
    rep.omega = omega;
    rep.seed = opt.seed;
    rep.config_hash = opt.config_hash;
    std::vector<TreeNode> stack;
    if (!opt.resume_path.empty())
        read_checkpoint(opt.resume_path, rep, stack);
    else
        stack.push_back(make_tree_root(alpha.value, omega, cfg));
    std::uint64_t kept_within = 0;
    for (const ExceptionRecord& r : rep.records)
        if (r.resolved && r.within_bound) kept_within += 1;

    bool budget_hit = false;
    while (!stack.empty()) {
        if (rep.nodes_processed >= max_nodes) {
            budget_hit = true;
            break;
        }
        if (wall_ms > 0) {
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
            if (static_cast<std::uint64_t>(ms) >= wall_ms) {
                budget_hit = true;
                break;
            }
        }
        TreeNode node = std::move(stack.back());
        stack.pop_back();
        node = recompute_interval(std::move(node), alpha.value, cfg);
        rep.nodes_processed += 1;
        if (node.status == NodeStatus::closed_empty) {
            rep.nodes_closed_empty += 1;
        } else {
            const bool forced = node.known_divisors.size() == node.omega_target;
            EnumerationResult res = enumerate_candidates(node, enum_threshold, forced);
            if (res.must_branch) {
                auto [divides, excludes] = branch(node, alpha.value, cfg);
                rep.nodes_branched += 1;
                stack.push_back(std::move(excludes));
                stack.push_back(std::move(divides));  // popped first: divides-first order
            } else {
                std::vector<ExceptionRecord> recs =
                    verify_candidates(res.primes, alpha, fopt, node.known_divisors);
                rep.candidates_enumerated += res.primes.size();
                rep.nodes_closed_enumerated += 1;
                for (ExceptionRecord& r : recs) {
                    if (r.resolved && r.within_bound && kept_within >= opt.record_cap) {
                        rep.records_dropped += 1;
                        continue;
                    }
                    if (r.resolved && r.within_bound) kept_within += 1;
                    rep.records.push_back(std::move(r));
                }
            }
        }
        if (!opt.checkpoint_path.empty() && rep.nodes_processed % opt.checkpoint_every == 0)
            write_checkpoint(opt.checkpoint_path, rep, stack);
    }

    std::sort(rep.records.begin(), rep.records.end(),
              [](const ExceptionRecord& a, const ExceptionRecord& b) { return a.p < b.p; });
    for (const ExceptionRecord& r : rep.records) {
        if (!r.resolved)
            rep.unresolved += 1;
        else if (!r.within_bound)
            rep.violations += 1;
    }
    rep.complete = !budget_hit;
    if (budget_hit) {
        if (!opt.checkpoint_path.empty()) write_checkpoint(opt.checkpoint_path, rep, stack);
        rep.verdict = "incomplete-budget-exhausted";
    } else if (rep.unresolved > 0) {
        rep.verdict = "complete-with-unresolved";
    } else if (rep.violations > 0) {
        rep.verdict = "complete-violations-found";
    } else {
        rep.verdict = "complete-no-violations";
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// Report file: JSON object with summary fields plus the records array;
// timing is deliberately excluded so identical runs serialize identically.
inline nlohmann::json tree_report_to_json(const TreeReport& rep) {
    nlohmann::json j;
    j["type"] = "tree-report";
    j["alpha"] = rep.alpha_text;
    j["omega"] = rep.omega;
    j["seed"] = rep.seed;
    j["config_hash"] = rep.config_hash;
    j["nodes_processed"] = rep.nodes_processed;
    j["nodes_branched"] = rep.nodes_branched;
    j["nodes_closed_empty"] = rep.nodes_closed_empty;
    j["nodes_closed_enumerated"] = rep.nodes_closed_enumerated;
    j["candidates_enumerated"] = rep.candidates_enumerated;
    j["records_dropped"] = rep.records_dropped;
    j["violations"] = rep.violations;
    j["unresolved"] = rep.unresolved;
    j["complete"] = rep.complete;
    j["verdict"] = rep.verdict;
    j["records"] = nlohmann::json::array();
    for (const ExceptionRecord& r : rep.records) j["records"].push_back(detail::record_to_json(r));
    return j;
}

}  // namespace primroot
