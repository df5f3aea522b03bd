#include "tame/runner.hpp"

#include <chrono>
#include <regex>

#include "tame/errors.hpp"
#include "tame/report.hpp"
#include "tame/seeds.hpp"
#include "tame/subfactor.hpp"
#include "tame/tubes.hpp"

namespace tame {

namespace {

const std::vector<std::string> kSuites = {"dimvec", "denom", "subfactor", "crossval"};

std::string word_string(const std::vector<int>& w) { return w.empty() ? "()" : format_word(w); }

ordered_json violation(const std::string& kind, const std::string& detail) {
    ordered_json v;
    v["kind"] = kind;
    v["detail"] = detail;
    return v;
}

VerificationReport subfactor_suite(const ClusterCategory& cat, const RunConfig& cfg) {
    VerificationReport rep;
    rep.name = "subfactor";
    rep.window_used = 2 * cfg.window;
    rep.parameters["window"] = cfg.window;
    std::vector<IndRigidObject> deletions;
    if (cat.is_affine())
        for (const auto& tube : cat.tubes())
            for (int b = 1; b < tube.rank; ++b)
                for (int a = 1; a <= tube.rank; ++a) deletions.push_back(IndRigidObject::regular(tube.id, a, b));
    for (int i = 0; i < cat.size(); ++i) deletions.push_back(IndRigidObject::preprojective(i, 0));

    std::size_t checks = 0, covered = 0;
    for (const auto& z : deletions) {
        try {
            const SubfactorReport sr = classify_subfactor(cat, z, cfg.window);
            ++covered;
            if (sr.finite_type) rep.window_used = std::max(rep.window_used, 2 * sr.window);
            for (const auto& c : sr.checks) {
                ++checks;
                if (c.pass) continue;
                ordered_json v;
                v["kind"] = c.name;
                v["deleted"] = z.label();
                v["detail"] = c.detail;
                rep.violations.push_back(std::move(v));
            }
        } catch (const UncoveredCase& e) {
            ordered_json u;
            u["kind"] = "UncoveredCase";
            u["deleted"] = z.label();
            u["detail"] = e.what();
            rep.uncovered.push_back(std::move(u));
        }
    }
    rep.counts["deletions"] = deletions.size();
    rep.counts["covered"] = covered;
    rep.counts["uncovered"] = rep.uncovered.size();
    rep.counts["checks"] = checks;
    return rep;
}

VerificationReport crossval_suite(const ClusterCategory& cat, const RunConfig& cfg, const std::vector<std::vector<int>>& words) {
    VerificationReport rep;
    rep.name = "crossval";
    rep.window_used = cfg.window;
    rep.parameters["window"] = cfg.window;
    rep.parameters["depth"] = cfg.depth;

    // Tube combinatorics against representation-level linear algebra.
    std::size_t tube_pairs = 0;
    if (cat.is_affine()) {
        for (const auto& tube : cat.tubes()) {
            const int d = tube.rank;
            std::vector<TubeCoord> coords;
            for (int b = 1; b <= d + 1; ++b)
                for (int a = 1; a <= d; ++a) coords.push_back({tube.id, a, b});
            for (const auto& x : coords)
                for (const auto& y : coords) {
                    const auto X = IndRigidObject::regular(x.tube, x.a, x.b);
                    const auto Y = IndRigidObject::regular(y.tube, y.a, y.b);
                    ++tube_pairs;
                    const auto lm = static_cast<std::int64_t>(cat.hom_dim_mod(X, Y));
                    const auto lc = static_cast<std::int64_t>(cat.hom_dim_C(X, Y));
                    const auto dm = tube_hom_dim_mod(x, y, d);
                    const auto dc = tube_hom_dim_C(x, y, d);
                    if (lm != dm || lc != dc)
                        rep.violations.push_back(violation(
                            "tube-oracle", to_string(x) + " -> " + to_string(y) + ": linear algebra " + std::to_string(lm) + "/" +
                                               std::to_string(lc) + ", tube formula " + std::to_string(dm) + "/" + std::to_string(dc)));
                }
        }
    }

    // Ext symmetry and endomorphism dimensions over the inventory.
    const auto inventory = cat.enumerate_rigid(cfg.window);
    std::size_t cy_pairs = 0;
    for (std::size_t i = 0; i < inventory.size(); ++i) {
        const auto& x = inventory[i];
        const std::size_t end = cat.hom_dim_C(x, x);
        bool expect_brick = true;
        if (x.is_regular()) expect_brick = x.coord.b <= cat.tube_rank(x.coord.tube) - 2;
        if ((end == 1) != expect_brick)
            rep.violations.push_back(violation("endomorphisms", x.label() + " has End_C of dimension " + std::to_string(end)));
        for (std::size_t j = i; j < inventory.size(); ++j) {
            const auto& y = inventory[j];
            ++cy_pairs;
            const auto a = cat.ext1_dim_C(x, y);
            const auto b = cat.ext1_dim_C(y, x);
            if (a != b)
                rep.violations.push_back(violation("ext-symmetry", x.label() + ", " + y.label() + ": " + std::to_string(a) +
                                                                       " vs " + std::to_string(b)));
        }
    }

    // Compatibility identity against exchange pairs of transjective objects.
    std::size_t pairs = 0, compat = 0;
    std::vector<std::vector<int>> bases = {{}};
    bases.insert(bases.end(), words.begin(), words.end());
    for (const auto& w : bases) {
        const ClusterTiltingObject t = mutate_ct_along(cat, base_cluster_tilting(cat), w, cfg.window, 4 * cfg.window,
                                                       &rep.window_used);
        for (int k = 0; k < t.size(); ++k) {
            int used = cfg.window;
            const Mutation mu = mutate_ct_growing(cat, t, k, cfg.window, 4 * cfg.window, &used);
            rep.window_used = std::max(rep.window_used, used);
            const ExchangePair ep = exchange_pair(t, mu, k);
            if (!ep.x.is_transjective() || !ep.x_star.is_transjective()) continue;
            ++pairs;
            for (const auto& m : inventory) {
                ++compat;
                const CompatibilityResult r = exchange_compatibility_check(cat, ep, m);
                if (!r.compatible)
                    rep.violations.push_back(violation(
                        "compatibility", m.label() + " against (" + ep.x.label() + ", " + ep.x_star.label() + ") at word " +
                                             word_string(w) + ": " + std::to_string(r.lhs) + " vs max(" +
                                             std::to_string(r.hom_b) + ", " + std::to_string(r.hom_b_prime) + ")"));
            }
        }
    }

    // Laurent phenomenon, sign of denominators, and re-rooting.
    const Seed root = Seed::initial(ExchangeMatrix(cat.quiver().exchange_matrix()));
    std::size_t variables = 0;
    try {
        const Exploration ex = explore(root, cfg.depth);
        variables = ex.variables.size();
        for (const auto& p : ex.variables) {
            const auto d = denominator_vector(p);
            const bool initial = std::count(d.begin(), d.end(), -1) == 1 && std::count(d.begin(), d.end(), 0) == cat.size() - 1;
            if (!initial && std::any_of(d.begin(), d.end(), [](int e) { return e < 0; }))
                rep.violations.push_back(violation("denominator-sign", p.to_string()));
        }
        for (std::size_t i = 0; i < ex.seeds.size(); i += std::max<std::size_t>(1, ex.seeds.size() / 8))
            if (!rerooting_consistent(root, ex.seeds[i]))
                rep.violations.push_back(violation("rerooting", "word " + word_string(ex.seeds[i].history)));
    } catch (const InexactDivision& e) {
        rep.violations.push_back(violation("laurent", e.what()));
    }

    rep.counts["tubePairs"] = tube_pairs;
    rep.counts["rigidObjects"] = inventory.size();
    rep.counts["symmetryPairs"] = cy_pairs;
    rep.counts["exchangePairs"] = pairs;
    rep.counts["compatibilityChecks"] = compat;
    rep.counts["variables"] = variables;
    return rep;
}

}  // namespace

bool is_builtin_name(const std::string& s) {
    static const std::regex re(R"(\s*(A\s*\(\s*\d+\s*,\s*\d+\s*\)|D\s*\(\s*\d+\s*\)|E[678])\s*)");
    return std::regex_match(s, re);
}

Quiver resolve_quiver(const std::string& source) {
    if (is_builtin_name(source)) return builtin_quiver(source);
    return load_quiver_file(source);
}

void validate(const RunConfig& cfg) {
    if (cfg.quiver.empty()) throw ParseError("no quiver given");
    if (cfg.depth < 0) throw ParseError("depth must be >= 0");
    if (cfg.window < 0) throw ParseError("window must be >= 0");
    suites_for(cfg.check);
}

std::vector<std::string> suites_for(const std::string& check) {
    if (check == "all") return kSuites;
    if (std::find(kSuites.begin(), kSuites.end(), check) != kSuites.end()) return {check};
    throw ParseError("unknown check '" + check + "'");
}

std::vector<std::vector<int>> random_words(std::mt19937_64& rng, int n, int count, int max_len) {
    std::vector<std::vector<int>> out;
    if (n < 1 || max_len < 1) return out;
    std::uniform_int_distribution<int> len(1, max_len);
    for (int c = 0; c < count; ++c) {
        std::vector<int> w;
        const int l = len(rng);
        while (static_cast<int>(w.size()) < l) {
            const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            if (!w.empty() && w.back() == k) {
                if (n == 1) break;
                continue;
            }
            w.push_back(k);
        }
        out.push_back(std::move(w));
    }
    return out;
}

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["quiver"] = cfg.quiver;
    j["words"] = cfg.words;
    j["depth"] = cfg.depth;
    j["window"] = cfg.window;
    j["rngSeed"] = cfg.rng_seed;
    j["check"] = cfg.check;
    return j;
}

VerificationReport run_suite(const std::string& suite, const ClusterCategory& cat, const RunConfig& cfg,
                             const std::vector<std::vector<int>>& words) {
    if (suite == "dimvec") {
        std::vector<std::vector<int>> all = {{}};
        all.insert(all.end(), words.begin(), words.end());
        return verify_distinct_dimvectors(cat, all, cfg.window);
    }
    if (suite == "denom") {
        std::vector<VerificationReport> parts;
        parts.push_back(verify_weak_denominator(cat, {}, cfg.depth, cfg.window));
        for (const auto& w : words) parts.push_back(verify_weak_denominator(cat, w, cfg.depth, cfg.window));
        return merge_reports("denom", parts);
    }
    if (suite == "subfactor") return subfactor_suite(cat, cfg);
    if (suite == "crossval") return crossval_suite(cat, cfg, words);
    throw ParseError("unknown check '" + suite + "'");
}

RunOutcome run(const RunConfig& cfg) {
    RunOutcome outcome;
    std::optional<Quiver> q;
    std::vector<std::vector<int>> words;
    std::mt19937_64 rng(cfg.rng_seed);
    try {
        validate(cfg);
        q = resolve_quiver(cfg.quiver);
        if (!q->is_acyclic()) throw ParseError("quiver has an oriented cycle");
        if (!q->is_connected()) throw ParseError("quiver is not connected");
        for (const auto& w : cfg.words) words.push_back(parse_word(w, q->size()));
    } catch (const ParseError& e) {
        outcome.exit_code = kExitConfig;
        outcome.diagnostic = e.what();
        return outcome;
    } catch (const Error& e) {
        outcome.exit_code = kExitConfig;
        outcome.diagnostic = e.what();
        return outcome;
    } catch (const std::exception& e) {
        outcome.exit_code = kExitInvariant;
        outcome.diagnostic = e.what();
        return outcome;
    }

    try {
        if (words.empty()) words = random_words(rng, q->size(), 10, 6);
        const ClusterCategory cat(*q, rng());
        ordered_json report;
        report["config"] = config_json(cfg);
        ordered_json drawn = ordered_json::array();
        for (const auto& w : words) drawn.push_back(word_string(w));
        report["config"]["effectiveWords"] = drawn;
        report["suites"] = ordered_json::array();
        bool all_pass = true;
        for (const auto& name : suites_for(cfg.check)) {
            const auto t0 = std::chrono::steady_clock::now();
            VerificationReport r = run_suite(name, cat, cfg, words);
            if (cfg.timing)
                r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            all_pass = all_pass && r.passed();
            report["suites"].push_back(r.to_json());
        }
        report["status"] = all_pass ? "PASS" : "FAIL";
        outcome.report = report.dump(2) + "\n";
        if (!cfg.out.empty()) write_file_atomic(cfg.out, outcome.report);
        if (!cfg.csv.empty()) {
            const ClusterTiltingObject t = mutate_ct_along(cat, base_cluster_tilting(cat), words.empty() ? std::vector<int>{} : words.front(),
                                                           cfg.window, 4 * cfg.window);
            write_file_atomic(cfg.csv, inventory_csv(cat, t, cfg.window));
        }
        outcome.exit_code = all_pass ? kExitPass : kExitFail;
    } catch (const NotExtendedDynkin& e) {
        outcome.exit_code = kExitConfig;
        outcome.diagnostic = e.what();
    } catch (const std::exception& e) {
        outcome.exit_code = kExitInvariant;
        outcome.diagnostic = e.what();
        outcome.report.clear();
    }
    return outcome;
}

}  // namespace tame
