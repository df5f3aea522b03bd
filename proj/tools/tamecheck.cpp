// Command line front end for the verification suites.

#include <iostream>

#include <CLI11.hpp>

#include "tame/runner.hpp"

int main(int argc, char** argv) {
    tame::RunConfig cfg;
    CLI::App app{"Verification harness for cluster categories of tame type"};
    app.add_option("--quiver", cfg.quiver, "Builtin A(p,q), D(n), E6, E7, E8 or a quiver file")->required();
    app.add_option("--word,--words", cfg.words, "Mutation word, 1-based and comma separated; repeatable");
    app.add_option("--depth", cfg.depth, "Exploration depth from the re-rooted seed");
    app.add_option("--window", cfg.window, "Enumeration window in tau-steps");
    app.add_option("--rng", cfg.rng_seed, "Seed for random words and generic representations");
    app.add_option("--check", cfg.check, "Suite to run")->check(CLI::IsMember({"dimvec", "denom", "subfactor", "crossval", "all"}));
    app.add_option("--out", cfg.out, "JSON report path (stdout when omitted)");
    app.add_option("--csv", cfg.csv, "Inventory table with dimension and denominator vectors");
    app.add_flag("--timing", cfg.timing, "Record wall-clock time per suite");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : tame::kExitConfig;
    }

    const tame::RunOutcome outcome = tame::run(cfg);
    if (!outcome.diagnostic.empty()) std::cerr << "tamecheck: " << outcome.diagnostic << '\n';
    if (cfg.out.empty()) std::cout << outcome.report;
    return outcome.exit_code;
}
