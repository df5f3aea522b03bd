#pragma once

// Orchestration of the verification suites behind the command line tool.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tame/denom.hpp"

namespace tame {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitConfig = 2, kExitInvariant = 3 };

struct RunConfig {
    /// Builtin name such as "A(2,1)" or a quiver file path.
    std::string quiver;
    /// 1-based comma-separated words; random words are drawn when empty.
    std::vector<std::string> words;
    int depth = 5;
    int window = 10;
    std::uint64_t rng_seed = 1;
    /// dimvec, denom, subfactor, crossval or all.
    std::string check = "all";
    /// JSON report path; empty writes to stdout.
    std::string out;
    /// Optional CSV inventory table.
    std::string csv;
    bool timing = false;
};

/// Throws ParseError on invalid settings.
void validate(const RunConfig& cfg);

bool is_builtin_name(const std::string& s);
Quiver resolve_quiver(const std::string& source);

/// Up to `count` words of length 1..max_len without immediate repeats.
std::vector<std::vector<int>> random_words(std::mt19937_64& rng, int n, int count, int max_len);

ordered_json config_json(const RunConfig& cfg);

std::vector<std::string> suites_for(const std::string& check);

/// Runs a single suite over an existing category.
VerificationReport run_suite(const std::string& suite, const ClusterCategory& cat, const RunConfig& cfg,
                             const std::vector<std::vector<int>>& words);

struct RunOutcome {
    int exit_code = kExitPass;
    /// Serialized report; empty when the run aborted.
    std::string report;
    std::string diagnostic;
};

/// Executes the configured suites and writes reports. Never throws.
RunOutcome run(const RunConfig& cfg);

}  // namespace tame
