#pragma once

// Denominator vectors from the cluster category, paired against symbolic
// expansions, and the two injectivity harnesses.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tame/laurent.hpp"
#include "tame/tilting.hpp"

namespace tame {

using ordered_json = nlohmann::ordered_json;

/// Throws MIsShiftedSummand when M is some Sigma T_i.
std::vector<int> denominator_from_category(const ClusterCategory& cat, const ClusterTiltingObject& t, const IndRigidObject& m);

struct LabeledVector {
    std::string label;
    std::vector<int> vec;
};

/// Index pairs (i < j) with equal vectors, in order.
std::vector<std::pair<std::size_t, std::size_t>> find_coincidences(const std::vector<LabeledVector>& items);

struct VerificationReport {
    std::string name;
    ordered_json parameters = ordered_json::object();
    ordered_json counts = ordered_json::object();
    std::vector<ordered_json> violations;
    /// Cases outside the covered hypotheses; never failures.
    std::vector<ordered_json> uncovered;
    int window_used = 0;
    std::optional<double> timing_ms;

    bool passed() const { return violations.empty(); }
    std::string status() const { return passed() ? "PASS" : "FAIL"; }
    ordered_json to_json() const;
};

/// Applies a word to a cluster-tilting object, growing the window up to
/// max_window as needed. Updates *window_used with the largest window used.
ClusterTiltingObject mutate_ct_along(const ClusterCategory& cat, ClusterTiltingObject t, const std::vector<int>& word,
                                     int window, int max_window, int* window_used = nullptr);

/// A cluster variable reached from the re-rooted seed together with the
/// object paired to it by simultaneous mutation.
struct PairedVariable {
    std::vector<int> word;
    int index = 0;
    IndRigidObject object;
    LaurentPolynomial expansion;
    std::vector<int> symbolic;
};

/// Variables within `depth` of mu_word(initial seed), expanded in that
/// seed's cluster, each paired with Sigma of the matching summand of
/// mu_word({P_i}) mutated along the same path.
struct PairingRun {
    ClusterTiltingObject rerooted;
    std::vector<PairedVariable> variables;
    int window_used = 0;
};

PairingRun paired_variables(const ClusterCategory& cat, const std::vector<int>& word, int depth, int window);

VerificationReport verify_distinct_dimvectors(const ClusterCategory& cat, const std::vector<std::vector<int>>& words, int window);

VerificationReport verify_weak_denominator(const ClusterCategory& cat, const std::vector<int>& word, int depth, int window);

}  // namespace tame
