#pragma once

// Seeds, the exchange relation and bounded exploration of the exchange graph.

#include <memory>
#include <vector>

#include "tame/laurent.hpp"
#include "tame/quiver.hpp"

namespace tame {

using Variable = std::shared_ptr<const LaurentPolynomial>;

struct Seed {
    ExchangeMatrix b;
    /// Expansions in the root seed's variables.
    std::vector<Variable> cluster;
    /// Mutation word from the root, 0-based.
    std::vector<int> history;

    /// Cluster of free variables x_1..x_n over b.
    static Seed initial(const ExchangeMatrix& b);

    int size() const { return b.size(); }
    const LaurentPolynomial& variable(int i) const { return *cluster[i]; }
};

/// Equality of matrix and cluster; history is ignored.
bool operator==(const Seed& a, const Seed& b);

/// Throws IndexError for k out of range; propagates InexactDivision.
Seed mutate_seed(const Seed& s, int k);
Seed mutate_along(const Seed& s, const std::vector<int>& word);

struct Exploration {
    /// One entry per word of length <= depth without immediate repeats,
    /// sorted lexicographically by word.
    std::vector<Seed> seeds;
    /// Distinct cluster variables, sorted by canonical form.
    std::vector<LaurentPolynomial> variables;
    /// Number of distinct labeled seeds actually mutated.
    std::size_t distinct_seeds = 0;
};

Exploration explore(const Seed& root, int depth);

/// Re-roots at `s` (reached from `root` along s.history) with fresh
/// variables and replays the reversed history. Returns true when the
/// result, expanded back through s's cluster, gives root's cluster.
bool rerooting_consistent(const Seed& root, const Seed& s);

}  // namespace tame
