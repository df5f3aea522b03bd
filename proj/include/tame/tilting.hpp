#pragma once

// Cluster-tilting objects, their mutation and the dimension vectors of
// tau-rigid modules over the corresponding cluster-tilted algebras.

#include <string>
#include <utility>
#include <vector>

#include "tame/repcat.hpp"

namespace tame {

struct ClusterTiltingObject {
    std::vector<IndRigidObject> summands;
    /// Exchange matrix mutated alongside the summands.
    ExchangeMatrix matrix;
    /// Mutation word from the base object, 0-based.
    std::vector<int> word;

    int size() const { return static_cast<int>(summands.size()); }
    std::string describe() const;
};

/// {P_1, ..., P_n} carrying B(Q).
ClusterTiltingObject base_cluster_tilting(const ClusterCategory& cat);

struct TiltingCertificate {
    bool ok = false;
    std::string reason;
    /// Pairs (i, j) with Hom_C(X_i, Sigma X_j) != 0.
    std::vector<std::pair<int, int>> violations;
};

TiltingCertificate is_cluster_tilting(const ClusterCategory& cat, const std::vector<IndRigidObject>& objs);

struct Mutation {
    ClusterTiltingObject result;
    IndRigidObject removed;
    IndRigidObject inserted;
};

/// Replaces summand k by its other complement, searched over
/// enumerate_rigid(window). Throws WindowExhausted or AmbiguousComplement.
Mutation mutate_ct(const ClusterCategory& cat, const ClusterTiltingObject& t, int k, int window);

/// Retries with a doubled window up to max_window; reports the window used.
Mutation mutate_ct_growing(const ClusterCategory& cat, const ClusterTiltingObject& t, int k, int window,
                           int max_window, int* used_window = nullptr);

/// (dim Hom_C(T_i, M))_i. Throws MIsShiftedSummand when M is some Sigma T_i.
std::vector<int> dim_vector_tau_rigid(const ClusterCategory& cat, const ClusterTiltingObject& t, const IndRigidObject& m);

/// Exchange pair (X, X*) with the middle terms B, B' of its two exchange
/// triangles, as multisets of summands of the complement.
struct ExchangePair {
    IndRigidObject x;
    IndRigidObject x_star;
    std::vector<std::pair<IndRigidObject, int>> b;
    std::vector<std::pair<IndRigidObject, int>> b_prime;
};

/// Exchange pair for mutating t at k; middle terms read off t.matrix.
ExchangePair exchange_pair(const ClusterTiltingObject& t, const Mutation& mu, int k);

struct CompatibilityResult {
    bool compatible = false;
    bool exception_clause = false;
    std::size_t lhs = 0;
    std::size_t hom_b = 0;
    std::size_t hom_b_prime = 0;
};

CompatibilityResult exchange_compatibility_check(const ClusterCategory& cat, const ExchangePair& pair, const IndRigidObject& m);

}  // namespace tame
