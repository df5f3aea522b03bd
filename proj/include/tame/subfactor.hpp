#pragma once

// Perpendicular inventories of Sigma Z and the combinatorial shape of the
// resulting subfactor.

#include <string>
#include <vector>

#include "tame/repcat.hpp"

namespace tame {

/// Objects X of enumerate_rigid(window) with Hom_C(X, Sigma Z) = 0, X != Z.
std::vector<IndRigidObject> perp_inventory(const ClusterCategory& cat, const IndRigidObject& z, int window);

/// Predicted survivors inside the tube of a regular Z = (a0, t), given in
/// the original coordinates of that tube.
struct TubeSplit {
    int rank = 0;
    int t = 0;
    /// Wing(Z) minus Z.
    std::vector<TubeCoord> wing;
    /// Rigid coordinates off the excluded corays and rays, Z included.
    std::vector<TubeCoord> reduced;
    /// New quasi-length of each reduced coordinate other than Z.
    std::vector<std::pair<TubeCoord, int>> relabeled;
    /// Predicted suspension values G(1,i) = (i+1, t-i) in rotated coordinates.
    std::vector<std::pair<TubeCoord, TubeCoord>> suspension;
};

TubeSplit tube_split_prediction(const TubeCoord& z, int rank);

struct SubfactorCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SubfactorReport {
    IndRigidObject deleted;
    std::vector<IndRigidObject> inventory;
    std::vector<TubeCoord> wing;
    std::vector<TubeCoord> reduced;
    /// Predicted non-homogeneous ranks; empty for finite type.
    std::vector<int> rank_pattern;
    bool finite_type = false;
    int window = 0;
    std::vector<SubfactorCheck> checks;

    bool passed() const;
};

/// Indecomposables of the cluster category of Q with `vertex` removed,
/// counted component by component. Each component must be Dynkin.
std::size_t vertex_deletion_count(const Quiver& q, int vertex);

/// Transjective Z: the inventory is compared at W and 2W, doubling W up to
/// three times until it stabilizes; `window` records the W that worked.
/// Throws UncoveredCase for regular Z of quasi-length rank - 1.
SubfactorReport classify_subfactor(const ClusterCategory& cat, const IndRigidObject& z, int window);

}  // namespace tame
