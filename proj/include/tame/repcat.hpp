#pragma once

// Indecomposable rigid objects of the cluster category of an acyclic
// quiver of extended Dynkin (or Dynkin) type, realized as explicit
// representations, with Hom dimensions in mod kQ and in the cluster
// category.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tame/quiver.hpp"
#include "tame/representation.hpp"
#include "tame/tubes.hpp"

namespace tame {

enum class ObjectKind { ShiftedProjective = 0, Preprojective = 1, Regular = 2, Preinjective = 3 };

/// Position descriptor. Preprojective(i, m) is tau^-m P_i, Preinjective(i, m)
/// is tau^m I_i. Regular coordinates beyond the rigid range are accepted so
/// non-rigid tube modules can be compared against the tube oracle.
struct IndRigidObject {
    ObjectKind kind = ObjectKind::ShiftedProjective;
    int vertex = 0;
    int power = 0;
    TubeCoord coord{};

    static IndRigidObject shifted_projective(int i) { return {ObjectKind::ShiftedProjective, i, 0, {}}; }
    static IndRigidObject preprojective(int i, int m) { return {ObjectKind::Preprojective, i, m, {}}; }
    static IndRigidObject preinjective(int i, int m) { return {ObjectKind::Preinjective, i, m, {}}; }
    static IndRigidObject regular(int tube, int a, int b) { return {ObjectKind::Regular, 0, 0, {tube, a, b}}; }

    bool is_module() const { return kind != ObjectKind::ShiftedProjective; }
    bool is_regular() const { return kind == ObjectKind::Regular; }
    bool is_transjective() const { return kind != ObjectKind::Regular; }

    /// Enumeration order: shifted projectives, preprojectives by (m, i),
    /// regulars by (tube, a, b), preinjectives by (m, i).
    friend bool operator<(const IndRigidObject& x, const IndRigidObject& y) { return x.key() < y.key(); }
    friend bool operator==(const IndRigidObject& x, const IndRigidObject& y) { return x.key() == y.key(); }

    std::string label() const;

private:
    std::tuple<int, int, int, int> key() const;
};

struct TubeModel {
    int id = 0;
    int rank = 0;
    /// R_1 .. R_d with R_{i+1} = tau^-1 R_i.
    std::vector<Representation> quasi_simples;
};

class ClusterCategory {
public:
    /// Affine quivers get tubes built from generic bricks drawn with
    /// rng_seed; Dynkin quivers have no tubes. Throws NotExtendedDynkin
    /// for anything else.
    ClusterCategory(Quiver q, std::uint64_t rng_seed);
    ~ClusterCategory();

    const Quiver& quiver() const { return q_; }
    int size() const { return q_.size(); }
    bool is_affine() const { return profile_.has_value(); }
    const AffineProfile& profile() const;
    const RepresentationTheory& theory() const { return rt_; }
    const PathAlgebra& algebra() const { return rt_.algebra(); }
    const std::vector<TubeModel>& tubes() const { return tubes_; }
    int tube_rank(int tube) const { return tubes_.at(tube).rank; }
    std::uint64_t rng_seed() const { return seed_; }

    /// Canonical descriptor (regular socle index wrapped into [1, d]).
    IndRigidObject canonical(IndRigidObject x) const;
    IndRigidObject shift(const IndRigidObject& x) const;
    IndRigidObject unshift(const IndRigidObject& x) const;
    bool is_injective(const IndRigidObject& x) const;

    /// Throws InvariantViolation for shifted projectives or positions that
    /// do not exist (Dynkin powers past the injectives).
    const Representation& module(const IndRigidObject& x) const;
    std::vector<int> dim_vector(const IndRigidObject& x) const;

    std::size_t hom_dim_mod(const IndRigidObject& x, const IndRigidObject& y) const;
    std::size_t ext1_dim_mod(const IndRigidObject& x, const IndRigidObject& y) const;
    std::size_t hom_dim_C(const IndRigidObject& x, const IndRigidObject& y) const;
    std::size_t ext1_dim_C(const IndRigidObject& x, const IndRigidObject& y) const { return hom_dim_C(x, shift(y)); }

    /// Shifted projectives, tau^-m P_i and tau^m I_i for m <= window, and
    /// every regular (a, b) with b <= d - 1. Deterministic order.
    std::vector<IndRigidObject> enumerate_rigid(int window) const;

    /// Highest power m with tau^-m P_i defined (Dynkin only).
    int preprojective_length(int i) const { return pp_last_.at(i); }

private:
    struct ModuleData;
    std::shared_ptr<const ModuleData> data(const IndRigidObject& x) const;
    std::shared_ptr<const ModuleData> build(const IndRigidObject& x) const;
    Representation build_regular(const TubeCoord& c) const;
    void build_tubes(std::mt19937_64& rng);
    void build_dynkin();

    Quiver q_;
    std::optional<AffineProfile> profile_;
    RepresentationTheory rt_;
    std::uint64_t seed_;
    std::vector<TubeModel> tubes_;
    std::vector<int> pp_last_;
    std::vector<IndRigidObject> injective_label_;

    mutable std::mutex mu_;
    mutable std::map<IndRigidObject, std::shared_ptr<const ModuleData>> modules_;
    mutable std::map<std::pair<IndRigidObject, IndRigidObject>, std::size_t> hom_mod_cache_;
    mutable std::map<std::pair<IndRigidObject, IndRigidObject>, std::size_t> hom_c_cache_;
};

/// Quasi-simple roots: positive real roots of defect zero strictly below
/// delta whose tau-orbit sums to delta.
std::vector<std::vector<int>> quasi_simple_roots(const Quiver& q, const AffineProfile& profile);

}  // namespace tame
