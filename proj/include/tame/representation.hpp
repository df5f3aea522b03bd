#pragma once

// Finite-dimensional representations of an acyclic quiver over F_p:
// path bookkeeping, projectives and injectives, minimal projective
// presentations, Hom and Ext dimensions, and the AR translate.

#include <cstdint>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "tame/linalg.hpp"
#include "tame/quiver.hpp"

namespace tame {

struct Representation {
    std::vector<int> dims;
    /// One matrix per arrow of the quiver, in arrow order; dims[to] x dims[from].
    std::vector<Matrix> maps;

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

struct Path {
    int from = 0;
    int to = 0;
    std::vector<int> arrows;
};

/// Minimal projective presentation P1 -> P0 -> M -> 0. Generator g sits at
/// vertex gens[g]; relation r sits at vertex rel.vertex and is the element
/// sum c * (g, path) of P0, with path running from gens[g] to rel.vertex.
struct Presentation {
    struct Relation {
        int vertex = 0;
        std::vector<std::tuple<int, int, Fp>> terms;  // (generator, path id, coefficient)
    };
    std::vector<int> gens;
    std::vector<Relation> relations;
};

class PathAlgebra {
public:
    explicit PathAlgebra(Quiver q);

    const Quiver& quiver() const { return q_; }
    int size() const { return q_.size(); }

    std::size_t path_count() const { return paths_.size(); }
    const Path& path(int id) const { return paths_[id]; }
    /// Ids of the paths from -> to, including the trivial path when equal.
    const std::vector<int>& paths_between(int from, int to) const { return between_[from * q_.size() + to]; }
    /// Position of a path inside paths_between(from, to).
    int local_index(int id) const { return local_[id]; }
    int trivial(int v) const { return trivial_[v]; }
    int arrow_path(int arrow) const { return arrow_path_[arrow]; }
    /// p followed by arrow, or -1 when they do not compose.
    int extend(int id, int arrow) const { return extend_[id * q_.arrows().size() + arrow]; }
    /// p followed by q, or -1.
    int concat(int p, int q) const;

    Representation projective(int i) const;
    Representation injective(int i) const;
    Representation simple(int i) const;
    Representation random(const std::vector<int>& dims, std::mt19937_64& rng) const;
    Representation zero() const;

    /// Throws InvariantViolation on inconsistent shapes.
    void validate(const Representation& m) const;

    /// One matrix per path id: the composite of the arrow maps.
    std::vector<Matrix> path_matrices(const Representation& m) const;
    Presentation minimal_presentation(const Representation& m) const;

    std::int64_t euler(const Representation& m, const Representation& n) const;

    /// Hom dimension via the presentation of m and the path matrices of n.
    std::size_t hom_dim(const Presentation& pm, const std::vector<Matrix>& paths_n, const std::vector<int>& dims_n) const;
    std::size_t hom_dim(const Representation& m, const Representation& n) const;
    /// Reference route: the intertwiner system phi_j A = B phi_i.
    std::size_t hom_dim_intertwiner(const Representation& m, const Representation& n) const;
    /// hom - euler; throws InvariantViolation if negative.
    std::size_t ext1_dim(const Representation& m, const Representation& n) const;

    /// Auslander-Reiten translate; nullopt when m is projective.
    std::optional<Representation> tau(const Representation& m) const;
    std::optional<Representation> tau(const Representation& m, const Presentation& pm) const;

private:
    Quiver q_;
    std::vector<Path> paths_;
    std::vector<std::vector<int>> between_;
    std::vector<int> local_;
    std::vector<int> trivial_;
    std::vector<int> arrow_path_;
    std::vector<int> extend_;
    std::vector<int> parent_;
    std::vector<int> last_arrow_;
};

/// Transposed arrow maps: a representation of the opposite quiver.
Representation dual(const Representation& m);

/// Pair of path algebras for Q and Q^op; tau_inv is D tau_{Q^op} D.
class RepresentationTheory {
public:
    explicit RepresentationTheory(const Quiver& q) : alg_(q), op_(q.opposite()) {}

    const PathAlgebra& algebra() const { return alg_; }
    const PathAlgebra& opposite() const { return op_; }

    std::optional<Representation> tau(const Representation& m) const { return alg_.tau(m); }
    std::optional<Representation> tau_inv(const Representation& m) const;

private:
    PathAlgebra alg_;
    PathAlgebra op_;
};

}  // namespace tame
