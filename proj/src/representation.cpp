#include "tame/representation.hpp"

#include <numeric>

#include "tame/errors.hpp"

namespace tame {

int Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

PathAlgebra::PathAlgebra(Quiver q) : q_(std::move(q)) {
    if (!q_.is_acyclic()) throw NotExtendedDynkin("path algebra of a quiver with oriented cycles");
    const int n = q_.size();
    const auto& arrows = q_.arrows();
    const std::size_t na = arrows.size();
    std::vector<std::vector<int>> ext;
    for (int v = 0; v < n; ++v) {
        trivial_.push_back(static_cast<int>(paths_.size()));
        paths_.push_back({v, v, {}});
        parent_.push_back(-1);
        last_arrow_.push_back(-1);
    }
    for (std::size_t id = 0; id < paths_.size(); ++id) {
        ext.emplace_back(na, -1);
        for (std::size_t a = 0; a < na; ++a) {
            if (arrows[a].from != paths_[id].to) continue;
            Path p = paths_[id];
            p.to = arrows[a].to;
            p.arrows.push_back(static_cast<int>(a));
            ext[id][a] = static_cast<int>(paths_.size());
            paths_.push_back(std::move(p));
            parent_.push_back(static_cast<int>(id));
            last_arrow_.push_back(static_cast<int>(a));
        }
    }
    extend_.assign(paths_.size() * na, -1);
    for (std::size_t id = 0; id < paths_.size(); ++id)
        for (std::size_t a = 0; a < na; ++a) extend_[id * na + a] = ext[id][a];
    arrow_path_.resize(na);
    for (std::size_t a = 0; a < na; ++a) arrow_path_[a] = extend(trivial_[arrows[a].from], static_cast<int>(a));
    between_.assign(static_cast<std::size_t>(n) * n, {});
    local_.resize(paths_.size());
    for (std::size_t id = 0; id < paths_.size(); ++id) {
        auto& bucket = between_[paths_[id].from * n + paths_[id].to];
        local_[id] = static_cast<int>(bucket.size());
        bucket.push_back(static_cast<int>(id));
    }
}

int PathAlgebra::concat(int p, int q) const {
    if (paths_[p].to != paths_[q].from) return -1;
    int r = p;
    for (int a : paths_[q].arrows) r = extend(r, a);
    return r;
}

Representation PathAlgebra::zero() const {
    Representation m;
    m.dims.assign(size(), 0);
    for (std::size_t a = 0; a < q_.arrows().size(); ++a) m.maps.emplace_back(0, 0);
    return m;
}

Representation PathAlgebra::projective(int i) const {
    Representation m;
    for (int v = 0; v < size(); ++v) m.dims.push_back(static_cast<int>(paths_between(i, v).size()));
    for (std::size_t a = 0; a < q_.arrows().size(); ++a) {
        const auto& ar = q_.arrows()[a];
        Matrix mat(m.dims[ar.to], m.dims[ar.from]);
        for (int p : paths_between(i, ar.from)) mat.set(local_index(extend(p, static_cast<int>(a))), local_index(p), Fp::raw(1));
        m.maps.push_back(std::move(mat));
    }
    return m;
}

Representation PathAlgebra::injective(int i) const {
    Representation m;
    for (int v = 0; v < size(); ++v) m.dims.push_back(static_cast<int>(paths_between(v, i).size()));
    for (std::size_t a = 0; a < q_.arrows().size(); ++a) {
        const auto& ar = q_.arrows()[a];
        Matrix mat(m.dims[ar.to], m.dims[ar.from]);
        for (int s2 : paths_between(ar.to, i))
            mat.set(local_index(s2), local_index(concat(arrow_path(static_cast<int>(a)), s2)), Fp::raw(1));
        m.maps.push_back(std::move(mat));
    }
    return m;
}

Representation PathAlgebra::simple(int i) const {
    Representation m = zero();
    m.dims[i] = 1;
    for (std::size_t a = 0; a < q_.arrows().size(); ++a) {
        const auto& ar = q_.arrows()[a];
        m.maps[a] = Matrix(m.dims[ar.to], m.dims[ar.from]);
    }
    return m;
}

Representation PathAlgebra::random(const std::vector<int>& dims, std::mt19937_64& rng) const {
    Representation m;
    m.dims = dims;
    for (const auto& ar : q_.arrows()) m.maps.push_back(Matrix::random(dims[ar.to], dims[ar.from], rng));
    return m;
}

void PathAlgebra::validate(const Representation& m) const {
    if (static_cast<int>(m.dims.size()) != size() || m.maps.size() != q_.arrows().size())
        throw InvariantViolation("representation does not match the quiver");
    for (std::size_t a = 0; a < m.maps.size(); ++a) {
        const auto& ar = q_.arrows()[a];
        if (m.dims[ar.from] < 0 || m.maps[a].rows() != static_cast<std::size_t>(m.dims[ar.to]) ||
            m.maps[a].cols() != static_cast<std::size_t>(m.dims[ar.from]))
            throw InvariantViolation("arrow matrix shape mismatch");
    }
}

std::vector<Matrix> PathAlgebra::path_matrices(const Representation& m) const {
    std::vector<Matrix> out(paths_.size());
    for (std::size_t id = 0; id < paths_.size(); ++id) {
        if (parent_[id] < 0) {
            out[id] = Matrix::identity(m.dims[paths_[id].from]);
        } else {
            out[id] = m.maps[last_arrow_[id]] * out[parent_[id]];
        }
    }
    return out;
}

Presentation PathAlgebra::minimal_presentation(const Representation& m) const {
    validate(m);
    const int n = size();
    const auto& arrows = q_.arrows();
    const auto mats = path_matrices(m);

    Presentation pres;
    std::vector<int> gen_coord;
    for (int v = 0; v < n; ++v) {
        std::vector<Matrix> blocks;
        for (std::size_t a = 0; a < arrows.size(); ++a)
            if (arrows[a].to == v) blocks.push_back(m.maps[a]);
        const Matrix rad = hconcat(blocks, m.dims[v]);
        for (std::size_t c : complement_coordinates(rad)) {
            pres.gens.push_back(v);
            gen_coord.push_back(static_cast<int>(c));
        }
    }
    const int ng = static_cast<int>(pres.gens.size());

    // P0 at w has basis (g, path gens[g] -> w), ordered by generator.
    std::vector<std::vector<int>> offset(n, std::vector<int>(ng + 1, 0));
    for (int w = 0; w < n; ++w)
        for (int g = 0; g < ng; ++g)
            offset[w][g + 1] = offset[w][g] + static_cast<int>(paths_between(pres.gens[g], w).size());

    std::vector<Matrix> kernel(n);
    for (int w : q_.topological_order()) {
        Matrix eps(m.dims[w], offset[w][ng]);
        for (int g = 0; g < ng; ++g)
            for (int p : paths_between(pres.gens[g], w))
                for (int r = 0; r < m.dims[w]; ++r) eps.set(r, offset[w][g] + local_index(p), mats[p](r, gen_coord[g]));
        kernel[w] = nullspace(eps);

        std::vector<Matrix> blocks;
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            if (arrows[a].to != w) continue;
            const int u = arrows[a].from;
            Matrix p0(offset[w][ng], offset[u][ng]);
            for (int g = 0; g < ng; ++g)
                for (int p : paths_between(pres.gens[g], u))
                    p0.set(offset[w][g] + local_index(extend(p, static_cast<int>(a))), offset[u][g] + local_index(p), Fp::raw(1));
            blocks.push_back(p0 * kernel[u]);
        }
        const Matrix radk = hconcat(blocks, offset[w][ng]);
        for (std::size_t c : independent_columns_modulo(radk, kernel[w])) {
            Presentation::Relation rel;
            rel.vertex = w;
            for (int g = 0; g < ng; ++g)
                for (int p : paths_between(pres.gens[g], w)) {
                    const Fp coeff = kernel[w](offset[w][g] + local_index(p), c);
                    if (!coeff.is_zero()) rel.terms.emplace_back(g, p, coeff);
                }
            pres.relations.push_back(std::move(rel));
        }
    }
    return pres;
}

std::int64_t PathAlgebra::euler(const Representation& m, const Representation& n) const { return q_.euler(m.dims, n.dims); }

std::size_t PathAlgebra::hom_dim(const Presentation& pm, const std::vector<Matrix>& paths_n, const std::vector<int>& dims_n) const {
    const std::size_t ng = pm.gens.size();
    std::vector<std::size_t> col_off(ng + 1, 0);
    for (std::size_t g = 0; g < ng; ++g) col_off[g + 1] = col_off[g] + dims_n[pm.gens[g]];
    if (col_off[ng] == 0) return 0;
    std::vector<std::size_t> row_off(pm.relations.size() + 1, 0);
    for (std::size_t r = 0; r < pm.relations.size(); ++r) row_off[r + 1] = row_off[r] + dims_n[pm.relations[r].vertex];
    Matrix sys(row_off.back(), col_off[ng]);
    for (std::size_t r = 0; r < pm.relations.size(); ++r) {
        for (const auto& [g, p, c] : pm.relations[r].terms) {
            const Matrix& np = paths_n[p];
            for (std::size_t i = 0; i < np.rows(); ++i)
                for (std::size_t j = 0; j < np.cols(); ++j) {
                    const Fp v = np(i, j);
                    if (!v.is_zero()) sys.add(row_off[r] + i, col_off[g] + j, c * v);
                }
        }
    }
    return col_off[ng] - rank(std::move(sys));
}

std::size_t PathAlgebra::hom_dim(const Representation& m, const Representation& n) const {
    validate(n);
    return hom_dim(minimal_presentation(m), path_matrices(n), n.dims);
}

std::size_t PathAlgebra::hom_dim_intertwiner(const Representation& m, const Representation& n) const {
    validate(m);
    validate(n);
    const int nv = size();
    std::vector<std::size_t> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + static_cast<std::size_t>(n.dims[v]) * m.dims[v];
    if (off[nv] == 0) return 0;
    std::size_t rows = 0;
    for (const auto& ar : q_.arrows()) rows += static_cast<std::size_t>(n.dims[ar.to]) * m.dims[ar.from];
    Matrix sys(rows, off[nv]);
    std::size_t row = 0;
    for (std::size_t a = 0; a < q_.arrows().size(); ++a) {
        const int i = q_.arrows()[a].from;
        const int j = q_.arrows()[a].to;
        const Matrix& A = m.maps[a];
        const Matrix& B = n.maps[a];
        for (int r = 0; r < n.dims[j]; ++r) {
            for (int c = 0; c < m.dims[i]; ++c, ++row) {
                for (int k = 0; k < m.dims[j]; ++k) sys.add(row, off[j] + r * m.dims[j] + k, A(k, c));
                for (int k = 0; k < n.dims[i]; ++k) sys.add(row, off[i] + k * m.dims[i] + c, -B(r, k));
            }
        }
    }
    return off[nv] - rank(std::move(sys));
}

std::size_t PathAlgebra::ext1_dim(const Representation& m, const Representation& n) const {
    const auto h = static_cast<std::int64_t>(hom_dim(m, n));
    const std::int64_t e = h - euler(m, n);
    if (e < 0) throw InvariantViolation("negative Ext dimension");
    return static_cast<std::size_t>(e);
}

std::optional<Representation> PathAlgebra::tau(const Representation& m) const { return tau(m, minimal_presentation(m)); }

std::optional<Representation> PathAlgebra::tau(const Representation& m, const Presentation& pm) const {
    (void)m;
    if (pm.relations.empty()) return std::nullopt;
    const int n = size();
    const auto& rels = pm.relations;
    const std::size_t ng = pm.gens.size();
    const std::size_t nr = rels.size();

    // nu(P1) -> nu(P0) at each vertex x; columns over (r, path x -> w(r)),
    // rows over (g, path x -> gens[g]).
    std::vector<std::vector<std::size_t>> col_off(n, std::vector<std::size_t>(nr + 1, 0));
    std::vector<Matrix> kernel(n);
    for (int x = 0; x < n; ++x) {
        for (std::size_t r = 0; r < nr; ++r) col_off[x][r + 1] = col_off[x][r] + paths_between(x, rels[r].vertex).size();
        std::vector<std::size_t> row_off(ng + 1, 0);
        for (std::size_t g = 0; g < ng; ++g) row_off[g + 1] = row_off[g] + paths_between(x, pm.gens[g]).size();
        Matrix nu(row_off[ng], col_off[x][nr]);
        for (std::size_t r = 0; r < nr; ++r)
            for (const auto& [g, p, c] : rels[r].terms)
                for (int t : paths_between(x, pm.gens[g]))
                    nu.add(row_off[g] + local_index(t), col_off[x][r] + local_index(concat(t, p)), c);
        kernel[x] = nullspace(nu);
    }

    Representation out;
    for (int x = 0; x < n; ++x) out.dims.push_back(static_cast<int>(kernel[x].cols()));
    for (std::size_t a = 0; a < q_.arrows().size(); ++a) {
        const int x = q_.arrows()[a].from;
        const int y = q_.arrows()[a].to;
        Matrix big(col_off[y][nr], col_off[x][nr]);
        for (std::size_t r = 0; r < nr; ++r)
            for (int s2 : paths_between(y, rels[r].vertex))
                big.set(col_off[y][r] + local_index(s2),
                        col_off[x][r] + local_index(concat(arrow_path(static_cast<int>(a)), s2)), Fp::raw(1));
        out.maps.push_back(coordinates_in_basis(kernel[y], big * kernel[x]));
    }
    return out;
}

Representation dual(const Representation& m) {
    Representation d;
    d.dims = m.dims;
    for (const auto& mat : m.maps) d.maps.push_back(mat.transpose());
    return d;
}

std::optional<Representation> RepresentationTheory::tau_inv(const Representation& m) const {
    auto t = op_.tau(dual(m));
    if (!t) return std::nullopt;
    return dual(*t);
}

}  // namespace tame
