#include "tame/repcat.hpp"

#include <algorithm>
#include <set>

#include "tame/errors.hpp"

namespace tame {

std::tuple<int, int, int, int> IndRigidObject::key() const {
    switch (kind) {
        case ObjectKind::ShiftedProjective: return {0, vertex, 0, 0};
        case ObjectKind::Preprojective: return {1, power, vertex, 0};
        case ObjectKind::Regular: return {2, coord.tube, coord.a, coord.b};
        case ObjectKind::Preinjective: return {3, power, vertex, 0};
    }
    return {};
}

std::string IndRigidObject::label() const {
    const std::string v = std::to_string(vertex + 1);
    switch (kind) {
        case ObjectKind::ShiftedProjective: return "P" + v + "[1]";
        case ObjectKind::Preprojective: return power == 0 ? "P" + v : (power == 1 ? "tau^-1" : "tau^-" + std::to_string(power)) + " P" + v;
        case ObjectKind::Regular: return to_string(coord);
        case ObjectKind::Preinjective: return power == 0 ? "I" + v : (power == 1 ? std::string("tau") : "tau^" + std::to_string(power)) + " I" + v;
    }
    return {};
}

struct ClusterCategory::ModuleData {
    Representation rep;
    Presentation pres;
    std::vector<Matrix> paths;
};

namespace {

constexpr int kBrickAttempts = 32;
constexpr int kDynkinCap = 256;

}  // namespace

namespace {

// tau-orbits of regular exceptional roots below delta whose sum is delta;
// an orbit of quasi-length b objects sums to b * delta.
std::vector<std::vector<std::vector<int>>> quasi_simple_orbits(const Quiver& q, const AffineProfile& profile) {
    const int n = q.size();
    std::set<std::vector<int>> cands;
    std::vector<int> v(n, 0);
    while (true) {
        int i = 0;
        while (i < n && v[i] == profile.delta[i]) v[i++] = 0;
        if (i == n) break;
        ++v[i];
        if (v == profile.delta) continue;
        if (profile.defect(v) == 0 && q.euler(v, v) == 1) cands.insert(v);
    }
    std::set<std::vector<int>> used;
    std::vector<std::vector<std::vector<int>>> orbits;
    for (const auto& r : cands) {
        if (used.count(r)) continue;
        std::vector<std::vector<int>> orbit{r};
        used.insert(r);
        for (auto next = q.coxeter_inverse(r); next != r; next = q.coxeter_inverse(next)) {
            if (!cands.count(next) || orbit.size() > cands.size())
                throw InvariantViolation("regular roots do not close into tau-orbits");
            orbit.push_back(next);
            used.insert(next);
        }
        std::vector<int> sum(n, 0);
        for (const auto& d : orbit)
            for (int k = 0; k < n; ++k) sum[k] += d[k];
        if (sum == profile.delta) orbits.push_back(std::move(orbit));
    }
    for (auto& o : orbits) std::rotate(o.begin(), std::min_element(o.begin(), o.end()), o.end());
    std::sort(orbits.begin(), orbits.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return x.front() < y.front();
    });
    return orbits;
}

}  // namespace

std::vector<std::vector<int>> quasi_simple_roots(const Quiver& q, const AffineProfile& profile) {
    std::vector<std::vector<int>> out;
    for (const auto& o : quasi_simple_orbits(q, profile)) out.insert(out.end(), o.begin(), o.end());
    std::sort(out.begin(), out.end());
    return out;
}

ClusterCategory::ClusterCategory(Quiver q, std::uint64_t rng_seed) : q_(std::move(q)), rt_(q_), seed_(rng_seed) {
    try {
        profile_ = affine_profile(q_);
    } catch (const NotExtendedDynkin&) {
        if (!is_dynkin(q_)) throw;
    }
    if (profile_) {
        std::mt19937_64 rng(rng_seed);
        build_tubes(rng);
    } else {
        build_dynkin();
    }
}

ClusterCategory::~ClusterCategory() = default;

const AffineProfile& ClusterCategory::profile() const {
    if (!profile_) throw NotExtendedDynkin("quiver is of Dynkin type");
    return *profile_;
}

void ClusterCategory::build_dynkin() {
    const int n = size();
    pp_last_.assign(n, 0);
    injective_label_.assign(n, IndRigidObject::shifted_projective(0));
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        Representation cur = algebra().projective(i);
        int m = 0;
        while (auto next = rt_.tau_inv(cur)) {
            if (++m > kDynkinCap) throw NotExtendedDynkin("quiver is neither Dynkin nor extended Dynkin");
            cur = std::move(*next);
        }
        pp_last_[i] = m;
        for (int j = 0; j < n; ++j) {
            if (algebra().injective(j).dims == cur.dims) {
                injective_label_[j] = IndRigidObject::preprojective(i, m);
                seen[j] = true;
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw InvariantViolation("could not place every injective in the preprojective component");
}

void ClusterCategory::build_tubes(std::mt19937_64& rng) {
    const auto orbits = quasi_simple_orbits(q_, *profile_);
    std::vector<int> sizes;
    for (const auto& o : orbits) sizes.push_back(static_cast<int>(o.size()));
    if (sizes != profile_->ranks) throw InvariantViolation("tube ranks disagree with the affine type");

    for (std::size_t t = 0; t < orbits.size(); ++t) {
        TubeModel tube;
        tube.id = static_cast<int>(t);
        tube.rank = static_cast<int>(orbits[t].size());
        std::optional<Representation> first;
        for (int attempt = 0; attempt < kBrickAttempts && !first; ++attempt) {
            Representation m = algebra().random(orbits[t].front(), rng);
            if (algebra().hom_dim(m, m) == 1) first = std::move(m);
        }
        if (!first) throw InvariantViolation("no brick found for a quasi-simple root");
        tube.quasi_simples.push_back(std::move(*first));
        for (int i = 1; i < tube.rank; ++i) {
            auto next = rt_.tau_inv(tube.quasi_simples.back());
            if (!next || next->dims != orbits[t][i]) throw InvariantViolation("tau^-1 of a quasi-simple has the wrong dimension");
            tube.quasi_simples.push_back(std::move(*next));
        }
        std::vector<int> sum(size(), 0);
        for (const auto& r : tube.quasi_simples) {
            if (algebra().hom_dim(r, r) != 1 || algebra().ext1_dim(r, r) != 0)
                throw InvariantViolation("quasi-simple is not exceptional");
            for (int v = 0; v < size(); ++v) sum[v] += r.dims[v];
        }
        if (sum != profile_->delta) throw InvariantViolation("quasi-simples of a tube do not sum to delta");
        tubes_.push_back(std::move(tube));
    }
}

IndRigidObject ClusterCategory::canonical(IndRigidObject x) const {
    if (x.kind == ObjectKind::Regular) {
        if (x.coord.tube < 0 || x.coord.tube >= static_cast<int>(tubes_.size()) || x.coord.b < 1)
            throw IndexError("no such tube coordinate " + x.label());
        x.coord = normalized(x.coord, tube_rank(x.coord.tube));
        x.vertex = x.power = 0;
    } else {
        if (x.vertex < 0 || x.vertex >= size() || x.power < 0) throw IndexError("no such object " + x.label());
        if (x.kind == ObjectKind::ShiftedProjective) x.power = 0;
        x.coord = {};
    }
    return x;
}

IndRigidObject ClusterCategory::shift(const IndRigidObject& x0) const {
    const IndRigidObject x = canonical(x0);
    switch (x.kind) {
        case ObjectKind::ShiftedProjective:
            return profile_ ? IndRigidObject::preinjective(x.vertex, 0) : injective_label_[x.vertex];
        case ObjectKind::Preprojective:
            return x.power == 0 ? IndRigidObject::shifted_projective(x.vertex)
                                : IndRigidObject::preprojective(x.vertex, x.power - 1);
        case ObjectKind::Regular: {
            IndRigidObject y = x;
            y.coord = tube_tau(x.coord, tube_rank(x.coord.tube));
            return y;
        }
        case ObjectKind::Preinjective: return IndRigidObject::preinjective(x.vertex, x.power + 1);
    }
    return x;
}

IndRigidObject ClusterCategory::unshift(const IndRigidObject& x0) const {
    const IndRigidObject x = canonical(x0);
    switch (x.kind) {
        case ObjectKind::ShiftedProjective: return IndRigidObject::preprojective(x.vertex, 0);
        case ObjectKind::Preprojective:
            if (!profile_ && x.power >= pp_last_[x.vertex]) {
                for (int j = 0; j < size(); ++j)
                    if (injective_label_[j] == x) return IndRigidObject::shifted_projective(j);
                throw InvariantViolation("object past the preprojective component: " + x.label());
            }
            return IndRigidObject::preprojective(x.vertex, x.power + 1);
        case ObjectKind::Regular: {
            IndRigidObject y = x;
            y.coord = tube_tau(x.coord, tube_rank(x.coord.tube), -1);
            return y;
        }
        case ObjectKind::Preinjective:
            return x.power == 0 ? IndRigidObject::shifted_projective(x.vertex)
                                : IndRigidObject::preinjective(x.vertex, x.power - 1);
    }
    return x;
}

bool ClusterCategory::is_injective(const IndRigidObject& x) const {
    return x.is_module() && unshift(x).kind == ObjectKind::ShiftedProjective;
}

std::shared_ptr<const ClusterCategory::ModuleData> ClusterCategory::data(const IndRigidObject& x0) const {
    const IndRigidObject x = canonical(x0);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = modules_.find(x);
        if (it != modules_.end()) return it->second;
    }
    auto built = build(x);
    std::lock_guard<std::mutex> lock(mu_);
    return modules_.emplace(x, std::move(built)).first->second;
}

Representation ClusterCategory::build_regular(const TubeCoord& c) const {
    const TubeModel& tube = tubes_.at(c.tube);
    if (c.b == 1) return tube.quasi_simples[c.a - 1];
    const Representation& sub = module(IndRigidObject::regular(c.tube, c.a, c.b - 1));
    const Representation& top = module(IndRigidObject::regular(c.tube, c.a + c.b - 1, 1));
    const auto& arrows = q_.arrows();
    const int n = size();

    // delta: (phi_v) -> (sub_a phi_s - phi_t top_a); a nonzero class is any
    // coordinate of the target outside the image.
    std::vector<std::size_t> uoff(n + 1, 0);
    for (int v = 0; v < n; ++v) uoff[v + 1] = uoff[v] + static_cast<std::size_t>(sub.dims[v]) * top.dims[v];
    std::vector<std::size_t> toff(arrows.size() + 1, 0);
    for (std::size_t a = 0; a < arrows.size(); ++a)
        toff[a + 1] = toff[a] + static_cast<std::size_t>(sub.dims[arrows[a].to]) * top.dims[arrows[a].from];
    Matrix delta(toff.back(), uoff[n]);
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const int s = arrows[a].from;
        const int t = arrows[a].to;
        for (int r = 0; r < sub.dims[t]; ++r)
            for (int col = 0; col < top.dims[s]; ++col) {
                const std::size_t row = toff[a] + r * top.dims[s] + col;
                for (int k = 0; k < sub.dims[s]; ++k) delta.add(row, uoff[s] + k * top.dims[s] + col, sub.maps[a](r, k));
                for (int k = 0; k < top.dims[t]; ++k) delta.add(row, uoff[t] + r * top.dims[t] + k, -top.maps[a](k, col));
            }
    }
    const auto outside = complement_coordinates(delta);
    if (outside.empty()) throw InvariantViolation("no nonsplit extension for " + to_string(c));
    const std::size_t pick = outside.front();

    Representation e;
    for (int v = 0; v < n; ++v) e.dims.push_back(sub.dims[v] + top.dims[v]);
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const int s = arrows[a].from;
        const int t = arrows[a].to;
        Matrix m(e.dims[t], e.dims[s]);
        m.place(0, 0, sub.maps[a]);
        m.place(sub.dims[t], sub.dims[s], top.maps[a]);
        if (pick >= toff[a] && pick < toff[a + 1]) {
            const std::size_t local = pick - toff[a];
            m.set(local / top.dims[s], sub.dims[s] + local % top.dims[s], Fp::raw(1));
        }
        e.maps.push_back(std::move(m));
    }
    return e;
}

std::shared_ptr<const ClusterCategory::ModuleData> ClusterCategory::build(const IndRigidObject& x) const {
    auto d = std::make_shared<ModuleData>();
    switch (x.kind) {
        case ObjectKind::ShiftedProjective:
            throw InvariantViolation("shifted projective " + x.label() + " is not a module");
        case ObjectKind::Preprojective:
            if (!profile_ && x.power > pp_last_[x.vertex]) throw InvariantViolation("no module at " + x.label());
            if (x.power == 0) {
                d->rep = algebra().projective(x.vertex);
            } else {
                auto r = rt_.tau_inv(module(IndRigidObject::preprojective(x.vertex, x.power - 1)));
                if (!r) throw InvariantViolation("tau^-1 undefined while building " + x.label());
                d->rep = std::move(*r);
            }
            break;
        case ObjectKind::Preinjective:
            if (!profile_) throw InvariantViolation("Dynkin categories label modules as preprojectives");
            if (x.power == 0) {
                d->rep = algebra().injective(x.vertex);
            } else {
                auto r = rt_.tau(module(IndRigidObject::preinjective(x.vertex, x.power - 1)));
                if (!r) throw InvariantViolation("tau undefined while building " + x.label());
                d->rep = std::move(*r);
            }
            break;
        case ObjectKind::Regular:
            d->rep = build_regular(x.coord);
            break;
    }
    d->pres = algebra().minimal_presentation(d->rep);
    d->paths = algebra().path_matrices(d->rep);
    if (x.kind == ObjectKind::Regular && x.coord.b < tube_rank(x.coord.tube)) {
        if (algebra().hom_dim(d->pres, d->paths, d->rep.dims) != 1)
            throw InvariantViolation("regular rigid object is not a brick: " + x.label());
    }
    return d;
}

const Representation& ClusterCategory::module(const IndRigidObject& x) const { return data(x)->rep; }

std::vector<int> ClusterCategory::dim_vector(const IndRigidObject& x) const { return module(x).dims; }

std::size_t ClusterCategory::hom_dim_mod(const IndRigidObject& x0, const IndRigidObject& y0) const {
    const auto key = std::make_pair(canonical(x0), canonical(y0));
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = hom_mod_cache_.find(key);
        if (it != hom_mod_cache_.end()) return it->second;
    }
    const auto dx = data(key.first);
    const auto dy = data(key.second);
    const std::size_t h = algebra().hom_dim(dx->pres, dy->paths, dy->rep.dims);
    std::lock_guard<std::mutex> lock(mu_);
    hom_mod_cache_.emplace(key, h);
    return h;
}

std::size_t ClusterCategory::ext1_dim_mod(const IndRigidObject& x, const IndRigidObject& y) const {
    const auto h = static_cast<std::int64_t>(hom_dim_mod(x, y));
    const std::int64_t e = h - q_.euler(dim_vector(x), dim_vector(y));
    if (e < 0) throw InvariantViolation("negative Ext dimension between " + x.label() + " and " + y.label());
    return static_cast<std::size_t>(e);
}

std::size_t ClusterCategory::hom_dim_C(const IndRigidObject& x0, const IndRigidObject& y0) const {
    const auto key = std::make_pair(canonical(x0), canonical(y0));
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = hom_c_cache_.find(key);
        if (it != hom_c_cache_.end()) return it->second;
    }
    IndRigidObject x = key.first;
    IndRigidObject y = key.second;
    for (int round = 0; !(x.is_module() && y.is_module()); ++round) {
        if (round > 3) throw InvariantViolation("shift normalization did not terminate");
        x = shift(x);
        y = shift(y);
    }
    std::size_t h = hom_dim_mod(x, y);
    const IndRigidObject u = unshift(y);
    if (u.is_module()) h += ext1_dim_mod(x, u);
    std::lock_guard<std::mutex> lock(mu_);
    hom_c_cache_.emplace(key, h);
    return h;
}

std::vector<IndRigidObject> ClusterCategory::enumerate_rigid(int window) const {
    if (window < 0) throw IndexError("negative window");
    std::vector<IndRigidObject> out;
    for (int i = 0; i < size(); ++i) out.push_back(IndRigidObject::shifted_projective(i));
    if (!profile_) {
        for (int i = 0; i < size(); ++i)
            for (int m = 0; m <= pp_last_[i]; ++m) out.push_back(IndRigidObject::preprojective(i, m));
    } else {
        for (int m = 0; m <= window; ++m)
            for (int i = 0; i < size(); ++i) {
                out.push_back(IndRigidObject::preprojective(i, m));
                out.push_back(IndRigidObject::preinjective(i, m));
            }
        for (const auto& t : tubes_)
            for (int a = 1; a <= t.rank; ++a)
                for (int b = 1; b < t.rank; ++b) out.push_back(IndRigidObject::regular(t.id, a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tame
