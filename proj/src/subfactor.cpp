#include "tame/subfactor.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tame/errors.hpp"

namespace tame {

std::vector<IndRigidObject> perp_inventory(const ClusterCategory& cat, const IndRigidObject& z, int window) {
    const IndRigidObject zc = cat.canonical(z);
    const IndRigidObject sz = cat.shift(zc);
    std::vector<IndRigidObject> out;
    for (const auto& x : cat.enumerate_rigid(window))
        if (!(x == zc) && cat.hom_dim_C(x, sz) == 0) out.push_back(x);
    return out;
}

TubeSplit tube_split_prediction(const TubeCoord& z, int rank) {
    const int d = rank;
    const int t = z.b;
    if (t < 1 || t > d - 1) throw InvariantViolation("tube split needs a rigid regular object");
    auto unrotate = [&](TubeCoord c) {
        c.tube = z.tube;
        c.a = wrap(c.a + z.a - 1, d);
        return c;
    };
    const TubeCoord zr{z.tube, 1, t};

    TubeSplit s;
    s.rank = d;
    s.t = t;
    std::set<TubeCoord> reduced;
    for (int a = 1; a <= d; ++a) {
        for (int b = 1; b < d; ++b) {
            const TubeCoord x{z.tube, a, b};
            if (in_wing(x, zr, d) && !(x == zr)) s.wing.push_back(unrotate(x));
            bool excluded = in_coray(x, {z.tube, d, 1}, d);
            for (int c = 1; c <= t - 1; ++c) excluded = excluded || in_coray(x, {z.tube, c, 1}, d);
            for (int c = 2; c <= t + 1; ++c) excluded = excluded || in_ray(x, {z.tube, c, 1}, d);
            if (!excluded) reduced.insert(x);
        }
    }
    for (const auto& x : reduced) {
        s.reduced.push_back(unrotate(x));
        if (x == zr) continue;
        int ql = 0;
        for (int b = 1; b <= x.b; ++b) {
            const TubeCoord y{z.tube, x.a, b};
            if (reduced.count(y) && !(y == zr)) ++ql;
        }
        s.relabeled.emplace_back(unrotate(x), ql);
    }
    for (int i = 1; i <= t - 1; ++i) s.suspension.emplace_back(unrotate({z.tube, 1, i}), unrotate({z.tube, i + 1, t - i}));
    std::sort(s.wing.begin(), s.wing.end());
    std::sort(s.reduced.begin(), s.reduced.end());
    std::sort(s.relabeled.begin(), s.relabeled.end());
    return s;
}

std::size_t vertex_deletion_count(const Quiver& q, int vertex) {
    const int n = q.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (s == vertex || comp[s] >= 0) continue;
        std::vector<int> stack = {s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& a : q.arrows()) {
                int u = -1;
                if (a.from == v) u = a.to;
                if (a.to == v) u = a.from;
                if (u < 0 || u == vertex || comp[u] >= 0) continue;
                comp[u] = ncomp;
                stack.push_back(u);
            }
        }
        ++ncomp;
    }
    std::size_t total = 0;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> index(n, -1);
        int m = 0;
        for (int v = 0; v < n; ++v)
            if (comp[v] == c) index[v] = m++;
        std::vector<Arrow> arrows;
        for (const auto& a : q.arrows())
            if (index[a.from] >= 0 && index[a.to] >= 0) arrows.push_back({index[a.from], index[a.to]});
        const ClusterCategory sub(Quiver(m, std::move(arrows)), 0);
        if (sub.is_affine()) throw InvariantViolation("deleting a vertex left an extended Dynkin component");
        total += sub.enumerate_rigid(0).size();
    }
    return total;
}

bool SubfactorReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const SubfactorCheck& c) { return c.pass; });
}

namespace {

std::string coord_list(const std::vector<TubeCoord>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + to_string(xs[i]);
    return s + "}";
}

}  // namespace

SubfactorReport classify_subfactor(const ClusterCategory& cat, const IndRigidObject& z0, int window) {
    const IndRigidObject z = cat.canonical(z0);
    SubfactorReport rep;
    rep.deleted = z;
    rep.window = window;

    if (z.is_transjective()) {
        rep.finite_type = true;
        int w = std::max(window, 1);
        rep.inventory = perp_inventory(cat, z, w);
        std::vector<IndRigidObject> wide = perp_inventory(cat, z, 2 * w);
        for (int attempt = 0; attempt < 3 && wide != rep.inventory; ++attempt) {
            w *= 2;
            rep.inventory = std::move(wide);
            wide = perp_inventory(cat, z, 2 * w);
        }
        rep.window = w;
        rep.checks.push_back({"inventory-stable", wide == rep.inventory,
                              std::to_string(rep.inventory.size()) + " objects at W=" + std::to_string(w) + ", " +
                                  std::to_string(wide.size()) + " at 2W"});
        const std::size_t expected = vertex_deletion_count(cat.quiver(), z.vertex);
        rep.checks.push_back({"finite-count", rep.inventory.size() == expected,
                              std::to_string(rep.inventory.size()) + " survivors, " + std::to_string(expected) +
                                  " in the cluster category of the deleted quiver"});
        return rep;
    }

    const int d = cat.tube_rank(z.coord.tube);
    const int t = z.coord.b;
    if (t >= d) throw InvariantViolation(z.label() + " is not rigid");
    if (t == d - 1) throw UncoveredCase("regular " + z.label() + " has quasi-length rank - 1");

    rep.inventory = perp_inventory(cat, z, window);
    const TubeSplit split = tube_split_prediction(z.coord, d);
    rep.wing = split.wing;
    rep.reduced = split.reduced;

    bool replaced = false;
    for (const auto& tube : cat.tubes()) {
        int r = tube.rank;
        if (!replaced && tube.id == z.coord.tube) {
            r = d - t;
            replaced = true;
        }
        if (r > 1) rep.rank_pattern.push_back(r);
    }
    std::sort(rep.rank_pattern.rbegin(), rep.rank_pattern.rend());

    std::set<TubeCoord> predicted(split.wing.begin(), split.wing.end());
    for (const auto& x : split.reduced)
        if (!(x == z.coord)) predicted.insert(x);
    std::set<TubeCoord> observed;
    bool other_tubes_intact = true;
    std::set<IndRigidObject> inv(rep.inventory.begin(), rep.inventory.end());
    for (const auto& tube : cat.tubes())
        for (int a = 1; a <= tube.rank; ++a)
            for (int b = 1; b < tube.rank; ++b) {
                const auto x = IndRigidObject::regular(tube.id, a, b);
                const bool in = inv.count(x) > 0;
                if (tube.id == z.coord.tube) {
                    if (in) observed.insert(x.coord);
                } else if (!in) {
                    other_tubes_intact = false;
                }
            }
    std::vector<TubeCoord> obs(observed.begin(), observed.end());
    std::vector<TubeCoord> pred(predicted.begin(), predicted.end());
    rep.checks.push_back({"tube-survivors", obs == pred, "observed " + coord_list(obs) + ", predicted " + coord_list(pred)});
    rep.checks.push_back({"other-tubes-survive", other_tubes_intact, ""});

    const int nd = d - t;
    const std::size_t reduced_count = split.reduced.size() - 1;
    rep.checks.push_back({"reduced-count", reduced_count == static_cast<std::size_t>(nd * (nd - 1)),
                          std::to_string(reduced_count) + " rigid objects in the reduced tube"});

    std::map<int, int> ql_count;
    for (const auto& [c, ql] : split.relabeled) ++ql_count[ql];
    bool relabel_ok = static_cast<int>(ql_count.size()) == nd - 1;
    for (const auto& [ql, count] : ql_count) relabel_ok = relabel_ok && ql >= 1 && ql <= nd - 1 && count == nd;
    rep.checks.push_back({"rank-pattern", relabel_ok, "reduced tube of rank " + std::to_string(nd)});

    rep.checks.push_back({"wing-size", static_cast<int>(split.wing.size()) == t * (t + 1) / 2 - 1,
                          std::to_string(split.wing.size()) + " objects in the wing"});
    bool susp_ok = true;
    const std::set<TubeCoord> wing(split.wing.begin(), split.wing.end());
    for (const auto& [from, to] : split.suspension) susp_ok = susp_ok && wing.count(from) && wing.count(to);
    rep.checks.push_back({"suspension-in-wing", susp_ok, ""});
    return rep;
}

}  // namespace tame
