#include "tame/tilting.hpp"

#include <algorithm>

#include "tame/errors.hpp"

namespace tame {

std::string ClusterTiltingObject::describe() const {
    std::string s;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        if (i) s += " + ";
        s += summands[i].label();
    }
    return s;
}

ClusterTiltingObject base_cluster_tilting(const ClusterCategory& cat) {
    ClusterTiltingObject t;
    for (int i = 0; i < cat.size(); ++i) t.summands.push_back(IndRigidObject::preprojective(i, 0));
    t.matrix = cat.quiver().exchange_matrix();
    return t;
}

TiltingCertificate is_cluster_tilting(const ClusterCategory& cat, const std::vector<IndRigidObject>& objs) {
    TiltingCertificate cert;
    if (static_cast<int>(objs.size()) != cat.size()) {
        cert.reason = "expected " + std::to_string(cat.size()) + " summands, got " + std::to_string(objs.size());
        return cert;
    }
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = i + 1; j < objs.size(); ++j)
            if (cat.canonical(objs[i]) == cat.canonical(objs[j])) {
                cert.reason = "duplicate summand " + objs[i].label();
                return cert;
            }
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = 0; j < objs.size(); ++j)
            if (cat.ext1_dim_C(objs[i], objs[j]) != 0) cert.violations.emplace_back(static_cast<int>(i), static_cast<int>(j));
    if (!cert.violations.empty()) {
        cert.reason = "summands are not Ext-orthogonal";
        return cert;
    }
    cert.ok = true;
    return cert;
}

Mutation mutate_ct(const ClusterCategory& cat, const ClusterTiltingObject& t, int k, int window) {
    if (k < 0 || k >= t.size()) throw IndexError("mutation index " + std::to_string(k + 1) + " out of range");
    const IndRigidObject old = cat.canonical(t.summands[k]);
    std::vector<IndRigidObject> found;
    for (const auto& x : cat.enumerate_rigid(window)) {
        if (x == old) continue;
        bool fits = true;
        for (int j = 0; j < t.size() && fits; ++j) {
            if (j == k) continue;
            if (cat.canonical(t.summands[j]) == x || cat.ext1_dim_C(x, t.summands[j]) != 0) fits = false;
        }
        if (fits) found.push_back(x);
    }
    if (found.empty())
        throw WindowExhausted("no complement for " + old.label() + " within window " + std::to_string(window));
    if (found.size() > 1)
        throw AmbiguousComplement("complements " + found[0].label() + " and " + found[1].label() + " both fit");
    const IndRigidObject fresh = found.front();
    if (cat.ext1_dim_C(old, fresh) != 1)
        throw InvariantViolation("exchange pair " + old.label() + ", " + fresh.label() + " is not unique");
    Mutation mu{t, old, fresh};
    mu.result.summands[k] = fresh;
    mu.result.matrix = mutate_matrix(t.matrix, k);
    mu.result.word.push_back(k);
    return mu;
}

Mutation mutate_ct_growing(const ClusterCategory& cat, const ClusterTiltingObject& t, int k, int window, int max_window,
                           int* used_window) {
    int w = window;
    while (true) {
        try {
            Mutation mu = mutate_ct(cat, t, k, w);
            if (used_window) *used_window = w;
            return mu;
        } catch (const WindowExhausted&) {
            if (w >= max_window) throw;
            w = std::min(max_window, std::max(1, 2 * w));
        }
    }
}

std::vector<int> dim_vector_tau_rigid(const ClusterCategory& cat, const ClusterTiltingObject& t, const IndRigidObject& m) {
    const IndRigidObject mc = cat.canonical(m);
    for (const auto& s : t.summands)
        if (cat.shift(s) == mc) throw MIsShiftedSummand(m.label() + " is the shift of summand " + s.label());
    std::vector<int> d;
    for (const auto& s : t.summands) d.push_back(static_cast<int>(cat.hom_dim_C(s, mc)));
    return d;
}

ExchangePair exchange_pair(const ClusterTiltingObject& t, const Mutation& mu, int k) {
    ExchangePair p{mu.removed, mu.inserted, {}, {}};
    for (int j = 0; j < t.size(); ++j) {
        if (j == k) continue;
        const int e = t.matrix(j, k);
        if (e > 0) p.b.emplace_back(t.summands[j], e);
        if (e < 0) p.b_prime.emplace_back(t.summands[j], -e);
    }
    return p;
}

CompatibilityResult exchange_compatibility_check(const ClusterCategory& cat, const ExchangePair& pair, const IndRigidObject& m) {
    CompatibilityResult r;
    const IndRigidObject sm = cat.shift(m);
    if (sm == cat.canonical(pair.x) || sm == cat.canonical(pair.x_star)) {
        r.compatible = true;
        r.exception_clause = true;
        return r;
    }
    r.lhs = cat.hom_dim_C(m, pair.x) + cat.hom_dim_C(m, pair.x_star);
    for (const auto& [obj, mult] : pair.b) r.hom_b += mult * cat.hom_dim_C(m, obj);
    for (const auto& [obj, mult] : pair.b_prime) r.hom_b_prime += mult * cat.hom_dim_C(m, obj);
    r.compatible = r.lhs == std::max(r.hom_b, r.hom_b_prime);
    return r;
}

}  // namespace tame
