// Acceptance run: one line per criterion, each with its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tame/denom.hpp"
#include "tame/errors.hpp"
#include "tame/runner.hpp"
#include "tame/seeds.hpp"
#include "tame/subfactor.hpp"

using namespace tame;

namespace {

using Obj = IndRigidObject;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_s;  // <= 0 means no limit
    std::function<Outcome()> body;
};

constexpr std::uint64_t kSeed = 2024;

const ClusterCategory& category(const std::string& name) {
    static std::map<std::string, std::unique_ptr<ClusterCategory>> cache;
    auto& slot = cache[name];
    if (!slot) slot = std::make_unique<ClusterCategory>(builtin_quiver(name), kSeed);
    return *slot;
}

const std::vector<std::vector<int>>& seed_words() {
    static const auto words = [] {
        std::mt19937_64 rng(kSeed);
        return random_words(rng, 3, 10, 6);
    }();
    return words;
}

std::vector<int> minus_e(int i, int n) {
    std::vector<int> v(n, 0);
    v[i] = -1;
    return v;
}

Outcome mutation_algebra() {
    Outcome o;
    std::mt19937_64 rng(kSeed);
    int checked = 0;
    for (int rep = 0; rep < 500; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto b = ExchangeMatrix::random(n, 4, rng);
        for (int k = 0; k < n; ++k) {
            const auto m = mutate_matrix(b, k);
            ++checked;
            if (!m.is_valid()) o.fail("mutation broke skew-symmetry");
            if (!(mutate_matrix(m, k) == b)) o.fail("mutation is not an involution");
        }
    }
    o.detail = o.pass ? std::to_string(checked) + " mutations" : o.detail;
    return o;
}

Outcome laurent_phenomenon() {
    Outcome o;
    std::size_t total = 0;
    for (const char* name : {"A(2,1)", "D(4)"}) {
        const Seed root = Seed::initial(builtin_quiver(name).exchange_matrix());
        try {
            const auto ex = explore(root, 7);
            total += ex.variables.size();
            for (const auto& p : ex.variables) {
                bool initial = false;
                for (const auto& v : root.cluster) initial = initial || (*v == p);
                if (initial) continue;
                for (int e : denominator_vector(p))
                    if (e < 0) o.fail(std::string(name) + ": negative denominator for " + p.to_string());
            }
        } catch (const InexactDivision& e) {
            o.fail(std::string(name) + ": " + e.what());
        }
    }
    if (o.pass) o.detail = std::to_string(total) + " variables";
    return o;
}

Outcome tube_oracle() {
    Outcome o;
    std::size_t pairs = 0;
    for (const char* name : {"A(2,1)", "A(3,2)"}) {
        const auto& cat = category(name);
        for (const auto& tube : cat.tubes()) {
            const int d = tube.rank;
            for (int a = 1; a <= d; ++a)
                for (int b = 1; b <= 6; ++b)
                    for (int a2 = 1; a2 <= d; ++a2)
                        for (int b2 = 1; b2 <= 6; ++b2) {
                            const TubeCoord x{tube.id, a, b}, y{tube.id, a2, b2};
                            const Obj X = Obj::regular(tube.id, a, b), Y = Obj::regular(tube.id, a2, b2);
                            ++pairs;
                            if (static_cast<std::int64_t>(cat.hom_dim_mod(X, Y)) != tube_hom_dim_mod(x, y, d))
                                o.fail(std::string(name) + " mod " + to_string(x) + " -> " + to_string(y));
                            if (static_cast<std::int64_t>(cat.hom_dim_C(X, Y)) != tube_hom_dim_C(x, y, d))
                                o.fail(std::string(name) + " C " + to_string(x) + " -> " + to_string(y));
                        }
        }
    }
    if (o.pass) o.detail = std::to_string(pairs) + " pairs";
    return o;
}

Outcome ray_coray_bound() {
    Outcome o;
    int checked = 0;
    for (const char* name : {"A(2,1)", "A(3,2)"}) {
        const auto& cat = category(name);
        for (const auto& tube : cat.tubes()) {
            const int d = tube.rank;
            if (d != 2 && d != 3) continue;
            const TubeCoord m{tube.id, 1, 1};
            for (int a = 1; a <= d; ++a)
                for (int b = 1; b < d; ++b) {
                    const TubeCoord n{tube.id, a, b};
                    if (!in_ray(n, m, d) && !in_coray(n, tube_tau(m, d, 2), d)) continue;
                    ++checked;
                    const auto h = cat.hom_dim_C(Obj::regular(tube.id, 1, 1), Obj::regular(tube.id, a, b));
                    const bool top = (a == 1 && b == d - 1);
                    if (h > 2 || (h == 2) != top) o.fail(std::string(name) + " " + to_string(n) + ": " + std::to_string(h));
                }
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " objects";
    return o;
}

Outcome long_regular_homs() {
    Outcome o;
    int checked = 0;
    for (const char* name : {"A(2,1)", "A(3,2)", "A(4,1)"}) {
        const auto& cat = category(name);
        for (const auto& tube : cat.tubes()) {
            const int d = tube.rank;
            for (int a = 1; a <= d; ++a) {
                const TubeCoord n{tube.id, a, d - 1};
                for (int a2 = 1; a2 <= d; ++a2)
                    for (int b2 = 1; b2 < d; ++b2) {
                        const TubeCoord m{tube.id, a2, b2};
                        ++checked;
                        const auto h = cat.hom_dim_C(Obj::regular(tube.id, a, d - 1), Obj::regular(tube.id, a2, b2));
                        const std::size_t want = in_wing(m, tube_tau(n, d), d) ? 0 : 2;
                        if (h != want) o.fail(std::string(name) + " " + to_string(n) + " -> " + to_string(m));
                    }
            }
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " pairs";
    return o;
}

Outcome acyclic_denominators() {
    Outcome o;
    const auto& cat = category("A(2,1)");
    const auto run = paired_variables(cat, {}, 6, 10);
    const auto base = base_cluster_tilting(cat);
    int checked = 0;
    for (const auto& pv : run.variables) {
        if (!pv.object.is_module()) {
            if (pv.symbolic != minus_e(pv.object.vertex, cat.size())) o.fail("initial variable " + pv.expansion.to_string());
            continue;
        }
        ++checked;
        if (pv.symbolic != dim_vector_tau_rigid(cat, base, pv.object))
            o.fail(pv.object.label() + " vs " + pv.expansion.to_string());
    }
    if (o.pass) o.detail = std::to_string(checked) + " non-initial variables";
    return o;
}

Outcome categorical_denominators() {
    Outcome o;
    std::size_t agreed = 0;
    for (const auto& w : seed_words()) {
        const auto rep = verify_weak_denominator(category("A(2,1)"), w, 5, 10);
        for (const auto& v : rep.violations)
            if (v["kind"] != "distinctness") o.fail("word " + format_word(w) + ": " + v.dump());
        agreed += rep.counts["agreements"].get<std::size_t>();
    }
    if (o.pass) o.detail = std::to_string(seed_words().size()) + " words, " + std::to_string(agreed) + " paired variables";
    return o;
}

Outcome distinct_dimvectors() {
    Outcome o;
    const auto rep = verify_distinct_dimvectors(category("A(2,1)"), seed_words(), 10);
    if (!rep.passed()) o.fail(rep.violations.front().dump());
    else o.detail = std::to_string(rep.counts["pairsChecked"].get<std::size_t>()) + " pairs";
    return o;
}

Outcome distinct_denominators() {
    Outcome o;
    const auto& cat = category("A(2,1)");
    const auto inv = cat.enumerate_rigid(10);
    std::size_t pairs = 0;
    for (const auto& w : seed_words()) {
        const auto t = mutate_ct_along(cat, base_cluster_tilting(cat), w, 10, 40);
        std::set<Obj> shifted;
        for (const auto& s : t.summands) shifted.insert(cat.shift(s));
        std::vector<LabeledVector> items;
        for (int i = 0; i < cat.size(); ++i) items.push_back({"x" + std::to_string(i + 1), minus_e(i, cat.size())});
        for (const auto& m : inv)
            if (!shifted.count(m)) items.push_back({m.label(), denominator_from_category(cat, t, m)});
        pairs += items.size() * (items.size() - 1) / 2;
        for (const auto& [a, b] : find_coincidences(items)) o.fail(items[a].label + " and " + items[b].label);
    }
    if (o.pass) o.detail = std::to_string(pairs) + " pairs";
    return o;
}

Outcome subfactors() {
    Outcome o;
    const auto& a32 = category("A(3,2)");
    for (int a = 1; a <= 3; ++a) {
        const auto rep = classify_subfactor(a32, Obj::regular(0, a, 1), 10);
        if (rep.rank_pattern != std::vector<int>{2, 2}) o.fail("rank pattern for " + rep.deleted.label());
        if (!rep.wing.empty()) o.fail("nonempty wing for " + rep.deleted.label());
        for (const auto& c : rep.checks)
            if (!c.pass) o.fail(rep.deleted.label() + " " + c.name + ": " + c.detail);
    }
    const auto& a21 = category("A(2,1)");
    for (const auto& z : a21.enumerate_rigid(2)) {
        if (!z.is_transjective()) continue;
        const auto w = perp_inventory(a21, z, 10), w2 = perp_inventory(a21, z, 20);
        if (w.size() != w2.size()) o.fail(z.label() + ": " + std::to_string(w.size()) + " vs " + std::to_string(w2.size()));
    }
    if (o.pass) o.detail = "rank pattern {2,2}, transjective counts stable";
    return o;
}

Outcome calabi_yau_and_compatibility() {
    Outcome o;
    std::size_t sym = 0, compat = 0;
    int transjective_pairs = 0;
    for (const char* name : {"A(2,1)", "A(3,2)", "D(4)"}) {
        const auto& cat = category(name);
        const auto inv = cat.enumerate_rigid(10);
        for (std::size_t i = 0; i < inv.size(); ++i)
            for (std::size_t j = i; j < inv.size(); ++j) {
                ++sym;
                if (cat.ext1_dim_C(inv[i], inv[j]) != cat.ext1_dim_C(inv[j], inv[i]))
                    o.fail(std::string(name) + " " + inv[i].label() + ", " + inv[j].label());
            }
        std::vector<std::vector<int>> words = {{}};
        words.insert(words.end(), seed_words().begin(), seed_words().begin() + 3);
        for (const auto& w : words) {
            const auto t = mutate_ct_along(cat, base_cluster_tilting(cat), w, 10, 40);
            for (int k = 0; k < t.size(); ++k) {
                const auto mu = mutate_ct_growing(cat, t, k, 10, 40);
                const auto pair = exchange_pair(t, mu, k);
                if (!pair.x.is_transjective() || !pair.x_star.is_transjective()) continue;
                ++transjective_pairs;
                for (const auto& m : inv) {
                    ++compat;
                    if (!exchange_compatibility_check(cat, pair, m).compatible)
                        o.fail(std::string(name) + " " + m.label() + " against " + pair.x.label() + ", " + pair.x_star.label());
                }
            }
        }
    }
    if (transjective_pairs < 5) o.fail("only " + std::to_string(transjective_pairs) + " transjective exchange pairs");
    if (o.pass)
        o.detail = std::to_string(sym) + " symmetric pairs, " + std::to_string(transjective_pairs) + " exchange pairs, " +
                   std::to_string(compat) + " compatibility checks";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "mutation algebra", 1, mutation_algebra},
        {2, "Laurent phenomenon and denominator signs", 60, laurent_phenomenon},
        {3, "tube oracle equivalence", 60, tube_oracle},
        {4, "Hom_C bound on ray and coray", 0, ray_coray_bound},
        {5, "Hom_C from quasi-length d-1", 0, long_regular_homs},
        {6, "acyclic denominators equal dimension vectors", 120, acyclic_denominators},
        {7, "categorical denominators agree with symbolic ones", 300, categorical_denominators},
        {8, "distinct dimension vectors", 120, distinct_dimvectors},
        {9, "distinct denominator vectors", 120, distinct_denominators},
        {10, "subfactor inventories", 120, subfactors},
        {11, "2-CY symmetry and exchange compatibility", 120, calabi_yau_and_compatibility},
    };
    int failures = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && s > c.limit_s) o.fail("took " + std::to_string(s) + " s");
        if (!o.pass) ++failures;
        std::printf("%s %2d %s (%.2f s%s) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), s,
                    c.limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit_s)) + " s").c_str() : "",
                    o.detail.c_str());
        std::fflush(stdout);
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool total_ok = total < 600;
    std::printf("%s total %.2f s (limit 600 s)\n", total_ok ? "PASS" : "FAIL", total);
    return failures == 0 && total_ok ? 0 : 1;
}
