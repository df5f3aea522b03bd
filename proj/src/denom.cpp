#include "tame/denom.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tame/errors.hpp"
#include "tame/seeds.hpp"

namespace tame {

std::vector<int> denominator_from_category(const ClusterCategory& cat, const ClusterTiltingObject& t, const IndRigidObject& m) {
    const IndRigidObject mc = cat.canonical(m);
    for (const auto& s : t.summands)
        if (cat.shift(s) == mc) throw MIsShiftedSummand(m.label() + " is the shift of summand " + s.label());
    std::vector<int> d;
    for (const auto& s : t.summands) {
        int h = static_cast<int>(cat.hom_dim_C(s, mc));
        if (s.is_regular() && mc.is_regular() && s.coord.tube == mc.coord.tube) {
            const int r = cat.tube_rank(s.coord.tube);
            if (r >= 2 && s.coord.b == r - 1 && !in_wing(mc.coord, tube_tau(s.coord, r), r)) --h;
        }
        if (h < 0) throw InvariantViolation("negative denominator entry for " + m.label());
        d.push_back(h);
    }
    return d;
}

std::vector<std::pair<std::size_t, std::size_t>> find_coincidences(const std::vector<LabeledVector>& items) {
    std::map<std::vector<int>, std::vector<std::size_t>> by_vec;
    for (std::size_t i = 0; i < items.size(); ++i) by_vec[items[i].vec].push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [v, idx] : by_vec)
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b) out.emplace_back(idx[a], idx[b]);
    std::sort(out.begin(), out.end());
    return out;
}

ordered_json VerificationReport::to_json() const {
    ordered_json j;
    j["name"] = name;
    j["status"] = status();
    j["parameters"] = parameters;
    j["windowUsed"] = window_used;
    j["counts"] = counts;
    j["violations"] = violations;
    if (!uncovered.empty()) j["uncovered"] = uncovered;
    j["timingMs"] = timing_ms ? ordered_json(*timing_ms) : ordered_json(nullptr);
    return j;
}

ClusterTiltingObject mutate_ct_along(const ClusterCategory& cat, ClusterTiltingObject t, const std::vector<int>& word,
                                     int window, int max_window, int* window_used) {
    for (int k : word) {
        int used = window;
        t = mutate_ct_growing(cat, t, k, window, max_window, &used).result;
        if (window_used) *window_used = std::max(*window_used, used);
    }
    return t;
}

namespace {

std::string word_string(const std::vector<int>& w) { return w.empty() ? "()" : format_word(w); }

ordered_json vec_json(const std::vector<int>& v) { return ordered_json(v); }

std::vector<int> minus_e(int i, int n) {
    std::vector<int> v(n, 0);
    v[i] = -1;
    return v;
}

int max_window_for(int w) { return std::max(4, 4 * w); }

}  // namespace

PairingRun paired_variables(const ClusterCategory& cat, const std::vector<int>& word, int depth, int window) {
    PairingRun run;
    run.window_used = window;
    const int max_w = max_window_for(window);
    run.rerooted = mutate_ct_along(cat, base_cluster_tilting(cat), word, window, max_w, &run.window_used);

    const Seed root = Seed::initial(run.rerooted.matrix);
    const Exploration ex = explore(root, depth);

    // Complement searches repeat across words; memo by (summands, k).
    std::map<std::pair<std::vector<IndRigidObject>, int>, IndRigidObject> memo;
    std::map<std::vector<int>, ClusterTiltingObject> at_word;
    at_word.emplace(std::vector<int>{}, run.rerooted);
    std::set<std::pair<IndRigidObject, std::string>> seen;

    for (const Seed& s : ex.seeds) {
        auto it = at_word.find(s.history);
        if (it == at_word.end()) {
            std::vector<int> prefix(s.history.begin(), s.history.end() - 1);
            const ClusterTiltingObject& parent = at_word.at(prefix);
            const int k = s.history.back();
            const auto key = std::make_pair(parent.summands, k);
            ClusterTiltingObject next = parent;
            auto m = memo.find(key);
            if (m == memo.end()) {
                int used = window;
                Mutation mu = mutate_ct_growing(cat, parent, k, window, max_w, &used);
                run.window_used = std::max(run.window_used, used);
                m = memo.emplace(key, mu.inserted).first;
            }
            next.summands[k] = m->second;
            next.matrix = mutate_matrix(parent.matrix, k);
            next.word.push_back(k);
            it = at_word.emplace(s.history, std::move(next)).first;
        }
        const ClusterTiltingObject& t = it->second;
        for (int j = 0; j < s.size(); ++j) {
            const IndRigidObject obj = cat.shift(t.summands[j]);
            const LaurentPolynomial& p = s.variable(j);
            if (!seen.emplace(obj, p.to_string()).second) continue;
            run.variables.push_back({s.history, j, obj, p, denominator_vector(p)});
        }
    }
    return run;
}

VerificationReport verify_distinct_dimvectors(const ClusterCategory& cat, const std::vector<std::vector<int>>& words, int window) {
    VerificationReport rep;
    rep.name = "dimvec";
    rep.window_used = window;
    rep.parameters["window"] = window;
    ordered_json wj = ordered_json::array();
    for (const auto& w : words) wj.push_back(word_string(w));
    rep.parameters["words"] = wj;

    const auto inventory = cat.enumerate_rigid(window);
    std::size_t objects = 0, pairs = 0;
    for (const auto& w : words) {
        const ClusterTiltingObject t =
            mutate_ct_along(cat, base_cluster_tilting(cat), w, window, max_window_for(window), &rep.window_used);
        std::set<IndRigidObject> shifted;
        for (const auto& s : t.summands) shifted.insert(cat.shift(s));
        std::vector<LabeledVector> items;
        for (const auto& m : inventory) {
            if (shifted.count(m)) continue;
            items.push_back({m.label(), dim_vector_tau_rigid(cat, t, m)});
        }
        objects += items.size();
        pairs += items.size() * (items.size() - 1) / 2;
        for (const auto& [a, b] : find_coincidences(items)) {
            ordered_json v;
            v["word"] = word_string(w);
            v["tilting"] = t.describe();
            v["first"] = items[a].label;
            v["second"] = items[b].label;
            v["dimVector"] = vec_json(items[a].vec);
            rep.violations.push_back(std::move(v));
        }
    }
    rep.counts["tiltingObjects"] = words.size();
    rep.counts["rigidObjects"] = inventory.size();
    rep.counts["modulesChecked"] = objects;
    rep.counts["pairsChecked"] = pairs;
    return rep;
}

VerificationReport verify_weak_denominator(const ClusterCategory& cat, const std::vector<int>& word, int depth, int window) {
    VerificationReport rep;
    rep.name = "denom";
    rep.parameters["word"] = word_string(word);
    rep.parameters["depth"] = depth;
    rep.parameters["window"] = window;

    const PairingRun run = paired_variables(cat, word, depth, window);
    const ClusterTiltingObject& t = run.rerooted;
    const int n = t.size();
    std::map<IndRigidObject, int> initial_index;
    for (int i = 0; i < n; ++i) initial_index[cat.shift(t.summands[i])] = i;

    // Agreement of symbolic and categorical denominators on paired variables.
    std::map<IndRigidObject, std::string> expansion_of;
    std::map<std::string, IndRigidObject> object_of;
    std::size_t agreed = 0;
    for (const auto& pv : run.variables) {
        const std::string ps = pv.expansion.to_string();
        auto [eo, fresh_obj] = expansion_of.emplace(pv.object, ps);
        auto [oe, fresh_exp] = object_of.emplace(ps, pv.object);
        if (!fresh_obj && eo->second != ps) {
            ordered_json v;
            v["kind"] = "pairing";
            v["object"] = pv.object.label();
            v["word"] = word_string(pv.word);
            v["detail"] = "object paired with two different variables";
            rep.violations.push_back(std::move(v));
        }
        if (!fresh_exp && !(oe->second == pv.object)) {
            ordered_json v;
            v["kind"] = "pairing";
            v["object"] = pv.object.label();
            v["other"] = oe->second.label();
            v["word"] = word_string(pv.word);
            v["detail"] = "variable paired with two different objects";
            rep.violations.push_back(std::move(v));
        }
        auto ii = initial_index.find(pv.object);
        const std::vector<int> categorical =
            ii != initial_index.end() ? minus_e(ii->second, n) : denominator_from_category(cat, t, pv.object);
        if (categorical == pv.symbolic) {
            ++agreed;
        } else {
            ordered_json v;
            v["kind"] = "agreement";
            v["object"] = pv.object.label();
            v["word"] = word_string(pv.word);
            v["index"] = pv.index + 1;
            v["variable"] = pv.expansion.to_string();
            v["symbolic"] = vec_json(pv.symbolic);
            v["categorical"] = vec_json(categorical);
            rep.violations.push_back(std::move(v));
        }
    }

    // Distinctness over the whole inventory, initial variables included.
    std::vector<LabeledVector> items;
    for (int i = 0; i < n; ++i) items.push_back({"x" + std::to_string(i + 1), minus_e(i, n)});
    const auto inventory = cat.enumerate_rigid(window);
    for (const auto& m : inventory) {
        if (initial_index.count(m)) continue;
        items.push_back({m.label(), denominator_from_category(cat, t, m)});
    }
    for (const auto& [a, b] : find_coincidences(items)) {
        ordered_json v;
        v["kind"] = "distinctness";
        v["first"] = items[a].label;
        v["second"] = items[b].label;
        v["denominator"] = vec_json(items[a].vec);
        rep.violations.push_back(std::move(v));
    }

    rep.window_used = run.window_used;
    rep.counts["variables"] = run.variables.size();
    rep.counts["agreements"] = agreed;
    rep.counts["rigidObjects"] = inventory.size();
    rep.counts["pairsChecked"] = items.size() * (items.size() - 1) / 2;
    return rep;
}

}  // namespace tame
