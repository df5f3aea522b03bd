#include "tame/seeds.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "tame/errors.hpp"

namespace tame {

Seed Seed::initial(const ExchangeMatrix& b) {
    Seed s{b, {}, {}};
    for (int i = 0; i < b.size(); ++i)
        s.cluster.push_back(std::make_shared<const LaurentPolynomial>(LaurentPolynomial::variable(b.size(), i)));
    return s;
}

bool operator==(const Seed& a, const Seed& b) {
    if (!(a.b == b.b) || a.cluster.size() != b.cluster.size()) return false;
    for (std::size_t i = 0; i < a.cluster.size(); ++i)
        if (a.cluster[i] != b.cluster[i] && !(*a.cluster[i] == *b.cluster[i])) return false;
    return true;
}

namespace {

LaurentPolynomial exchange_numerator(const ExchangeMatrix& b, const std::vector<Variable>& cluster, int k) {
    const int n = b.size();
    LaurentPolynomial plus = LaurentPolynomial::constant(n, 1);
    LaurentPolynomial minus = LaurentPolynomial::constant(n, 1);
    for (int i = 0; i < n; ++i) {
        const int e = b(i, k);
        if (e > 0) plus = plus * cluster[i]->pow(static_cast<unsigned>(e));
        if (e < 0) minus = minus * cluster[i]->pow(static_cast<unsigned>(-e));
    }
    return plus + minus;
}

}  // namespace

Seed mutate_seed(const Seed& s, int k) {
    if (k < 0 || k >= s.size()) throw IndexError("mutation index " + std::to_string(k + 1) + " out of range 1.." + std::to_string(s.size()));
    Seed out{mutate_matrix(s.b, k), s.cluster, s.history};
    out.cluster[k] = std::make_shared<const LaurentPolynomial>(div_exact(exchange_numerator(s.b, s.cluster, k), *s.cluster[k]));
    out.history.push_back(k);
    return out;
}

Seed mutate_along(const Seed& s, const std::vector<int>& word) {
    Seed cur = s;
    for (int k : word) cur = mutate_seed(cur, k);
    return cur;
}

namespace {

struct PolyHash {
    std::size_t operator()(const LaurentPolynomial& p) const {
        std::size_t h = p.terms().size();
        for (const auto& t : p.terms()) {
            for (int i = 0; i < p.nvars(); ++i) h = h * 1000003u + static_cast<std::uint16_t>(t.exps[i]);
            h = h * 31u + static_cast<std::size_t>(static_cast<long long>(t.coeff % 1000000007));
        }
        return h;
    }
};

// Interned variables and labeled seeds; children are memoized so each
// distinct labeled seed is mutated at most once per direction.
class SeedGraph {
public:
    explicit SeedGraph(const Seed& root) : n_(root.size()) {
        std::vector<int> ids;
        for (const auto& v : root.cluster) ids.push_back(intern(v));
        root_ = node_for(root.b, ids);
    }

    int root() const { return root_; }
    std::size_t node_count() const { return nodes_.size(); }

    int child(int node, int k) {
        if (nodes_[node].children[k] >= 0) return nodes_[node].children[k];
        const Node& cur = nodes_[node];
        std::vector<Variable> cluster;
        for (int id : cur.ids) cluster.push_back(vars_[id]);
        auto fresh = std::make_shared<const LaurentPolynomial>(div_exact(exchange_numerator(cur.b, cluster, k), *cluster[k]));
        std::vector<int> ids = cur.ids;
        ids[k] = intern(fresh);
        const ExchangeMatrix b = mutate_matrix(cur.b, k);
        const int c = node_for(b, ids);
        nodes_[node].children[k] = c;
        nodes_[c].children[k] = node;
        return c;
    }

    Seed seed(int node, std::vector<int> history) const {
        Seed s{nodes_[node].b, {}, std::move(history)};
        for (int id : nodes_[node].ids) s.cluster.push_back(vars_[id]);
        return s;
    }

    const std::vector<Variable>& variables() const { return vars_; }

private:
    struct Node {
        ExchangeMatrix b;
        std::vector<int> ids;
        std::vector<int> children;
    };

    int intern(const Variable& v) {
        auto [it, inserted] = index_.emplace(*v, static_cast<int>(vars_.size()));
        if (inserted) vars_.push_back(v);
        return it->second;
    }

    int node_for(const ExchangeMatrix& b, const std::vector<int>& ids) {
        auto key = std::make_pair(b, ids);
        auto it = seeds_.find(key);
        if (it != seeds_.end()) return it->second;
        const int id = static_cast<int>(nodes_.size());
        nodes_.push_back({b, ids, std::vector<int>(n_, -1)});
        seeds_.emplace(std::move(key), id);
        return id;
    }

    int n_;
    int root_ = 0;
    std::vector<Node> nodes_;
    std::vector<Variable> vars_;
    std::unordered_map<LaurentPolynomial, int, PolyHash> index_;
    std::map<std::pair<ExchangeMatrix, std::vector<int>>, int> seeds_;
};

}  // namespace

Exploration explore(const Seed& root, int depth) {
    if (depth < 0) throw IndexError("negative exploration depth");
    SeedGraph graph(root);
    struct Item {
        std::vector<int> word;
        int node;
    };
    std::vector<Item> all{{{}, graph.root()}};
    std::vector<Item> frontier = all;
    for (int level = 0; level < depth; ++level) {
        std::vector<Item> next;
        for (const auto& it : frontier) {
            for (int k = 0; k < root.size(); ++k) {
                if (!it.word.empty() && it.word.back() == k) continue;
                Item c{it.word, graph.child(it.node, k)};
                c.word.push_back(k);
                next.push_back(std::move(c));
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const Item& a, const Item& b) { return a.word < b.word; });

    Exploration out;
    out.seeds.reserve(all.size());
    for (auto& it : all) {
        std::vector<int> history = root.history;
        history.insert(history.end(), it.word.begin(), it.word.end());
        out.seeds.push_back(graph.seed(it.node, std::move(history)));
    }
    for (const auto& v : graph.variables()) out.variables.push_back(*v);
    std::sort(out.variables.begin(), out.variables.end());
    out.distinct_seeds = graph.node_count();
    return out;
}

bool rerooting_consistent(const Seed& root, const Seed& s) {
    const int n = root.size();
    if (s.history.size() < root.history.size()) return false;
    std::vector<int> word(s.history.begin() + static_cast<std::ptrdiff_t>(root.history.size()), s.history.end());
    std::reverse(word.begin(), word.end());
    const Seed back = mutate_along(Seed::initial(s.b), word);
    if (!(back.b == root.b)) return false;
    for (int i = 0; i < n; ++i) {
        const LaurentPolynomial& f = back.variable(i);
        const auto mins = f.min_exponents();
        std::vector<int> lift(n);
        for (int j = 0; j < n; ++j) lift[j] = std::max(0, -mins[j]);
        // f * y^lift is a polynomial N(y); check N(s) = x_i * prod s_j^lift_j.
        const LaurentPolynomial num = f.shifted(lift);
        LaurentPolynomial lhs(n);
        for (const auto& t : num.terms()) {
            LaurentPolynomial term = LaurentPolynomial::constant(n, t.coeff);
            for (int j = 0; j < n; ++j)
                if (t.exps[j] > 0) term = term * s.variable(j).pow(static_cast<unsigned>(t.exps[j]));
            lhs = lhs + term;
        }
        LaurentPolynomial rhs = root.variable(i);
        for (int j = 0; j < n; ++j)
            if (lift[j] > 0) rhs = rhs * s.variable(j).pow(static_cast<unsigned>(lift[j]));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace tame
