#include "tame/quiver.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>

#include "tame/errors.hpp"

namespace tame {

ExchangeMatrix ExchangeMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    ExchangeMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n_; ++i) {
        if (static_cast<int>(rows[i].size()) != m.n_) throw InvariantViolation("exchange matrix is not square");
        for (int j = 0; j < m.n_; ++j) m.b_[static_cast<std::size_t>(i) * m.n_ + j] = rows[i][j];
    }
    if (!m.is_valid()) throw InvariantViolation("exchange matrix is not skew-symmetric");
    return m;
}

ExchangeMatrix ExchangeMatrix::random(int n, int max_entry, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-max_entry, max_entry);
    ExchangeMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.set(i, j, dist(rng));
    return m;
}

void ExchangeMatrix::set(int i, int j, int v) {
    b_[static_cast<std::size_t>(i) * n_ + j] = v;
    b_[static_cast<std::size_t>(j) * n_ + i] = -v;
}

bool ExchangeMatrix::is_valid() const {
    for (int i = 0; i < n_; ++i) {
        if ((*this)(i, i) != 0) return false;
        for (int j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
    return true;
}

std::vector<std::vector<int>> ExchangeMatrix::rows() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
    const int n = b.size();
    if (k < 0 || k >= n) throw IndexError("mutation index " + std::to_string(k + 1) + " out of range 1.." + std::to_string(n));
    ExchangeMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int v;
            if (i == k || j == k) {
                v = -b(i, j);
            } else {
                v = b(i, j) + (std::abs(b(i, k)) * b(k, j) + b(i, k) * std::abs(b(k, j))) / 2;
            }
            out.set(i, j, v);
        }
    }
    return out;
}

Quiver::Quiver(int n, std::vector<Arrow> arrows, std::string name)
    : n_(n), arrows_(std::move(arrows)), name_(std::move(name)) {
    for (const auto& a : arrows_) {
        if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_) throw IndexError("arrow endpoint out of range");
        if (a.from == a.to) throw InvariantViolation("quiver has a loop");
    }
    for (const auto& a : arrows_) {
        const bool both = std::any_of(arrows_.begin(), arrows_.end(),
                                      [&](const Arrow& c) { return c.from == a.to && c.to == a.from; });
        if (both) throw InvariantViolation("quiver has an oriented 2-cycle");
    }
}

ExchangeMatrix Quiver::exchange_matrix() const {
    ExchangeMatrix b(n_);
    std::vector<int> count(static_cast<std::size_t>(n_) * n_, 0);
    for (const auto& a : arrows_) ++count[static_cast<std::size_t>(a.from) * n_ + a.to];
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            b.set(i, j, count[static_cast<std::size_t>(i) * n_ + j] - count[static_cast<std::size_t>(j) * n_ + i]);
    return b;
}

Quiver Quiver::opposite() const {
    std::vector<Arrow> rev;
    rev.reserve(arrows_.size());
    for (const auto& a : arrows_) rev.push_back({a.to, a.from});
    return Quiver(n_, std::move(rev), name_.empty() ? std::string() : name_ + "^op");
}

std::vector<int> Quiver::topological_order() const {
    std::vector<int> indeg(n_, 0);
    for (const auto& a : arrows_) ++indeg[a.to];
    std::vector<int> order;
    std::vector<int> ready;
    for (int v = n_ - 1; v >= 0; --v)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        const int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (const auto& a : arrows_)
            if (a.from == v && --indeg[a.to] == 0) ready.push_back(a.to);
    }
    return order;
}

bool Quiver::is_acyclic() const { return static_cast<int>(topological_order().size()) == n_; }

bool Quiver::is_connected() const {
    if (n_ == 0) return false;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (const auto& a : arrows_) parent[find(a.from)] = find(a.to);
    for (int v = 1; v < n_; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

std::int64_t Quiver::euler(const std::vector<int>& d, const std::vector<int>& e) const {
    std::int64_t s = 0;
    for (int i = 0; i < n_; ++i) s += static_cast<std::int64_t>(d[i]) * e[i];
    for (const auto& a : arrows_) s -= static_cast<std::int64_t>(d[a.from]) * e[a.to];
    return s;
}

std::vector<int> Quiver::coxeter(const std::vector<int>& d) const {
    std::vector<int> w(d);
    for (const auto& a : arrows_) w[a.to] -= d[a.from];
    const auto order = topological_order();
    std::vector<int> z(n_, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int i = *it;
        int v = w[i];
        for (const auto& a : arrows_)
            if (a.from == i) v += z[a.to];
        z[i] = v;
    }
    for (auto& x : z) x = -x;
    return z;
}

std::vector<int> Quiver::coxeter_inverse(const std::vector<int>& d) const {
    std::vector<int> y(d);
    for (const auto& a : arrows_) y[a.from] -= d[a.to];
    std::vector<int> z(n_, 0);
    for (const int i : topological_order()) {
        int v = y[i];
        for (const auto& a : arrows_)
            if (a.to == i) v += z[a.from];
        z[i] = v;
    }
    for (auto& x : z) x = -x;
    return z;
}

Quiver quiver_from_matrix(const ExchangeMatrix& b, std::string name) {
    std::vector<Arrow> arrows;
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            for (int c = 0; c < b(i, j); ++c) arrows.push_back({i, j});
    return Quiver(b.size(), std::move(arrows), std::move(name));
}

Quiver parse_quiver_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = 0;
    std::vector<Arrow> arrows;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (!(ls >> b) || (ls >> extra)) throw ParseError("expected two vertex indices", lineno);
        auto parse_vertex = [&](const std::string& tok) {
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }) ||
                tok.size() > 6)
                throw ParseError("bad vertex index '" + tok + "'", lineno);
            const int v = std::stoi(tok);
            if (v < 1) throw ParseError("vertex indices are 1-based", lineno);
            return v;
        };
        const int from = parse_vertex(a);
        const int to = parse_vertex(b);
        if (from == to) throw ParseError("loop at vertex " + a, lineno);
        for (const auto& prev : arrows)
            if (prev.from == to - 1 && prev.to == from - 1) throw ParseError("oriented 2-cycle " + a + " " + b, lineno);
        arrows.push_back({from - 1, to - 1});
        n = std::max({n, from, to});
    }
    if (arrows.empty()) throw ParseError("quiver has no arrows");
    return Quiver(n, std::move(arrows));
}

Quiver load_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open quiver file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_quiver_text(ss.str());
}

namespace {

// Arms listed from the center outwards; arrows point toward the center.
Quiver star_quiver(const std::vector<int>& arms, const std::string& name) {
    std::vector<Arrow> arrows;
    int next = 1;
    for (int len : arms) {
        int prev = 0;
        for (int s = 0; s < len; ++s) {
            arrows.push_back({next, prev});
            prev = next++;
        }
    }
    return Quiver(next, std::move(arrows), name);
}

}  // namespace

Quiver builtin_quiver(const std::string& name) {
    static const std::regex a_re(R"(\s*A\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    static const std::regex d_re(R"(\s*D\s*\(\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (std::regex_match(name, m, a_re)) {
        const int p = std::stoi(m[1]);
        const int q = std::stoi(m[2]);
        if (p < q || q < 1) throw ParseError("A(p,q) needs p >= q >= 1: " + name);
        std::vector<Arrow> arrows;
        for (int v = 0; v < p; ++v) arrows.push_back({v, v + 1});
        int prev = 0;
        for (int s = 0; s + 1 < q; ++s) {
            arrows.push_back({prev, p + 1 + s});
            prev = p + 1 + s;
        }
        arrows.push_back({prev, p});
        return Quiver(p + q, std::move(arrows), "A(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
    if (std::regex_match(name, m, d_re)) {
        const int n = std::stoi(m[1]);
        if (n < 4) throw ParseError("D(n) needs n >= 4: " + name);
        const std::string tag = "D(" + std::to_string(n) + ")";
        if (n == 4) return star_quiver({1, 1, 1, 1}, tag);
        std::vector<Arrow> arrows;
        const int path = n - 3;
        for (int v = 0; v + 1 < path; ++v) arrows.push_back({v, v + 1});
        arrows.push_back({path, 0});
        arrows.push_back({path + 1, 0});
        arrows.push_back({path - 1, path + 2});
        arrows.push_back({path - 1, path + 3});
        return Quiver(n + 1, std::move(arrows), tag);
    }
    if (name == "E6") return star_quiver({2, 2, 2}, name);
    if (name == "E7") return star_quiver({1, 3, 3}, name);
    if (name == "E8") return star_quiver({1, 2, 5}, name);
    throw ParseError("unknown builtin quiver '" + name + "'");
}

int AffineProfile::defect(const std::vector<int>& d) const {
    int s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += defect_form[i] * d[i];
    return s;
}

namespace {

using Q64 = boost::rational<long long>;

// Primitive positive generator of the kernel of 2I - A; empty if the
// kernel is not one-dimensional or has no positive generator.
std::vector<int> radical_generator(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<std::vector<Q64>> m(n, std::vector<Q64>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Q64((i == j ? 2 : 0) - adj[i][j]);
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int sel = r;
        while (sel < n && m[sel][c].numerator() == 0) ++sel;
        if (sel == n) continue;
        std::swap(m[sel], m[r]);
        const Q64 inv = Q64(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || m[i][c].numerator() == 0) continue;
            const Q64 f = m[i][c];
            for (int j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    if (r != n - 1) return {};
    int free = 0;
    while (std::find(pivcol.begin(), pivcol.end(), free) != pivcol.end()) ++free;
    std::vector<Q64> x(n, 0);
    x[free] = 1;
    for (int i = 0; i < r; ++i) x[pivcol[i]] = -m[i][free];
    long long lcm = 1;
    for (const auto& v : x) lcm = std::lcm(lcm, v.denominator());
    std::vector<long long> ints(n);
    long long g = 0;
    for (int i = 0; i < n; ++i) {
        ints[i] = (x[i] * lcm).numerator();
        g = std::gcd(g, std::llabs(ints[i]));
    }
    const long long sign = ints[0] < 0 ? -1 : 1;
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) {
        out[i] = static_cast<int>(sign * ints[i] / g);
        if (out[i] <= 0) return {};
    }
    return out;
}

}  // namespace

bool is_dynkin(const Quiver& q) {
    if (q.size() == 0 || !q.is_acyclic() || !q.is_connected()) return false;
    const int n = q.size();
    // Leading principal minors of the Cartan matrix, by fraction-free elimination.
    std::vector<std::vector<__int128>> c(n, std::vector<__int128>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (const auto& a : q.arrows()) {
        c[a.from][a.to] -= 1;
        c[a.to][a.from] -= 1;
    }
    __int128 prev = 1;
    for (int k = 0; k < n; ++k) {
        if (c[k][k] <= 0) return false;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) c[i][j] = (c[k][k] * c[i][j] - c[i][k] * c[k][j]) / prev;
        prev = c[k][k];
    }
    return true;
}

AffineProfile affine_profile(const Quiver& q) {
    const int n = q.size();
    if (n < 2 || !q.is_connected()) throw NotExtendedDynkin("quiver is not connected");
    if (!q.is_acyclic()) throw NotExtendedDynkin("quiver has an oriented cycle");
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    for (const auto& a : q.arrows()) {
        ++adj[a.from][a.to];
        ++adj[a.to][a.from];
    }
    std::vector<int> deg(n, 0);
    int max_mult = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            deg[i] += adj[i][j];
            max_mult = std::max(max_mult, adj[i][j]);
        }
    const int edges = static_cast<int>(q.arrows().size());

    AffineProfile prof;
    auto reject = [&]() -> AffineProfile {
        throw NotExtendedDynkin("underlying graph is not extended Dynkin");
    };

    if (n == 2 && edges == 2 && max_mult == 2) {
        prof.type_tag = "A(1,1)";
    } else if (max_mult > 1) {
        return reject();
    } else if (edges == n) {
        if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 2; })) return reject();
        int p = 0, qq = 0;
        int prev = -1, cur = 0;
        for (int step = 0; step < n; ++step) {
            int next = -1;
            for (int v = 0; v < n; ++v)
                if (adj[cur][v] && v != prev) {
                    next = v;
                    break;
                }
            const bool forward = std::any_of(q.arrows().begin(), q.arrows().end(),
                                             [&](const Arrow& a) { return a.from == cur && a.to == next; });
            (forward ? p : qq) += 1;
            prev = cur;
            cur = next;
        }
        if (p < qq) std::swap(p, qq);
        prof.type_tag = "A(" + std::to_string(p) + "," + std::to_string(qq) + ")";
        for (int r : {p, qq})
            if (r > 1) prof.ranks.push_back(r);
    } else if (edges == n - 1) {
        std::vector<int> branch;
        for (int v = 0; v < n; ++v) {
            if (deg[v] > 4 || (deg[v] == 4 && n != 5)) return reject();
            if (deg[v] >= 3) branch.push_back(v);
        }
        auto leaves_around = [&](int v) {
            int c = 0;
            for (int u = 0; u < n; ++u)
                if (adj[v][u] && deg[u] == 1) ++c;
            return c;
        };
        if (branch.size() == 1 && deg[branch[0]] == 4) {
            prof.type_tag = "D(4)";
            prof.ranks = {2, 2, 2};
        } else if (branch.size() == 2) {
            if (leaves_around(branch[0]) < 2 || leaves_around(branch[1]) < 2) return reject();
            prof.type_tag = "D(" + std::to_string(n - 1) + ")";
            prof.ranks = {n - 3, 2, 2};
        } else if (branch.size() == 1) {
            const int c = branch[0];
            std::vector<int> arms;
            for (int u = 0; u < n; ++u) {
                if (!adj[c][u]) continue;
                int len = 1, prev = c, cur = u;
                while (deg[cur] == 2) {
                    int next = 0;
                    while (!(adj[cur][next] && next != prev)) ++next;
                    prev = cur;
                    cur = next;
                    ++len;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            if (arms == std::vector<int>{2, 2, 2}) {
                prof.type_tag = "E6";
                prof.ranks = {3, 3, 2};
            } else if (arms == std::vector<int>{1, 3, 3}) {
                prof.type_tag = "E7";
                prof.ranks = {4, 3, 2};
            } else if (arms == std::vector<int>{1, 2, 5}) {
                prof.type_tag = "E8";
                prof.ranks = {5, 3, 2};
            } else {
                return reject();
            }
        } else {
            return reject();
        }
    } else {
        return reject();
    }
    std::sort(prof.ranks.rbegin(), prof.ranks.rend());

    prof.delta = radical_generator(n, adj);
    if (prof.delta.empty()) return reject();
    prof.defect_form.assign(n, 0);
    for (int j = 0; j < n; ++j) prof.defect_form[j] = prof.delta[j];
    for (const auto& a : q.arrows()) prof.defect_form[a.to] -= prof.delta[a.from];
    return prof;
}

AffineProfile affine_profile(const ExchangeMatrix& b) { return affine_profile(quiver_from_matrix(b)); }

std::string format_word(const std::vector<int>& word) {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(word[i] + 1);
    }
    return s;
}

std::vector<int> parse_word(const std::string& text, int n) {
    std::vector<int> word;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
        if (tok.empty()) {
            if (text.find_first_not_of(" \t") == std::string::npos) break;
            throw ParseError("empty entry in mutation word '" + text + "'");
        }
        if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }) || tok.size() > 6)
            throw ParseError("bad mutation index '" + tok + "'");
        const int k = std::stoi(tok);
        if (k < 1 || k > n) throw ParseError("mutation index " + tok + " out of range 1.." + std::to_string(n));
        word.push_back(k - 1);
    }
    return word;
}

}  // namespace tame
