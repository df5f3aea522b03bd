#include "tame/laurent.hpp"

#include <algorithm>
#include <map>

#include "tame/errors.hpp"

namespace tame {

namespace {

constexpr int kExpLimit = 30000;

std::int16_t narrow_exp(int v) {
    if (v > kExpLimit || v < -kExpLimit) throw InvariantViolation("Laurent exponent overflow");
    return static_cast<std::int16_t>(v);
}

Monomial add_mono(const Monomial& a, const Monomial& b, int n) {
    Monomial r{};
    for (int i = 0; i < n; ++i) r[i] = narrow_exp(a[i] + b[i]);
    return r;
}

void canonicalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.exps < y.exps; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        BigInt c = 0;
        while (j < terms.size() && terms[j].exps == terms[i].exps) c += terms[j++].coeff;
        if (c != 0) {
            terms[out].exps = terms[i].exps;
            terms[out].coeff = std::move(c);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

void require_same(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.nvars() != b.nvars()) throw InvariantViolation("Laurent polynomials over different variable sets");
}

}  // namespace

void LaurentPolynomial::check_nvars() const {
    if (nvars_ < 0 || nvars_ > kMaxVars) throw IndexError("Laurent polynomials support at most 16 variables");
}

LaurentPolynomial LaurentPolynomial::constant(int nvars, const BigInt& c) {
    LaurentPolynomial p(nvars);
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw IndexError("variable index out of range");
    LaurentPolynomial p(nvars);
    Term t;
    t.exps[i] = 1;
    t.coeff = 1;
    p.terms_.push_back(std::move(t));
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(int nvars, const std::vector<int>& exps, const BigInt& c) {
    LaurentPolynomial p(nvars);
    if (static_cast<int>(exps.size()) != nvars) throw IndexError("exponent vector length mismatch");
    if (c == 0) return p;
    Term t;
    for (int i = 0; i < nvars; ++i) t.exps[i] = narrow_exp(exps[i]);
    t.coeff = c;
    p.terms_.push_back(std::move(t));
    return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(int nvars, std::vector<Term> terms) {
    LaurentPolynomial p(nvars);
    for (const auto& t : terms)
        for (int i = nvars; i < kMaxVars; ++i)
            if (t.exps[i] != 0) throw IndexError("exponent outside the variable range");
    canonicalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same(a, b);
    LaurentPolynomial r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->exps < j->exps)) {
            r.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->exps < i->exps) {
            r.terms_.push_back(*j++);
        } else {
            BigInt c = i->coeff + j->coeff;
            if (c != 0) r.terms_.push_back({i->exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same(a, b);
    std::vector<Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) terms.push_back({add_mono(x.exps, y.exps, a.nvars_), x.coeff * y.coeff});
    canonicalize(terms);
    LaurentPolynomial r(a.nvars_);
    r.terms_ = std::move(terms);
    return r;
}

bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                        [](const Term& x, const Term& y) {
                                            if (x.exps != y.exps) return x.exps < y.exps;
                                            return x.coeff < y.coeff;
                                        });
}

LaurentPolynomial LaurentPolynomial::shifted(const std::vector<int>& e) const {
    if (static_cast<int>(e.size()) != nvars_) throw IndexError("exponent vector length mismatch");
    LaurentPolynomial r = *this;
    for (auto& t : r.terms_)
        for (int i = 0; i < nvars_; ++i) t.exps[i] = narrow_exp(t.exps[i] + e[i]);
    return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
    LaurentPolynomial acc = constant(nvars_, 1);
    LaurentPolynomial base = *this;
    while (e != 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return acc;
}

std::vector<int> LaurentPolynomial::min_exponents() const {
    if (terms_.empty()) throw InvariantViolation("minimum exponent of the zero polynomial");
    std::vector<int> m(nvars_);
    for (int i = 0; i < nvars_; ++i) m[i] = terms_.front().exps[i];
    for (const auto& t : terms_)
        for (int i = 0; i < nvars_; ++i) m[i] = std::min<int>(m[i], t.exps[i]);
    return m;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        std::string c = t.coeff.str();
        if (k) {
            if (c[0] == '-') {
                s += " - ";
                c.erase(0, 1);
            } else {
                s += " + ";
            }
        }
        bool any = false;
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (t.exps[i] == 0) continue;
            if (any) mono += '*';
            mono += "x" + std::to_string(i + 1);
            if (t.exps[i] != 1) mono += "^" + std::to_string(t.exps[i]);
            any = true;
        }
        if (!any) {
            s += c;
        } else if (c == "1") {
            s += mono;
        } else if (c == "-1") {
            s += "-" + mono;
        } else {
            s += c + "*" + mono;
        }
    }
    return s;
}

LaurentPolynomial div_exact(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    require_same(p, q);
    const int n = p.nvars();
    if (q.is_zero()) throw InexactDivision("division by the zero polynomial");
    if (p.is_zero()) return p;

    const auto pa = p.min_exponents();
    const auto qb = q.min_exponents();
    std::vector<int> neg_a(n), neg_b(n), shift(n);
    for (int i = 0; i < n; ++i) {
        neg_a[i] = -pa[i];
        neg_b[i] = -qb[i];
        shift[i] = pa[i] - qb[i];
    }
    const LaurentPolynomial num = p.shifted(neg_a);
    const LaurentPolynomial den = q.shifted(neg_b);
    const Term& lead = den.terms().back();

    std::map<Monomial, BigInt, std::greater<>> rem;
    for (const auto& t : num.terms()) rem.emplace(t.exps, t.coeff);
    std::vector<Term> quot;
    while (!rem.empty()) {
        const auto top = rem.begin();
        Term qt;
        for (int i = 0; i < n; ++i) {
            const int e = top->first[i] - lead.exps[i];
            if (e < 0) throw InexactDivision("leading monomial not divisible: " + p.to_string() + " / " + q.to_string());
            qt.exps[i] = static_cast<std::int16_t>(e);
        }
        BigInt r;
        divide_qr(top->second, lead.coeff, qt.coeff, r);
        if (r != 0) throw InexactDivision("coefficient not divisible: " + p.to_string() + " / " + q.to_string());
        for (const auto& dt : den.terms()) {
            const Monomial m = add_mono(qt.exps, dt.exps, n);
            auto it = rem.find(m);
            if (it == rem.end()) {
                rem.emplace(m, -(qt.coeff * dt.coeff));
            } else {
                it->second -= qt.coeff * dt.coeff;
                if (it->second == 0) rem.erase(it);
            }
        }
        quot.push_back(std::move(qt));
    }
    return LaurentPolynomial::from_terms(n, std::move(quot)).shifted(shift);
}

std::vector<int> denominator_vector(const LaurentPolynomial& p) {
    if (p.is_zero()) throw InvariantViolation("denominator vector of the zero polynomial");
    auto m = p.min_exponents();
    for (auto& x : m) x = -x;
    return m;
}

}  // namespace tame
