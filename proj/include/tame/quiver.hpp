#pragma once

// Quivers, exchange matrices and recognition of extended Dynkin types.
//
// Vertices are 0-based throughout the API. Text input and serialized
// mutation words are 1-based.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tame {

struct Arrow {
    int from = 0;
    int to = 0;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Skew-symmetric integer matrix; b(i,j) = #(i->j) - #(j->i).
class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    explicit ExchangeMatrix(int n) : n_(n), b_(static_cast<std::size_t>(n) * n, 0) {}

    /// Checks skew-symmetry and a zero diagonal. Throws InvariantViolation.
    static ExchangeMatrix from_rows(const std::vector<std::vector<int>>& rows);
    static ExchangeMatrix random(int n, int max_entry, std::mt19937_64& rng);

    int size() const { return n_; }
    int operator()(int i, int j) const { return b_[static_cast<std::size_t>(i) * n_ + j]; }
    /// Sets b(i,j) = v and b(j,i) = -v.
    void set(int i, int j, int v);

    bool is_valid() const;
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
    friend auto operator<=>(const ExchangeMatrix&, const ExchangeMatrix&) = default;

private:
    int n_ = 0;
    std::vector<int> b_;
};

/// Matrix mutation at k. Throws IndexError when k is out of range.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);

/// Finite quiver without loops or oriented 2-cycles. Parallel arrows are
/// listed separately.
class Quiver {
public:
    Quiver() = default;
    Quiver(int n, std::vector<Arrow> arrows, std::string name = {});

    int size() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::string& name() const { return name_; }

    ExchangeMatrix exchange_matrix() const;
    Quiver opposite() const;
    bool is_acyclic() const;
    bool is_connected() const;
    /// Vertices in an order where every arrow points forward. Requires acyclic.
    std::vector<int> topological_order() const;

    /// Euler form on dimension vectors.
    std::int64_t euler(const std::vector<int>& d, const std::vector<int>& e) const;
    /// Coxeter transformation; the dimension vector of tau M for M
    /// indecomposable and not projective.
    std::vector<int> coxeter(const std::vector<int>& d) const;
    std::vector<int> coxeter_inverse(const std::vector<int>& d) const;

private:
    int n_ = 0;
    std::vector<Arrow> arrows_;
    std::string name_;
};

Quiver quiver_from_matrix(const ExchangeMatrix& b, std::string name = {});

/// Parses "i j" arrow lines. Throws ParseError carrying the line number.
Quiver parse_quiver_text(const std::string& text);
Quiver load_quiver_file(const std::string& path);

/// A(p,q), D(n), E6, E7, E8. Throws ParseError on unknown names.
Quiver builtin_quiver(const std::string& name);

struct AffineProfile {
    std::string type_tag;
    std::vector<int> delta;
    /// Ranks of the non-homogeneous tubes, descending.
    std::vector<int> ranks;
    /// Coefficients c with defect(x) = sum c_i x_i; negative on preprojectives.
    std::vector<int> defect_form;

    int defect(const std::vector<int>& d) const;
};

/// Connected, acyclic, with positive definite Tits form.
bool is_dynkin(const Quiver& q);

/// Throws NotExtendedDynkin for disconnected, cyclic or non-affine input.
AffineProfile affine_profile(const Quiver& q);
AffineProfile affine_profile(const ExchangeMatrix& b);

/// Comma-separated 1-based indices.
std::string format_word(const std::vector<int>& word);
std::vector<int> parse_word(const std::string& text, int n);

}  // namespace tame
