#pragma once

// Dense linear algebra over the prime field F_p, p = 2^31 - 1.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tame/simd/kernels.hpp"

namespace tame {

/// Element of F_p, stored canonically in [0, p).
class Fp {
public:
    static constexpr std::uint32_t kModulus = simd::kModulus;

    constexpr Fp() = default;
    static Fp from_int(std::int64_t v);
    static constexpr Fp raw(std::uint32_t v) { Fp r; r.v_ = v; return r; }

    std::uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b) {
        std::uint32_t s = a.v_ + b.v_;
        return raw(s >= kModulus ? s - kModulus : s);
    }
    friend Fp operator-(Fp a, Fp b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + kModulus - b.v_); }
    friend Fp operator*(Fp a, Fp b) {
        return raw(simd::reduce(static_cast<std::uint64_t>(a.v_) * b.v_));
    }
    Fp operator-() const { return raw(v_ == 0 ? 0 : kModulus - v_); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    friend bool operator==(Fp a, Fp b) = default;

    Fp pow(std::uint64_t e) const;
    /// Multiplicative inverse; undefined for zero.
    Fp inverse() const;

private:
    std::uint32_t v_ = 0;
};

/// Row-major dense matrix over F_p. Rows are contiguous so the row kernels
/// operate on them directly.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(std::size_t n);
    static Matrix random(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Fp operator()(std::size_t r, std::size_t c) const { return Fp::raw(data_[r * cols_ + c]); }
    void set(std::size_t r, std::size_t c, Fp v) { data_[r * cols_ + c] = v.value(); }
    void add(std::size_t r, std::size_t c, Fp v) { set(r, c, (*this)(r, c) + v); }

    std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    Matrix transpose() const;
    Matrix column(std::size_t c) const;
    /// Columns [first, first + count).
    Matrix columns(std::size_t first, std::size_t count) const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    /// Writes `block` with its top-left corner at (r, c).
    void place(std::size_t r, std::size_t c, const Matrix& block);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> data_;
};

Matrix hconcat(const std::vector<Matrix>& blocks, std::size_t rows);
Matrix scaled(const Matrix& m, Fp c);

/// Reduced row echelon form computed in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Columns form a basis of { x : a x = 0 }.
Matrix nullspace(const Matrix& a);

/// Indices of standard basis vectors e_i completing the column span of
/// `span` to the whole ambient space (dimension span.rows()).
std::vector<std::size_t> complement_coordinates(const Matrix& span);

/// Greedy selection: indices of columns of `candidates` that, added to the
/// column span of `base`, are linearly independent modulo it.
std::vector<std::size_t> independent_columns_modulo(const Matrix& base, const Matrix& candidates);

/// Solves basis * x = target for each column of target, where basis has
/// linearly independent columns. Throws if some column is outside the span.
Matrix coordinates_in_basis(const Matrix& basis, const Matrix& target);

}  // namespace tame
