#include "tame/linalg.hpp"

#include <algorithm>
#include <utility>

#include "tame/errors.hpp"

namespace tame {

Fp Fp::from_int(std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(kModulus);
    if (r < 0) r += kModulus;
    return raw(static_cast<std::uint32_t>(r));
}

Fp Fp::pow(std::uint64_t e) const {
    Fp base = *this;
    Fp acc = raw(1);
    while (e != 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Fp Fp::inverse() const { return pow(kModulus - 2); }

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Fp::raw(1));
    return m;
}

Matrix Matrix::random(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, Fp::kModulus - 1);
    Matrix m(rows, cols);
    for (auto& x : m.data_) x = dist(rng);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
}

Matrix Matrix::column(std::size_t c) const { return columns(c, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
    Matrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c) out.data_[r * count + c] = data_[r * cols_ + first + c];
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvariantViolation("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    const auto& k = simd::active();
    for (std::size_t r = 0; r < a.rows_; ++r) {
        std::uint32_t* dst = out.data_.data() + r * out.cols_;
        for (std::size_t i = 0; i < a.cols_; ++i) {
            const std::uint32_t f = a.data_[r * a.cols_ + i];
            if (f != 0) k.axpy(dst, b.data_.data() + i * b.cols_, f, b.cols_);
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvariantViolation("matrix sum shape mismatch");
    Matrix out = a;
    simd::active().axpy(out.data_.data(), b.data_.data(), 1, out.data_.size());
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvariantViolation("matrix difference shape mismatch");
    Matrix out = a;
    simd::active().axpy(out.data_.data(), b.data_.data(), Fp::kModulus - 1, out.data_.size());
    return out;
}

void Matrix::place(std::size_t r, std::size_t c, const Matrix& block) {
    for (std::size_t i = 0; i < block.rows_; ++i)
        std::copy_n(block.data_.data() + i * block.cols_, block.cols_, data_.data() + (r + i) * cols_ + c);
}

Matrix hconcat(const std::vector<Matrix>& blocks, std::size_t rows) {
    std::size_t cols = 0;
    for (const auto& b : blocks) cols += b.cols();
    Matrix out(rows, cols);
    std::size_t c = 0;
    for (const auto& b : blocks) {
        if (b.cols() == 0) continue;
        out.place(0, c, b);
        c += b.cols();
    }
    return out;
}

Matrix scaled(const Matrix& m, Fp c) {
    Matrix out = m;
    for (std::size_t r = 0; r < out.rows(); ++r) simd::active().scale(out.row(r).data(), c.value(), out.cols());
    return out;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
    const auto& k = simd::active();
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
        std::size_t sel = prow;
        while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != prow) {
            auto a = m.row(sel);
            auto b = m.row(prow);
            std::swap_ranges(a.begin() + c, a.end(), b.begin() + c);
        }
        const std::size_t width = m.cols() - c;
        std::uint32_t* pivot_row = m.row(prow).data() + c;
        k.scale(pivot_row, m(prow, c).inverse().value(), width);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == prow) continue;
            const Fp f = m(r, c);
            if (f.is_zero()) continue;
            k.axpy(m.row(r).data() + c, pivot_row, (-f).value(), width);
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

Matrix nullspace(const Matrix& a) {
    Matrix r = a;
    const auto pivots = row_reduce(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix basis(a.cols(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        basis.set(free[j], j, Fp::raw(1));
        for (std::size_t i = 0; i < pivots.size(); ++i) basis.set(pivots[i], j, -r(i, free[j]));
    }
    return basis;
}

std::vector<std::size_t> complement_coordinates(const Matrix& span) {
    Matrix t = span.transpose();
    const auto pivots = row_reduce(t);
    std::vector<bool> used(span.rows(), false);
    for (auto p : pivots) used[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < span.rows(); ++i)
        if (!used[i]) out.push_back(i);
    return out;
}

namespace {

// Incremental echelon basis of row vectors; reduce() clears the pivot
// positions of a candidate against every stored vector.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    bool insert(std::vector<std::uint32_t> v) {
        const auto& k = simd::active();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Fp f = Fp::raw(v[pivots_[i]]);
            if (!f.is_zero()) k.axpy(v.data(), rows_[i].data(), (-f).value(), dim_);
        }
        std::size_t p = 0;
        while (p < dim_ && v[p] == 0) ++p;
        if (p == dim_) return false;
        k.scale(v.data(), Fp::raw(v[p]).inverse().value(), dim_);
        for (auto& row : rows_) {
            const Fp f = Fp::raw(row[p]);
            if (!f.is_zero()) k.axpy(row.data(), v.data(), (-f).value(), dim_);
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

std::vector<std::uint32_t> column_vector(const Matrix& m, std::size_t c) {
    std::vector<std::uint32_t> v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c).value();
    return v;
}

}  // namespace

std::vector<std::size_t> independent_columns_modulo(const Matrix& base, const Matrix& candidates) {
    EchelonBasis eb(candidates.rows());
    for (std::size_t c = 0; c < base.cols(); ++c) eb.insert(column_vector(base, c));
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < candidates.cols(); ++c)
        if (eb.insert(column_vector(candidates, c))) out.push_back(c);
    return out;
}

Matrix coordinates_in_basis(const Matrix& basis, const Matrix& target) {
    const std::size_t k = basis.cols();
    Matrix aug = hconcat({basis, target}, basis.rows());
    const auto pivots = row_reduce(aug);
    if (pivots.size() < k || (k > 0 && pivots[k - 1] != k - 1))
        throw InvariantViolation("coordinates_in_basis: basis columns are dependent");
    if (pivots.size() > k) throw InvariantViolation("coordinates_in_basis: target outside span");
    Matrix out(k, target.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < target.cols(); ++j) out.set(i, j, aug(i, k + j));
    return out;
}

}  // namespace tame
