#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "octmod/errors.hpp"
#include "octmod/rational.hpp"

namespace octmod {

using Vec = std::vector<Rational>;

/// Dense matrix of exact rationals, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    [[nodiscard]] static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    [[nodiscard]] Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    [[nodiscard]] const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    [[nodiscard]] bool operator==(const Matrix& o) const = default;

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }

    Matrix& operator*=(const Rational& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    [[nodiscard]] friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    [[nodiscard]] friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    [[nodiscard]] friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

    [[nodiscard]] friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product: inner dimensions differ");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b.at(k, j);
                    if (is_zero(bkj)) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        }
        return r;
    }

    [[nodiscard]] Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw ShapeError("matrix apply: size mismatch");
        Vec out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                const Rational& m = at(i, j);
                if (!is_zero(m) && !is_zero(v[j])) acc += m * v[j];
            }
            out[i] = std::move(acc);
        }
        return out;
    }

    [[nodiscard]] Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        }
        return t;
    }

    [[nodiscard]] bool is_zero_matrix() const {
        for (const auto& x : a_) {
            if (!is_zero(x)) return false;
        }
        return true;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

namespace detail {

/// In-place reduced row echelon form; returns the pivot columns.
/// Pivot choice prefers entries with numerator and denominator 1 to keep
/// intermediate values small.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = m.rows();
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (is_zero(m.at(r, col))) continue;
            if (pivot == m.rows()) pivot = r;
            const Rational& x = m.at(r, col);
            if (numerator(x) == 1 || numerator(x) == -1) {
                if (denominator(x) == 1) {
                    pivot = r;
                    break;
                }
            }
        }
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        }
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
            if (!is_zero(m.at(row, c))) m.at(row, c) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            const Rational factor = m.at(r, col);
            if (is_zero(factor)) continue;
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!is_zero(m.at(row, c))) m.at(r, c) -= factor * m.at(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

[[nodiscard]] inline std::size_t rank(Matrix m) { return detail::rref(m).size(); }

/// Basis of the null space {v : Mv = 0}, one vector per free column.
[[nodiscard]] inline std::vector<Vec> kernel_basis(Matrix m) {
    const std::size_t n = m.cols();
    const std::vector<std::size_t> pivots = detail::rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(n);
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -m.at(i, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of the column space: the pivot columns of the original matrix.
[[nodiscard]] inline std::vector<Vec> image_basis(const Matrix& m) {
    Matrix r = m;
    const std::vector<std::size_t> pivots = detail::rref(r);
    std::vector<Vec> basis;
    basis.reserve(pivots.size());
    for (std::size_t p : pivots) {
        Vec v(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, p);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Packs a list of vectors as matrix columns.
[[nodiscard]] inline Matrix columns_matrix(const std::vector<Vec>& vs, std::size_t dim) {
    Matrix m(dim, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j) {
        if (vs[j].size() != dim) throw ShapeError("columns_matrix: vector length mismatch");
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = vs[j][i];
    }
    return m;
}

/// True when the two vector families span the same subspace of Q^dim.
[[nodiscard]] inline bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim) {
    const Matrix ma = columns_matrix(a, dim);
    const Matrix mb = columns_matrix(b, dim);
    const std::size_t ra = rank(ma);
    const std::size_t rb = rank(mb);
    if (ra != rb) return false;
    Matrix joint(dim, a.size() + b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        for (std::size_t i = 0; i < dim; ++i) joint.at(i, j) = ma.at(i, j);
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t i = 0; i < dim; ++i) joint.at(i, a.size() + j) = mb.at(i, j);
    }
    return rank(joint) == ra;
}

} // namespace octmod
