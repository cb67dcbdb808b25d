#pragma once

#include <assoc/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace assoc {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<RationalVector>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw Error("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    RationalVector row_vector(std::size_t i) const {
        auto r = row(i);
        return {r.begin(), r.end()};
    }

    RationalVector column(std::size_t j) const {
        RationalVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (sgn(x) != 0) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    /// Rows [first, first+count).
    Matrix row_block(std::size_t first, std::size_t count) const {
        Matrix m(count, cols_);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend RationalVector operator*(const Matrix& a, const RationalVector& v) {
        if (a.cols_ != v.size()) throw Error("matrix-vector dimension mismatch");
        RationalVector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    Matrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot is the leftmost nonzero column and the
/// first row holding a nonzero entry there; no magnitude pivoting.
/// Scales a nonzero vector to coprime integers; the zero vector stays zero.
inline IntegerVector primitive_integer_vector(const RationalVector& v) {
    Integer den = 1;
    for (const auto& q : v) den = lcm(den, q.get_den());
    IntegerVector out(v.size());
    Integer content = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        out[j] = Rational(v[j] * den).get_num();
        content = gcd(content, out[j]);
    }
    if (content > 1)
        for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
    return out;
}

namespace detail {

inline void remove_content(IntegerVector& row) {
    Integer content = 0;
    for (const auto& z : row) {
        if (sgn(z) == 0) continue;
        content = gcd(content, z);
        if (content == 1) return;
    }
    if (content > 1)
        for (auto& z : row) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
}

}  // namespace detail

/// Reduced row echelon form. Elimination runs on primitive integer rows so
/// that intermediate entries stay as small as the minors allow.
inline RrefResult rref(Matrix m) {
    std::vector<IntegerVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(primitive_integer_vector(m.row_vector(i)));

    RrefResult out;
    std::size_t lead_row = 0;
    Integer scratch;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[lead_row]);
        const IntegerVector& p = rows[lead_row];

        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == lead_row || sgn(rows[i][col]) == 0) continue;
            Integer factor = rows[i][col];
            IntegerVector& r = rows[i];
            for (std::size_t j = 0; j < r.size(); ++j) {
                r[j] *= p[col];
                if (sgn(p[j]) != 0) {
                    scratch = factor * p[j];
                    r[j] -= scratch;
                }
            }
            detail::remove_content(r);
        }
        out.pivots.push_back(col);
        ++lead_row;
    }
    out.rank = out.pivots.size();

    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < out.rank) {
            const Integer& lead = rows[i][out.pivots[i]];
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = sgn(rows[i][j]) == 0 ? Rational(0) : ratio(rows[i][j], lead);
        } else {
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = 0;
        }
    }
    out.matrix = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Basis of the right nullspace {v : m v = 0}, one vector per row, built
/// from the free columns of the reduced echelon form.
inline Matrix nullspace_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    Matrix basis(free_cols.size(), m.cols());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis(k, f) = 1;
        for (std::size_t i = 0; i < r.rank; ++i) basis(k, r.pivots[i]) = -r.matrix(i, f);
    }
    return basis;
}

inline Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m(pivot, col)) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            m.swap_rows(pivot, col);
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (sgn(m(i, col)) == 0) continue;
            Rational factor = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
        }
    }
    return det;
}

inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult r = rref(std::move(aug));
    if (r.rank < n || r.pivots[n - 1] != n - 1) throw Error("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.matrix(i, n + j);
    return inv;
}

/// Solves m x = b for square invertible m.
inline RationalVector solve(const Matrix& m, const RationalVector& b) {
    return inverse(m) * b;
}

}  // namespace assoc
