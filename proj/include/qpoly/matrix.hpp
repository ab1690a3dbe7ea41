#pragma once

#include <vector>

#include "qpoly/quadratic.hpp"

namespace qpoly {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T fill = T())
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw InvalidParameters("ragged initializer");
            e_.insert(e_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; i++) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; i++)
            for (std::size_t j = 0; j < cols_; j++) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw InvalidParameters("dimension mismatch in product");
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; i++)
            for (std::size_t k = 0; k < x.cols_; k++) {
                const T& a = x(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < y.cols_; j++) r(i, j) += a * y(k, j);
            }
        return r;
    }

    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw InvalidParameters("dimension mismatch");
        Matrix r = x;
        for (std::size_t i = 0; i < r.e_.size(); i++) r.e_[i] -= y.e_[i];
        return r;
    }

    friend Matrix operator*(const T& c, const Matrix& m) {
        Matrix r = m;
        for (auto& v : r.e_) v *= c;
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> e_;
};

using QMat = Matrix<Quad>;

/// Determinant by fraction-free (Bareiss) elimination.
Quad det(QMat m);

/// Exact inverse via fraction-free Gauss-Jordan elimination.
/// Throws SingularMatrixError with the zero-pivot stage.
QMat inverse(const QMat& m);

/// Solves a X = b for X with a square invertible; exact.
QMat solve(const QMat& a, const QMat& b);

/// Basis of the right null space, one vector per column.
QMat right_nullspace(const QMat& m);

/// Coefficients of det(xI - M), ascending degree; last entry is 1.
std::vector<Quad> charpoly(const QMat& m);

/// Rows are left eigenvectors for the given eigenvalues, each normalized so
/// its first nonzero entry is 1. Row order follows the eigenvalue order.
/// Throws if an eigenspace is not one-dimensional.
QMat left_eigenvectors_normalized(const QMat& m, const std::vector<Quad>& eigenvalues);

/// Common radicand of all entries (0 if rational); throws on mixed fields.
Int matrix_radicand(const QMat& m);

}  // namespace qpoly
