#include "qpoly/matrix.hpp"

namespace qpoly {

Quad det(QMat m) {
    std::size_t n = m.rows();
    if (n != m.cols()) throw InvalidParameters("determinant of non-square matrix");
    if (n == 0) return Quad(1);
    Quad prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; k++) {
        if (m(k, k) == Quad(0)) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == Quad(0)) p++;
            if (p == n) return Quad(0);
            for (std::size_t j = k; j < n; j++) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; i++) {
            for (std::size_t j = k + 1; j < n; j++)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = Quad(0);
        }
        prev = m(k, k);
    }
    Quad d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

QMat inverse(const QMat& m) {
    std::size_t n = m.rows();
    if (n != m.cols()) throw InvalidParameters("inverse of non-square matrix");
    // Fraction-free Gauss-Jordan on [M | I]: after the pass the left block is
    // pivot-diagonal and the right block is the scaled inverse.
    QMat w(n, 2 * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) w(i, j) = m(i, j);
        w(i, n + i) = Quad(1);
    }
    Quad prev(1);
    for (std::size_t k = 0; k < n; k++) {
        if (w(k, k) == Quad(0)) {
            std::size_t p = k + 1;
            while (p < n && w(p, k) == Quad(0)) p++;
            if (p == n) throw SingularMatrixError(k);
            for (std::size_t j = 0; j < 2 * n; j++) std::swap(w(k, j), w(p, j));
        }
        for (std::size_t i = 0; i < n; i++) {
            if (i == k) continue;
            for (std::size_t j = 0; j < 2 * n; j++) {
                if (j == k) continue;
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
            }
            w(i, k) = Quad(0);
        }
        prev = w(k, k);
    }
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++) inv(i, j) = w(i, n + j) / prev;
    return inv;
}

QMat solve(const QMat& a, const QMat& b) { return inverse(a) * b; }

QMat right_nullspace(const QMat& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    QMat w = m;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; c++) {
        std::size_t p = r;
        while (p < rows && w(p, c) == Quad(0)) p++;
        if (p == rows) continue;
        for (std::size_t j = 0; j < cols; j++) std::swap(w(r, j), w(p, j));
        Quad piv = w(r, c);
        for (std::size_t j = 0; j < cols; j++) w(r, j) /= piv;
        for (std::size_t i = 0; i < rows; i++) {
            if (i == r || w(i, c) == Quad(0)) continue;
            Quad f = w(i, c);
            for (std::size_t j = 0; j < cols; j++) w(i, j) -= f * w(r, j);
        }
        pivot_col.push_back(c);
        r++;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    QMat basis(cols, cols - r);
    std::size_t bj = 0;
    for (std::size_t c = 0; c < cols; c++) {
        if (is_pivot[c]) continue;
        basis(c, bj) = Quad(1);
        for (std::size_t i = 0; i < pivot_col.size(); i++) basis(pivot_col[i], bj) = -w(i, c);
        bj++;
    }
    return basis;
}

std::vector<Quad> charpoly(const QMat& m) {
    std::size_t n = m.rows();
    if (n != m.cols()) throw InvalidParameters("charpoly of non-square matrix");
    // Faddeev-LeVerrier.
    std::vector<Quad> c(n + 1);
    c[n] = Quad(1);
    QMat b = m;
    for (std::size_t k = 1; k <= n; k++) {
        Quad tr(0);
        for (std::size_t i = 0; i < n; i++) tr += b(i, i);
        c[n - k] = -(tr / Quad(Rat(static_cast<long>(k))));
        if (k == n) break;
        for (std::size_t i = 0; i < n; i++) b(i, i) += c[n - k];
        b = m * b;
    }
    return c;
}

QMat left_eigenvectors_normalized(const QMat& m, const std::vector<Quad>& eigenvalues) {
    std::size_t n = m.rows();
    if (eigenvalues.size() != n) throw InvalidParameters("need one eigenvalue per row");
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = i + 1; j < n; j++)
            if (eigenvalues[i] == eigenvalues[j])
                throw InvalidParameters("repeated eigenvalue " + eigenvalues[i].str());
    QMat rows(n, n);
    QMat mt = m.transpose();
    for (std::size_t r = 0; r < n; r++) {
        QMat shifted = mt;
        for (std::size_t i = 0; i < n; i++) shifted(i, i) -= eigenvalues[r];
        QMat ns = right_nullspace(shifted);
        if (ns.cols() != 1)
            throw InvalidParameters("eigenspace of " + eigenvalues[r].str() +
                                    " has dimension " + std::to_string(ns.cols()));
        std::size_t lead = 0;
        while (lead < n && ns(lead, 0) == Quad(0)) lead++;
        Quad scale = ns(lead, 0);
        for (std::size_t j = 0; j < n; j++) rows(r, j) = ns(j, 0) / scale;
    }
    return rows;
}

Int matrix_radicand(const QMat& m) {
    Int d = 0;
    for (std::size_t i = 0; i < m.rows(); i++)
        for (std::size_t j = 0; j < m.cols(); j++) {
            const Int& e = m(i, j).radicand();
            if (e == 0) continue;
            if (d == 0)
                d = e;
            else if (d != e)
                throw ArithmeticError("matrix entries in different quadratic fields");
        }
    return d;
}

}  // namespace qpoly
