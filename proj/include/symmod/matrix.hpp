#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace symmod {

// Minimal dense row-major matrix over an exact or floating scalar.
template <class S>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<S> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, S(0)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    S& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const S& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    Mat operator*(const Mat& o) const {
        if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
        Mat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const S& x = (*this)(i, k);
                if (x == S(0)) continue;
                for (int j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        Mat r = *this;
        for (std::size_t t = 0; t < a.size(); ++t) r.a[t] += o.a[t];
        return r;
    }

    Mat operator-(const Mat& o) const {
        Mat r = *this;
        for (std::size_t t = 0; t < a.size(); ++t) r.a[t] -= o.a[t];
        return r;
    }

    Mat transpose() const {
        Mat r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const S& x : a)
            if (!(x == S(0))) return false;
        return true;
    }
};

template <class S>
S max_abs(const Mat<S>& m) {
    S best(0);
    for (const S& x : m.a) {
        S v = x < S(0) ? S(-x) : x;
        if (best < v) best = v;
    }
    return best;
}

// Rank over a field via Gaussian elimination; exact for rational scalars.
template <class S>
int rank_exact(Mat<S> m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (!(m(r, col) == S(0))) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
        S inv_p = S(1) / m(rank, col);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (m(r, col) == S(0)) continue;
            S f = m(r, col) * inv_p;
            for (int j = col; j < m.cols; ++j) m(r, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Determinant over a field via Gaussian elimination; exact for rational scalars.
template <class S>
S det_exact(Mat<S> m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant needs a square matrix");
    S det(1);
    for (int col = 0; col < m.cols; ++col) {
        int piv = -1;
        for (int r = col; r < m.rows; ++r)
            if (!(m(r, col) == S(0))) {
                piv = r;
                break;
            }
        if (piv < 0) return S(0);
        if (piv != col) {
            for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(col, j));
            det = S(0) - det;
        }
        det *= m(col, col);
        S inv_p = S(1) / m(col, col);
        for (int r = col + 1; r < m.rows; ++r) {
            if (m(r, col) == S(0)) continue;
            S f = m(r, col) * inv_p;
            for (int j = col; j < m.cols; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

} // namespace symmod
