#pragma once

#include "xiknot/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace xiknot {

// Small dense matrix with exact entries.  Row-major, 0-indexed.
template <class T>
struct Mat {
    int r = 0, c = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int rows, int cols) : r(rows), c(cols), a(static_cast<size_t>(rows) * cols, T(0)) {}

    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        r = static_cast<int>(rows.size());
        c = r ? static_cast<int>(rows.begin()->size()) : 0;
        a.reserve(static_cast<size_t>(r) * c);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged matrix literal");
            for (const auto& x : row) a.push_back(x);
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * c + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * c + j]; }

    Mat transpose() const {
        Mat m(c, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Mat operator*(const Mat& o) const {
        if (c != o.r) throw std::invalid_argument("matrix product shape mismatch");
        Mat m(r, o.c);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < c; ++k) {
                const T& x = (*this)(i, k);
                if (x == T(0)) continue;
                for (int j = 0; j < o.c; ++j) m(i, j) += x * o(k, j);
            }
        return m;
    }

    Mat operator+(const Mat& o) const {
        if (r != o.r || c != o.c) throw std::invalid_argument("matrix sum shape mismatch");
        Mat m(r, c);
        for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k] + o.a[k];
        return m;
    }

    Mat operator-(const Mat& o) const {
        if (r != o.r || c != o.c) throw std::invalid_argument("matrix difference shape mismatch");
        Mat m(r, c);
        for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k] - o.a[k];
        return m;
    }

    Mat operator*(const T& s) const {
        Mat m(r, c);
        for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k] * s;
        return m;
    }

    bool operator==(const Mat& o) const { return r == o.r && c == o.c && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rat(const IntMat& m) {
    RatMat q(m.r, m.c);
    for (int i = 0; i < m.r; ++i)
        for (int j = 0; j < m.c; ++j) q(i, j) = Rat(m(i, j));
    return q;
}

inline Rat det(RatMat m) {
    if (m.r != m.c) throw std::invalid_argument("det: square matrix required");
    Rat d(1);
    for (int k = 0; k < m.r; ++k) {
        int piv = -1;
        for (int i = k; i < m.r; ++i)
            if (m(i, k) != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != k) {
            for (int j = k; j < m.c; ++j) std::swap(m(piv, j), m(k, j));
            d = -d;
        }
        d *= m(k, k);
        for (int i = k + 1; i < m.r; ++i) {
            if (m(i, k) == 0) continue;
            Rat f = m(i, k) / m(k, k);
            for (int j = k; j < m.c; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return d;
}

inline Rat det(const IntMat& m) { return det(to_rat(m)); }

}  // namespace xiknot
